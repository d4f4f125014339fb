#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kantor.hpp"
#include "randomgen.hpp"

using namespace conserva;

namespace {

BilinearMap random_map(Rng& rng, std::size_t n) {
    BilinearMap t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                t.at(i, j, k) = rng.rational(3);
    return t;
}

BilinearMap negated(BilinearMap t) {
    t *= Rational(-1);
    return t;
}

const Vec v1{Rational(1), Rational(0)};

} // namespace

TEST_CASE("bracket with the identity negates") {
    Rng rng(31337);
    const RatMatrix id2 = RatMatrix::identity(2);
    for (int t = 0; t < 100; ++t) {
        const BilinearMap n = random_map(rng, 2);
        CHECK(bracket(id2, n) == negated(n));
    }
}

TEST_CASE("bracket zero cases") {
    Rng rng(8);
    const BilinearMap n = random_map(rng, 3);
    CHECK(bracket(RatMatrix(3, 3), n).is_zero());
    CHECK(bracket(random_matrix(rng, 3, 3), BilinearMap(3)).is_zero());
}

TEST_CASE("bracket of E11 with B(1,1,1)") {
    // By hand on all four basis pairs: only (v1, v1) contributes
    // M(N(v1,v1)) - N(Mv1, v1) - N(v1, Mv1) = v1 - v1 - v1 = -v1.
    RatMatrix e11(2, 2);
    e11.at(0, 0) = Rational(1);
    const BilinearMap b111 = elementary_map(2, 0, 0, 0);
    CHECK(bracket(e11, b111) == negated(b111));
}

TEST_CASE("bracket is bilinear in both slots") {
    Rng rng(99);
    const std::size_t n = 2;
    const RatMatrix m1 = random_matrix(rng, n, n), m2 = random_matrix(rng, n, n);
    const BilinearMap t1 = random_map(rng, n), t2 = random_map(rng, n);
    const Rational a = rng.rational(3), b = rng.rational(3);

    RatMatrix mc = m1;
    RatMatrix m2s = m2;
    mc *= a;
    m2s *= b;
    mc += m2s;
    BilinearMap lhs = bracket(m1, t1);
    lhs *= a;
    BilinearMap rhs = bracket(m2, t1);
    rhs *= b;
    lhs += rhs;
    CHECK(bracket(mc, t1) == lhs);

    BilinearMap tc = t1;
    BilinearMap t2s = t2;
    tc *= a;
    t2s *= b;
    tc += t2s;
    BilinearMap lhs2 = bracket(m1, t1);
    lhs2 *= a;
    BilinearMap rhs2 = bracket(m1, t2);
    rhs2 *= b;
    lhs2 += rhs2;
    CHECK(bracket(m1, tc) == lhs2);
}

TEST_CASE("kantor product is bilinear in both slots for fixed e") {
    Rng rng(1212);
    const BilinearMap m1 = random_map(rng, 2), m2 = random_map(rng, 2);
    const BilinearMap n1 = random_map(rng, 2), n2 = random_map(rng, 2);
    const Rational a = rng.rational(3), b = rng.rational(3);

    BilinearMap mc = m1, ms = m2;
    mc *= a;
    ms *= b;
    mc += ms;
    BilinearMap lhs = kantor_product(m1, n1, v1), rhs = kantor_product(m2, n1, v1);
    lhs *= a;
    rhs *= b;
    lhs += rhs;
    CHECK(kantor_product(mc, n1, v1) == lhs);

    BilinearMap nc = n1, ns = n2;
    nc *= a;
    ns *= b;
    nc += ns;
    BilinearMap lhs2 = kantor_product(m1, n1, v1), rhs2 = kantor_product(m1, n2, v1);
    lhs2 *= a;
    rhs2 *= b;
    lhs2 += rhs2;
    CHECK(kantor_product(m1, nc, v1) == lhs2);
}

TEST_CASE("kantor product zero cases") {
    Rng rng(5);
    const BilinearMap n = random_map(rng, 2);
    CHECK(kantor_product(BilinearMap(2), n, v1).is_zero());
    CHECK(kantor_product(n, BilinearMap(2), v1).is_zero());
}

TEST_CASE("kantor product reduces to the bracket when L_M e is the identity") {
    // M = B(1,1,1) + B(1,2,2) sends (v1, u) to u, so L_M v1 = id.
    BilinearMap m = elementary_map(2, 0, 0, 0);
    m += elementary_map(2, 0, 1, 1);
    CHECK(left_mul_map(m, v1) == RatMatrix::identity(2));
    Rng rng(6);
    for (int t = 0; t < 20; ++t) {
        const BilinearMap n = random_map(rng, 2);
        CHECK(kantor_product(m, n, v1) == bracket(RatMatrix::identity(2), n));
        CHECK(kantor_product(m, n, v1) == negated(n));
    }
}

TEST_CASE("construction dimensions") {
    CHECK(build_wn(2, v1).result.dim() == 8);
    CHECK(build_wn(1, {Rational(1)}).result.dim() == 1);
    CHECK_THROWS_AS(build_wn(2, {Rational(0), Rational(0)}), Error);
    CHECK_THROWS_AS(build_wn(0, {}), Error);
    CHECK_THROWS_AS(build_wn(2, {Rational(1)}), Error);
}

TEST_CASE("B(1,1,1) squares to its own negative") {
    const WnAlgebra w = build_wn(2, v1);
    const std::size_t p = wn_basis_index(2, 0, 0, 0);
    const Element prod = w.result.multiply(w.result.basis_element(p), w.result.basis_element(p));
    Element expect(8);
    expect[p] = Rational(-1);
    CHECK(prod == expect);
}

TEST_CASE("structure constants agree with direct product evaluation") {
    const WnAlgebra w = build_wn(2, v1);
    for (std::size_t p = 0; p < 8; ++p)
        for (std::size_t q = 0; q < 8; ++q) {
            const BilinearMap mp = wn_map_of(2, w.result.basis_element(p));
            const BilinearMap mq = wn_map_of(2, w.result.basis_element(q));
            CHECK(w.result.multiply(w.result.basis_element(p), w.result.basis_element(q)) ==
                  wn_element_of(kantor_product(mp, mq, w.e)));
        }
}

TEST_CASE("commutative and trace-zero subspaces") {
    const WnAlgebra w = build_wn(2, v1);
    const auto sym = symmetric_subspace(w);
    const auto tz = trace_zero_subspace(w);
    CHECK(sym.size() == 6);
    CHECK(tz.size() == 4);
    CHECK(symmetric_subspace(build_wn(1, {Rational(1)})).size() == 1);

    for (const auto& t : sym)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t k = 0; k < 2; ++k)
                    CHECK(t.at(i, j, k) == t.at(j, i, k));
    for (const auto& t : tz)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK((t.at(j, 0, 0) + t.at(j, 1, 1)).is_zero());

    std::vector<Vec> sym_span, tz_span;
    for (const auto& t : sym)
        sym_span.push_back(t.flat());
    for (const auto& t : tz)
        tz_span.push_back(t.flat());
    // the zero map lies in both
    CHECK(subspace_contains(tz_span, {Vec(8)}, 8));
    // trace-zero sits inside commutative
    CHECK(subspace_contains(sym_span, tz_span, 8));
    // closure under the product, exhaustively over basis pairs
    for (const auto& p : sym)
        for (const auto& q : sym)
            CHECK(subspace_contains(sym_span, {kantor_product(p, q, w.e).flat()}, 8));
    for (const auto& p : tz)
        for (const auto& q : tz)
            CHECK(subspace_contains(tz_span, {kantor_product(p, q, w.e).flat()}, 8));
}

TEST_CASE("witness solver on the zero-product algebra") {
    const Algebra zp = zero_product_algebra(3);
    const auto f = find_associated_f(zp);
    REQUIRE(f);
    CHECK(f->is_zero());
    CHECK(witness_identity_holds(zp, *f));
}

TEST_CASE("witness solver certifies 4-nilpotent algebras with F = 0") {
    Rng rng(4444);
    for (std::size_t dim = 2; dim <= 5; ++dim) {
        const Algebra nil = random_four_nilpotent_algebra(rng, dim);
        REQUIRE(product_power_vanishes(nil, 4));
        const auto f = find_associated_f(nil);
        REQUIRE(f);
        CHECK(f->is_zero());
        CHECK(witness_identity_holds(nil, Tensor3(dim)));
    }
}

TEST_CASE("witness exists for the table algebra and is reproducible") {
    const Algebra w = builtin("W2-conservative");
    const auto f = find_associated_f(w);
    REQUIRE(f);
    CHECK(witness_identity_holds(w, *f));
    const auto again = find_associated_f(w);
    REQUIRE(again);
    CHECK(*again == *f);
    // the witness is not unique: e4 annihilates everything on the left, so
    // shifting F(e1,e1) by e4 stays valid, while shifting by e1 breaks it
    Tensor3 shifted = *f;
    shifted.at(0, 0, 3) += Rational(1);
    CHECK(witness_identity_holds(w, shifted));
    Tensor3 broken = *f;
    broken.at(0, 0, 0) += Rational(1);
    CHECK_FALSE(witness_identity_holds(w, broken));
}
