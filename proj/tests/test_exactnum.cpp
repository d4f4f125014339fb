#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "linalg.hpp"
#include "randomgen.hpp"

using namespace conserva;

namespace {

RatMatrix make(std::size_t rows, std::size_t cols, std::initializer_list<long> vals) {
    Vec v;
    for (long x : vals)
        v.push_back(Rational(x));
    return RatMatrix::from_flat(rows, cols, std::move(v));
}

Vec vec(std::initializer_list<long> vals) {
    Vec v;
    for (long x : vals)
        v.push_back(Rational(x));
    return v;
}

} // namespace

TEST_CASE("rational construction and canonical form") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");  // denominator kept positive
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("+5/10") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("0.5"), Error);
    CHECK_THROWS_AS(Rational::parse(""), Error);
    CHECK_THROWS_AS(Rational::parse("1/"), Error);
    CHECK_THROWS_AS(Rational::parse("a"), Error);
    // big values stay exact
    CHECK(Rational::parse("123456789012345678901234567890/2").str() ==
          "61728394506172839450617283945");
}

TEST_CASE("rational arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK((-a).str() == "-1/3");
    CHECK_THROWS_AS(a / Rational(0), Error);
}

TEST_CASE("rref of the identity") {
    auto [r, pivots] = rref(RatMatrix::identity(2));
    CHECK(r == RatMatrix::identity(2));
    CHECK(pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref of a zero matrix") {
    auto [r, pivots] = rref(RatMatrix(3, 2));
    CHECK(r == RatMatrix(3, 2));
    CHECK(pivots.empty());
}

TEST_CASE("rref of a rank-1 matrix") {
    auto [r, pivots] = rref(make(2, 2, {2, 4, 1, 2}));
    CHECK(r == make(2, 2, {1, 2, 0, 0}));
    CHECK(pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel of the identity is empty") {
    for (std::size_t m : {1, 3, 5})
        CHECK(kernel_basis(RatMatrix::identity(m)).empty());
}

TEST_CASE("kernel of a zero row is the standard basis") {
    const auto basis = kernel_basis(RatMatrix(1, 3));
    REQUIRE(basis.size() == 3);
    CHECK(basis[0] == vec({1, 0, 0}));
    CHECK(basis[1] == vec({0, 1, 0}));
    CHECK(basis[2] == vec({0, 0, 1}));
}

TEST_CASE("canonical kernel vector of [1 2]") {
    const auto basis = kernel_basis(make(1, 2, {1, 2}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == vec({-2, 1}));
}

TEST_CASE("subspace_equal on hand-checked spans") {
    CHECK(subspace_equal({vec({1, 0})}, {vec({2, 0})}, 2));
    CHECK_FALSE(subspace_equal({vec({1, 0})}, {vec({0, 1})}, 2));
    CHECK(subspace_equal({vec({1, 1}), vec({1, -1})}, {vec({1, 0}), vec({0, 1})}, 2));
    CHECK(subspace_equal({}, {}, 4));
    CHECK_FALSE(subspace_equal({}, {vec({0, 1})}, 2));
    CHECK_THROWS_AS(subspace_equal({vec({1, 0})}, {vec({1, 0, 0})}, 2), Error);
}

TEST_CASE("solve_particular") {
    // x + 2y = 5, unique-free-var system
    auto sol = solve_particular(make(1, 2, {1, 2}), vec({5}));
    REQUIRE(sol);
    CHECK(*sol == vec({5, 0}));  // free variable pinned to zero
    // inconsistent
    CHECK_FALSE(solve_particular(make(2, 1, {1, 1}), vec({1, 2})));
    // exact full-rank solve
    auto sol2 = solve_particular(make(2, 2, {2, 1, 1, 1}), vec({3, 2}));
    REQUIRE(sol2);
    CHECK(*sol2 == vec({1, 1}));
}

TEST_CASE("rank-nullity and exact kernels on seeded random matrices") {
    Rng rng(12345);
    for (int t = 0; t < 200; ++t) {
        const std::size_t rows = 1 + rng.below(7), cols = 1 + rng.below(7);
        const RatMatrix a = random_matrix(rng, rows, cols);
        const auto kernel = kernel_basis(a);
        CHECK(rank(a) + kernel.size() == cols);
        for (const auto& v : kernel)
            for (const auto& entry : a.apply(v))
                CHECK(entry.is_zero());
    }
}

TEST_CASE("exact elimination survives heavy fraction growth") {
    // Hilbert matrices make floating-point elimination useless; exact
    // arithmetic must recover the all-ones solution perfectly.
    const std::size_t n = 7;
    RatMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h.at(i, j) = Rational(1, static_cast<long>(i + j + 1));
    CHECK(rank(h) == n);
    CHECK(kernel_basis(h).empty());
    Vec ones(n, Rational(1));
    const auto sol = solve_particular(h, h.apply(ones));
    REQUIRE(sol);
    CHECK(*sol == ones);
    const auto [r, pivots] = rref(h);
    CHECK(r == RatMatrix::identity(n));
}

TEST_CASE("rref is idempotent") {
    Rng rng(777);
    for (int t = 0; t < 40; ++t) {
        const RatMatrix a = random_matrix(rng, 1 + rng.below(6), 1 + rng.below(6));
        const auto [r, p1] = rref(a);
        const auto [rr, p2] = rref(r);
        CHECK(r == rr);
        CHECK(p1 == p2);
    }
}

TEST_CASE("rref preserves the row space") {
    Rng rng(4242);
    for (int t = 0; t < 25; ++t) {
        const std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
        const RatMatrix a = random_matrix(rng, rows, cols);
        const auto [r, pivots] = rref(a);
        std::vector<Vec> rows_a, rows_r;
        for (std::size_t i = 0; i < rows; ++i) {
            Vec va, vr;
            for (std::size_t c = 0; c < cols; ++c) {
                va.push_back(a.at(i, c));
                vr.push_back(r.at(i, c));
            }
            rows_a.push_back(std::move(va));
            rows_r.push_back(std::move(vr));
        }
        CHECK(subspace_equal(rows_a, rows_r, cols));
    }
}

TEST_CASE("subspace_equal is an equivalence on random bases") {
    Rng rng(999);
    const std::size_t ambient = 5;
    std::vector<std::vector<Vec>> bases;
    for (int t = 0; t < 12; ++t) {
        std::vector<Vec> basis;
        const std::size_t count = 1 + rng.below(4);
        for (std::size_t i = 0; i < count; ++i)
            basis.push_back(random_element(rng, ambient));
        bases.push_back(std::move(basis));
    }
    for (const auto& b : bases)
        CHECK(subspace_equal(b, b, ambient));  // reflexive
    for (const auto& b1 : bases)
        for (const auto& b2 : bases)
            CHECK(subspace_equal(b1, b2, ambient) == subspace_equal(b2, b1, ambient));
    for (const auto& b1 : bases)
        for (const auto& b2 : bases)
            for (const auto& b3 : bases)
                if (subspace_equal(b1, b2, ambient) && subspace_equal(b2, b3, ambient))
                    CHECK(subspace_equal(b1, b3, ambient));
}
