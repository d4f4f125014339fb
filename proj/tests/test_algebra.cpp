#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algebra.hpp"
#include "randomgen.hpp"

using namespace conserva;

namespace {

Element elem(const Algebra& a, std::initializer_list<std::pair<std::size_t, long>> coords) {
    Element x(a.dim());
    for (const auto& [i, v] : coords)
        x[i] = Rational(v);
    return x;
}

} // namespace

TEST_CASE("builtin dimensions and labels") {
    CHECK(builtin("S2").dim() == 4);
    CHECK(builtin("W2-commutative").dim() == 6);
    CHECK(builtin("W2-conservative").dim() == 8);
    CHECK(builtin("S2").basis_labels()[0] == "z1");
    CHECK(builtin("W2-commutative").basis_labels()[5] == "xi6");
    CHECK_THROWS_AS(builtin("nosuch"), Error);
}

TEST_CASE("table products of W2-conservative") {
    const Algebra a = builtin("W2-conservative");
    // e1*e1 = -e1
    CHECK(a.multiply(a.basis_element(0), a.basis_element(0)) == elem(a, {{0, -1}}));
    // row e3 is zero
    CHECK(a.multiply(a.basis_element(2), a.basis_element(4)) == a.zero());
    // e2*e5 = e1 - e6 - e7
    CHECK(a.multiply(a.basis_element(1), a.basis_element(4)) ==
          elem(a, {{0, 1}, {5, -1}, {6, -1}}));
    // 0 * y = 0
    CHECK(a.multiply(a.zero(), a.basis_element(3)) == a.zero());
}

TEST_CASE("left multiplication matrices") {
    const Algebra s2 = builtin("S2");
    const RatMatrix l1 = s2.left_mul_matrix(s2.basis_element(0));
    RatMatrix expect(4, 4);
    expect.at(0, 0) = Rational(-1);
    expect.at(1, 1) = Rational(1);
    expect.at(2, 2) = Rational(3);
    expect.at(3, 3) = Rational(-3);
    CHECK(l1 == expect);

    const Algebra w = builtin("W2-conservative");
    CHECK(w.left_mul_matrix(w.zero()) == RatMatrix(8, 8));
    // row e6: columns e2 -> -e2, e3 -> -e3, e4 -> -2e4, e5 -> e5, e8 -> -e8
    const RatMatrix l6 = w.left_mul_matrix(w.basis_element(5));
    RatMatrix e6(8, 8);
    e6.at(1, 1) = Rational(-1);
    e6.at(2, 2) = Rational(-1);
    e6.at(3, 3) = Rational(-2);
    e6.at(4, 4) = Rational(1);
    e6.at(7, 7) = Rational(-1);
    CHECK(l6 == e6);
}

TEST_CASE("multiply is bilinear and matches left_mul_matrix") {
    Rng rng(2024);
    for (const char* name : {"W2-conservative", "W2-commutative", "S2"}) {
        const Algebra a = builtin(name);
        const std::size_t m = a.dim();
        for (int t = 0; t < 10; ++t) {
            const Element x = random_element(rng, m);
            const Element xp = random_element(rng, m);
            const Element y = random_element(rng, m);
            const Rational alpha = rng.rational(3), beta = rng.rational(3);
            Element combo(m);
            for (std::size_t i = 0; i < m; ++i)
                combo[i] = alpha * x[i] + beta * xp[i];
            Element expect(m);
            const Element p1 = a.multiply(x, y), p2 = a.multiply(xp, y);
            for (std::size_t i = 0; i < m; ++i)
                expect[i] = alpha * p1[i] + beta * p2[i];
            CHECK(a.multiply(combo, y) == expect);
            CHECK(a.left_mul_matrix(x).apply(y) == a.multiply(x, y));
        }
    }
}

TEST_CASE("table symmetry status is recorded, not assumed") {
    // The elements of these algebras are commutative multiplications; the
    // table products themselves need not be symmetric, and as printed they
    // are not.
    const bool w2_comm = builtin("W2-commutative").table_is_commutative();
    const bool s2_comm = builtin("S2").table_is_commutative();
    MESSAGE("W2-commutative table symmetric: ", w2_comm);
    MESSAGE("S2 table symmetric: ", s2_comm);
    CHECK(zero_product_algebra(3).table_is_commutative());
}

TEST_CASE("json round trip") {
    for (const char* name : {"W2-conservative", "W2-commutative", "S2"}) {
        const Algebra a = builtin(name);
        const Algebra back = load_algebra(save_algebra(a));
        CHECK(back.name() == a.name());
        CHECK(back.basis_labels() == a.basis_labels());
        CHECK(back.structure() == a.structure());
        CHECK(save_algebra(back) == save_algebra(a));
    }
}

TEST_CASE("sparse structure convention") {
    const Algebra a = load_algebra(R"({
        "name": "tiny", "dim": 2, "basis": ["u", "v"],
        "structure": [[1, 1, 2, "1/2"]]
    })");
    CHECK(a.multiply(a.basis_element(0), a.basis_element(0)) ==
          Element{Rational(0), Rational(1, 2)});
    CHECK(a.multiply(a.basis_element(1), a.basis_element(1)) == a.zero());
}

TEST_CASE("document validation errors") {
    CHECK_THROWS_AS(load_algebra("not json"), Error);
    CHECK_THROWS_AS(load_algebra(R"({"name":"x","dim":2,"basis":["a","b"]})"), Error);
    // invalid rational "1/0"
    CHECK_THROWS_AS(load_algebra(R"({"name":"x","dim":1,"basis":["a"],
        "structure":[[1,1,1,"1/0"]]})"),
                    Error);
    // decimals are rejected
    CHECK_THROWS_AS(load_algebra(R"({"name":"x","dim":1,"basis":["a"],
        "structure":[[1,1,1,"0.5"]]})"),
                    Error);
    // out-of-range index
    CHECK_THROWS_AS(load_algebra(R"({"name":"x","dim":1,"basis":["a"],
        "structure":[[1,2,1,"1"]]})"),
                    Error);
    // basis count mismatch
    CHECK_THROWS_AS(load_algebra(R"({"name":"x","dim":2,"basis":["a"],"structure":[]})"), Error);
    // duplicate labels
    CHECK_THROWS_AS(load_algebra(R"({"name":"x","dim":2,"basis":["a","a"],"structure":[]})"),
                    Error);
    // duplicate triple
    CHECK_THROWS_AS(load_algebra(R"({"name":"x","dim":1,"basis":["a"],
        "structure":[[1,1,1,"1"],[1,1,1,"2"]]})"),
                    Error);
}

TEST_CASE("algebra-dir override falls back per name") {
    CHECK(builtin("S2", "/nonexistent-dir").dim() == 4);
}

TEST_CASE("dimension mismatch on foreign elements") {
    const Algebra a = builtin("S2");
    CHECK_THROWS_AS(a.multiply(Element(3), a.basis_element(0)), Error);
    CHECK_THROWS_AS(a.left_mul_matrix(Element(5)), Error);
}

TEST_CASE("power series detects nilpotency") {
    Rng rng(555);
    for (std::size_t dim = 2; dim <= 6; ++dim) {
        const Algebra nil = random_four_nilpotent_algebra(rng, dim);
        CHECK(product_power_vanishes(nil, 4));
    }
    // the builtin tables are nowhere near nilpotent
    CHECK_FALSE(product_power_vanishes(builtin("S2"), 4));
    CHECK(product_power_vanishes(zero_product_algebra(3), 2));
}

TEST_CASE("element rendering") {
    const Algebra a = builtin("W2-conservative");
    CHECK(format_element(a, a.zero()) == "0");
    CHECK(format_element(a, elem(a, {{0, 1}, {5, -1}, {6, -1}})) == "e1 - e6 - e7");
    Element x = a.zero();
    x[3] = Rational(-3, 2);
    CHECK(format_element(a, x) == "-3/2*e4");
}
