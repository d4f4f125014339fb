#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "biderivations.hpp"
#include "randomgen.hpp"

using namespace conserva;

namespace {

std::vector<Vec> flatten(const std::vector<Tensor3>& ts) {
    std::vector<Vec> out;
    for (const auto& t : ts)
        out.push_back(t.flat());
    return out;
}

Tensor3 random_candidate(Rng& rng, std::size_t m) {
    Tensor3 t(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                t.at(i, j, k) = rng.rational(3);
    return t;
}

} // namespace

TEST_CASE("the three tables admit no nonzero biderivation") {
    for (const char* name : {"W2-conservative", "W2-commutative", "S2"}) {
        const Algebra a = builtin(name);
        CHECK(biderivation_space(a).empty());
        CHECK(symmetric_biderivation_space(a).empty());
        CHECK(skew_biderivation_space(a).empty());
    }
}

TEST_CASE("zero-product algebras carry every candidate") {
    for (std::size_t m = 2; m <= 4; ++m) {
        const Algebra zp = zero_product_algebra(m);
        CHECK(biderivation_space(zp).size() == m * m * m);
        CHECK(symmetric_biderivation_space(zp).size() == m * m * (m + 1) / 2);
        CHECK(skew_biderivation_space(zp).size() == m * m * (m - 1) / 2);
    }
}

TEST_CASE("split on symmetric and skew inputs") {
    Rng rng(1);
    const std::size_t m = 3;
    Tensor3 sym(m), skew(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                const Rational v = rng.rational(3);
                sym.at(i, j, k) = v;
                sym.at(j, i, k) = v;
                if (i != j) {
                    const Rational w = rng.rational(3);
                    skew.at(i, j, k) = w;
                    skew.at(j, i, k) = -w;
                }
            }
    auto [sp, sm] = split_symmetric(sym);
    Tensor3 doubled = sym;
    doubled *= Rational(2);
    CHECK(sp == doubled);
    CHECK(sm.is_zero());
    auto [kp, km] = split_symmetric(skew);
    Tensor3 doubled_skew = skew;
    doubled_skew *= Rational(2);
    CHECK(kp.is_zero());
    CHECK(km == doubled_skew);
}

TEST_CASE("split of a single off-diagonal entry") {
    Tensor3 b(3);
    b.at(0, 1, 0) = Rational(1);  // delta(e1, e2) = e1, nothing else
    auto [plus, minus] = split_symmetric(b);
    CHECK(plus.at(0, 1, 0) == Rational(1));
    CHECK(plus.at(1, 0, 0) == Rational(1));
    CHECK(minus.at(0, 1, 0) == Rational(1));
    CHECK(minus.at(1, 0, 0) == Rational(-1));
}

TEST_CASE("split reconstruction and parity, always") {
    Rng rng(2);
    for (int t = 0; t < 10; ++t) {
        const std::size_t m = 2 + rng.below(3);
        const Tensor3 b = random_candidate(rng, m);
        auto [plus, minus] = split_symmetric(b);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k) {
                    CHECK(b.at(i, j, k) ==
                          (plus.at(i, j, k) + minus.at(i, j, k)) / Rational(2));
                    CHECK(plus.at(i, j, k) == plus.at(j, i, k));
                    CHECK(minus.at(i, j, k) == -minus.at(j, i, k));
                }
    }
}

TEST_CASE("solution spaces are closed under the split") {
    Rng rng(3);
    std::vector<Algebra> algebras{zero_product_algebra(3)};
    for (int t = 0; t < 6; ++t)
        algebras.push_back(random_four_nilpotent_algebra(rng, 3 + t % 2));
    for (const auto& a : algebras) {
        for (const auto& b : biderivation_space(a)) {
            CHECK(satisfies_biderivation_identities(a, b));
            auto [plus, minus] = split_symmetric(b);
            CHECK(satisfies_biderivation_identities(a, plus));
            CHECK(satisfies_biderivation_identities(a, minus));
        }
    }
}

TEST_CASE("symmetric and skew solutions solve the unconstrained system") {
    Rng rng(4);
    for (int t = 0; t < 6; ++t) {
        const Algebra a = t == 0 ? zero_product_algebra(3) : random_algebra(rng, 2 + t % 3);
        const auto full = flatten(biderivation_space(a));
        const std::size_t ambient = a.dim() * a.dim() * a.dim();
        for (const auto& b : symmetric_biderivation_space(a)) {
            CHECK(satisfies_biderivation_identities(a, b));
            CHECK(subspace_contains(full, {b.flat()}, ambient));
        }
        for (const auto& b : skew_biderivation_space(a)) {
            CHECK(satisfies_biderivation_identities(a, b));
            CHECK(subspace_contains(full, {b.flat()}, ambient));
        }
    }
}

TEST_CASE("direct sum decomposition") {
    for (const char* name : {"W2-conservative", "W2-commutative", "S2"})
        CHECK(direct_sum_check(builtin(name)));
    for (std::size_t m = 2; m <= 4; ++m)
        CHECK(direct_sum_check(zero_product_algebra(m)));
    Rng rng(5);
    for (int t = 0; t < 12; ++t)
        CHECK(direct_sum_check(random_algebra(rng, 2 + t % 3)));
}

TEST_CASE("first-argument slices of solutions are derivations") {
    Rng rng(6);
    std::vector<Algebra> algebras{zero_product_algebra(3)};
    for (int t = 0; t < 8; ++t)
        algebras.push_back(random_algebra(rng, 2 + t % 2));
    for (const auto& a : algebras)
        CHECK(slices_lie_in_derivation_span(a, biderivation_space(a)));
}

TEST_CASE("residual checker rejects non-solutions") {
    const Algebra s2 = builtin("S2");
    Tensor3 junk(4);
    junk.at(0, 0, 0) = Rational(1);
    CHECK_FALSE(satisfies_biderivation_identities(s2, junk));
}
