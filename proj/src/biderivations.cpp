#include "biderivations.hpp"

#include "derivations.hpp"

namespace conserva {

namespace {

enum class Symmetry { none, symmetric, skew };

std::vector<BiderivationCandidate> solve_biderivations(const Algebra& a, Symmetry sym) {
    const std::size_t m = a.dim();
    const Tensor3& c = a.structure();
    const auto idx = [m](std::size_t i, std::size_t j, std::size_t k) {
        return (i * m + j) * m + k;
    };
    RowReducer red(m * m * m);
    RowAccumulator acc;
    for (int identity = 0; identity < 2 && !red.saturated(); ++identity)
        for (std::size_t i = 0; i < m && !red.saturated(); ++i)
            for (std::size_t j = 0; j < m && !red.saturated(); ++j)
                for (std::size_t l = 0; l < m; ++l)
                    for (std::size_t comp = 0; comp < m; ++comp) {
                        if (identity == 0) {
                            // delta(e_i e_j, e_l) - e_i delta(e_j, e_l) - delta(e_i, e_l) e_j
                            for (std::size_t k = 0; k < m; ++k)
                                acc.push(idx(k, l, comp), c.at(i, j, k));
                            for (std::size_t s = 0; s < m; ++s) {
                                acc.push(idx(j, l, s), -c.at(i, s, comp));
                                acc.push(idx(i, l, s), -c.at(s, j, comp));
                            }
                        } else {
                            // delta(e_i, e_j e_l) - e_j delta(e_i, e_l) - delta(e_i, e_j) e_l
                            for (std::size_t k = 0; k < m; ++k)
                                acc.push(idx(i, k, comp), c.at(j, l, k));
                            for (std::size_t s = 0; s < m; ++s) {
                                acc.push(idx(i, l, s), -c.at(j, s, comp));
                                acc.push(idx(i, j, s), -c.at(s, l, comp));
                            }
                        }
                        red.add_row(acc.finish());
                    }
    if (sym != Symmetry::none) {
        const Rational sign = sym == Symmetry::symmetric ? Rational(-1) : Rational(1);
        for (std::size_t i = 0; i < m && !red.saturated(); ++i)
            for (std::size_t j = i; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k) {
                    acc.push(idx(i, j, k), Rational(1));
                    acc.push(idx(j, i, k), sign);
                    red.add_row(acc.finish());
                }
    }
    red.finalize();
    std::vector<BiderivationCandidate> out;
    for (auto& v : red.kernel_basis())
        out.push_back(Tensor3::from_flat(m, std::move(v)));
    return out;
}

} // namespace

std::vector<BiderivationCandidate> biderivation_space(const Algebra& a) {
    return solve_biderivations(a, Symmetry::none);
}

std::vector<BiderivationCandidate> symmetric_biderivation_space(const Algebra& a) {
    return solve_biderivations(a, Symmetry::symmetric);
}

std::vector<BiderivationCandidate> skew_biderivation_space(const Algebra& a) {
    return solve_biderivations(a, Symmetry::skew);
}

std::pair<BiderivationCandidate, BiderivationCandidate>
split_symmetric(const BiderivationCandidate& b) {
    const std::size_t m = b.dim();
    BiderivationCandidate plus(m), minus(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                plus.at(i, j, k) = b.at(i, j, k) + b.at(j, i, k);
                minus.at(i, j, k) = b.at(i, j, k) - b.at(j, i, k);
            }
    return {std::move(plus), std::move(minus)};
}

bool satisfies_biderivation_identities(const Algebra& a, const BiderivationCandidate& b) {
    const std::size_t m = a.dim();
    if (b.dim() != m)
        fail(ErrorCode::dimension_mismatch, "candidate dimension does not match the algebra");
    auto value = [&](const Element& x, const Element& y) {
        Element out(m);
        for (std::size_t i = 0; i < m; ++i) {
            if (x[i].is_zero())
                continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (y[j].is_zero())
                    continue;
                const Rational xy = x[i] * y[j];
                for (std::size_t k = 0; k < m; ++k)
                    if (!b.at(i, j, k).is_zero())
                        out[k] += xy * b.at(i, j, k);
            }
        }
        return out;
    };
    for (std::size_t i = 0; i < m; ++i) {
        const Element ei = a.basis_element(i);
        for (std::size_t j = 0; j < m; ++j) {
            const Element ej = a.basis_element(j);
            const Element eij = a.multiply(ei, ej);
            for (std::size_t l = 0; l < m; ++l) {
                const Element el = a.basis_element(l);
                Element lhs1 = value(eij, el);
                Element rhs1 = a.multiply(ei, value(ej, el));
                const Element rhs1b = a.multiply(value(ei, el), ej);
                for (std::size_t k = 0; k < m; ++k)
                    rhs1[k] += rhs1b[k];
                if (lhs1 != rhs1)
                    return false;
                const Element ejl = a.multiply(ej, el);
                Element lhs2 = value(ei, ejl);
                Element rhs2 = a.multiply(ej, value(ei, el));
                const Element rhs2b = a.multiply(value(ei, ej), el);
                for (std::size_t k = 0; k < m; ++k)
                    rhs2[k] += rhs2b[k];
                if (lhs2 != rhs2)
                    return false;
            }
        }
    }
    return true;
}

bool direct_sum_check(const Algebra& a) {
    const auto full = biderivation_space(a);
    const auto plus = symmetric_biderivation_space(a);
    const auto minus = skew_biderivation_space(a);
    if (full.size() != plus.size() + minus.size())
        return false;
    RowReducer red(a.dim() * a.dim() * a.dim());
    std::size_t independent = 0;
    for (const auto& t : plus)
        independent += red.add_row(t.flat()) ? 1 : 0;
    for (const auto& t : minus)
        independent += red.add_row(t.flat()) ? 1 : 0;
    return independent == plus.size() + minus.size();
}

RatMatrix first_argument_slice(const BiderivationCandidate& b, std::size_t i) {
    const std::size_t m = b.dim();
    RatMatrix out(m, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
            out.at(k, j) = b.at(i, j, k);
    return out;
}

bool slices_lie_in_derivation_span(const Algebra& a,
                                   const std::vector<BiderivationCandidate>& solutions) {
    const auto der = delta_derivation_space(a, Rational(1));
    std::vector<Vec> der_flat;
    for (const auto& d : der)
        der_flat.push_back(d.flat());
    for (const auto& sol : solutions)
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (!subspace_contains(der_flat, {first_argument_slice(sol, i).flat()},
                                   a.dim() * a.dim()))
                return false;
    return true;
}

} // namespace conserva
