#include "kantor.hpp"

#include <algorithm>
#include <string>

namespace conserva {

BilinearMap bracket(const LinearMap& m, const BilinearMap& n) {
    const std::size_t dim = n.dim();
    if (m.rows() != dim || m.cols() != dim)
        fail(ErrorCode::dimension_mismatch, "bracket dimension mismatch");
    BilinearMap out(dim);
    for (std::size_t u = 0; u < dim; ++u)
        for (std::size_t v = 0; v < dim; ++v)
            for (std::size_t p = 0; p < dim; ++p) {
                Rational acc;
                for (std::size_t k = 0; k < dim; ++k) {
                    if (!m.at(p, k).is_zero() && !n.at(u, v, k).is_zero())
                        acc += m.at(p, k) * n.at(u, v, k);
                }
                for (std::size_t w = 0; w < dim; ++w) {
                    if (!m.at(w, u).is_zero() && !n.at(w, v, p).is_zero())
                        acc -= m.at(w, u) * n.at(w, v, p);
                    if (!m.at(w, v).is_zero() && !n.at(u, w, p).is_zero())
                        acc -= m.at(w, v) * n.at(u, w, p);
                }
                out.at(u, v, p) = std::move(acc);
            }
    return out;
}

LinearMap left_mul_map(const BilinearMap& m, const Vec& e) {
    const std::size_t dim = m.dim();
    if (e.size() != dim)
        fail(ErrorCode::dimension_mismatch, "vector does not live on the map's space");
    LinearMap out(dim, dim);
    for (std::size_t q = 0; q < dim; ++q)
        for (std::size_t p = 0; p < dim; ++p) {
            Rational acc;
            for (std::size_t i = 0; i < dim; ++i)
                if (!e[i].is_zero() && !m.at(i, q, p).is_zero())
                    acc += e[i] * m.at(i, q, p);
            out.at(p, q) = std::move(acc);
        }
    return out;
}

BilinearMap kantor_product(const BilinearMap& m, const BilinearMap& n, const Vec& e) {
    if (m.dim() != n.dim())
        fail(ErrorCode::dimension_mismatch, "kantor product dimension mismatch");
    return bracket(left_mul_map(m, e), n);
}

BilinearMap elementary_map(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
    BilinearMap t(n);
    t.at(i, j, k) = Rational(1);
    return t;
}

std::size_t wn_basis_index(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
    return (i * n + j) * n + k;
}

Element wn_element_of(const BilinearMap& m) {
    return m.flat();
}

BilinearMap wn_map_of(std::size_t n, const Element& x) {
    return Tensor3::from_flat(n, x);
}

WnAlgebra build_wn(std::size_t n, const Vec& e) {
    if (n < 1)
        fail(ErrorCode::invalid_argument, "underlying dimension must be at least 1");
    if (e.size() != n)
        fail(ErrorCode::dimension_mismatch, "fixed vector length does not match n");
    if (std::all_of(e.begin(), e.end(), [](const Rational& v) { return v.is_zero(); }))
        fail(ErrorCode::invalid_argument, "fixed vector e must be nonzero");

    const std::size_t big = n * n * n;
    Tensor3 c(big);
    std::vector<std::string> labels(big);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                labels[wn_basis_index(n, i, j, k)] = "B(" + std::to_string(i + 1) + "," +
                                                     std::to_string(j + 1) + "," +
                                                     std::to_string(k + 1) + ")";
    for (std::size_t p = 0; p < big; ++p) {
        const BilinearMap mp =
            elementary_map(n, p / (n * n), (p / n) % n, p % n);
        const LinearMap l = left_mul_map(mp, e);
        for (std::size_t q = 0; q < big; ++q) {
            const BilinearMap prod =
                bracket(l, elementary_map(n, q / (n * n), (q / n) % n, q % n));
            const Vec& flatv = prod.flat();
            for (std::size_t r = 0; r < big; ++r)
                c.at(p, q, r) = flatv[r];
        }
    }
    return WnAlgebra{n, e, Algebra("W(" + std::to_string(n) + ")", std::move(labels), std::move(c))};
}

std::vector<BilinearMap> symmetric_subspace(const WnAlgebra& w) {
    const std::size_t n = w.n;
    RowReducer red(n * n * n);
    RowAccumulator acc;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                acc.push(wn_basis_index(n, i, j, k), Rational(1));
                acc.push(wn_basis_index(n, j, i, k), Rational(-1));
                red.add_row(acc.finish());
            }
    red.finalize();
    std::vector<BilinearMap> out;
    for (auto& v : red.kernel_basis())
        out.push_back(Tensor3::from_flat(n, std::move(v)));
    return out;
}

std::vector<BilinearMap> trace_zero_subspace(const WnAlgebra& w) {
    const std::size_t n = w.n;
    RowReducer red(n * n * n);
    RowAccumulator acc;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                acc.push(wn_basis_index(n, i, j, k), Rational(1));
                acc.push(wn_basis_index(n, j, i, k), Rational(-1));
                red.add_row(acc.finish());
            }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            acc.push(wn_basis_index(n, j, i, i), Rational(1));
        red.add_row(acc.finish());
    }
    red.finalize();
    std::vector<BilinearMap> out;
    for (auto& v : red.kernel_basis())
        out.push_back(Tensor3::from_flat(n, std::move(v)));
    return out;
}

namespace {

Element rhs_of_witness(const Algebra& alg, const Element& ea, const Element& eb,
                       const Element& ex, const Element& ey) {
    const Element xy = alg.multiply(ex, ey);
    const Element ax = alg.multiply(ea, ex);
    const Element ay = alg.multiply(ea, ey);
    const Element bx = alg.multiply(eb, ex);
    const Element by = alg.multiply(eb, ey);

    Element inner = alg.multiply(ea, xy);
    const Element axy = alg.multiply(ax, ey);
    const Element xay = alg.multiply(ex, ay);
    for (std::size_t i = 0; i < inner.size(); ++i)
        inner[i] -= axy[i] + xay[i];

    Element r = alg.multiply(eb, inner);
    const Element t1 = alg.multiply(ea, alg.multiply(bx, ey));
    const Element t2 = alg.multiply(alg.multiply(ea, bx), ey);
    const Element t3 = alg.multiply(bx, ay);
    const Element t4 = alg.multiply(ea, alg.multiply(ex, by));
    const Element t5 = alg.multiply(ax, by);
    const Element t6 = alg.multiply(ex, alg.multiply(ea, by));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += -t1[i] + t2[i] + t3[i] - t4[i] + t5[i] + t6[i];
    return r;
}

Element lhs_of_witness(const Algebra& alg, const Element& fab, const Element& ex,
                       const Element& ey) {
    const Element xy = alg.multiply(ex, ey);
    Element l = alg.multiply(fab, xy);
    const Element fx_y = alg.multiply(alg.multiply(fab, ex), ey);
    const Element x_fy = alg.multiply(ex, alg.multiply(fab, ey));
    for (std::size_t i = 0; i < l.size(); ++i)
        l[i] = -l[i] + fx_y[i] + x_fy[i];
    return l;
}

} // namespace

std::optional<Tensor3> find_associated_f(const Algebra& alg) {
    const std::size_t m = alg.dim();
    // The identity constrains F(e_a, e_b) separately for each (a, b), so the
    // m^3-unknown system splits into m^2 systems of m unknowns each; the
    // concatenated canonical solutions equal the monolithic one. The
    // coefficient matrix is shared by every block, only the right-hand side
    // changes.
    RatMatrix sys(m * m * m, m);
    {
        std::size_t r = 0;
        for (std::size_t x = 0; x < m; ++x) {
            const Element ex = alg.basis_element(x);
            for (std::size_t y = 0; y < m; ++y) {
                const Element ey = alg.basis_element(y);
                for (std::size_t k = 0; k < m; ++k) {
                    const Element lk = lhs_of_witness(alg, alg.basis_element(k), ex, ey);
                    for (std::size_t comp = 0; comp < m; ++comp)
                        sys.at(r + comp, k) = lk[comp];
                }
                r += m;
            }
        }
    }
    Tensor3 f(m);
    Vec rhs(m * m * m);
    for (std::size_t a = 0; a < m; ++a) {
        const Element ea = alg.basis_element(a);
        for (std::size_t b = 0; b < m; ++b) {
            const Element eb = alg.basis_element(b);
            std::size_t r = 0;
            for (std::size_t x = 0; x < m; ++x) {
                const Element ex = alg.basis_element(x);
                for (std::size_t y = 0; y < m; ++y) {
                    const Element ey = alg.basis_element(y);
                    const Element rv = rhs_of_witness(alg, ea, eb, ex, ey);
                    for (std::size_t comp = 0; comp < m; ++comp)
                        rhs[r + comp] = rv[comp];
                    r += m;
                }
            }
            auto sol = solve_particular(sys, rhs);
            if (!sol)
                return std::nullopt;
            for (std::size_t k = 0; k < m; ++k)
                f.at(a, b, k) = (*sol)[k];
        }
    }
    return f;
}

bool witness_identity_holds(const Algebra& alg, const Tensor3& f) {
    const std::size_t m = alg.dim();
    if (f.dim() != m)
        fail(ErrorCode::dimension_mismatch, "witness tensor dimension mismatch");
    for (std::size_t a = 0; a < m; ++a) {
        const Element ea = alg.basis_element(a);
        for (std::size_t b = 0; b < m; ++b) {
            const Element eb = alg.basis_element(b);
            Element fab(m);
            for (std::size_t k = 0; k < m; ++k)
                fab[k] = f.at(a, b, k);
            for (std::size_t x = 0; x < m; ++x) {
                const Element ex = alg.basis_element(x);
                for (std::size_t y = 0; y < m; ++y) {
                    const Element ey = alg.basis_element(y);
                    if (lhs_of_witness(alg, fab, ex, ey) != rhs_of_witness(alg, ea, eb, ex, ey))
                        return false;
                }
            }
        }
    }
    return true;
}

} // namespace conserva
