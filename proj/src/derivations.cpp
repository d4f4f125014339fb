#include "derivations.hpp"

#include <algorithm>

namespace conserva {

namespace {

std::vector<RatMatrix> matrices_from_kernel(const Algebra& a, RowReducer& red) {
    red.finalize();
    std::vector<RatMatrix> out;
    for (auto& v : red.kernel_basis())
        out.push_back(RatMatrix::from_flat(a.dim(), a.dim(), std::move(v)));
    return out;
}

} // namespace

std::vector<RatMatrix> delta_derivation_space(const Algebra& a, const Rational& delta) {
    const std::size_t m = a.dim();
    const Tensor3& c = a.structure();
    RowReducer red(m * m);
    RowAccumulator acc;
    for (std::size_t i = 0; i < m && !red.saturated(); ++i)
        for (std::size_t j = 0; j < m && !red.saturated(); ++j)
            for (std::size_t comp = 0; comp < m; ++comp) {
                for (std::size_t k = 0; k < m; ++k)
                    acc.push(comp * m + k, c.at(i, j, k));
                for (std::size_t p = 0; p < m; ++p) {
                    acc.push(p * m + i, -(delta * c.at(p, j, comp)));
                    acc.push(p * m + j, -(delta * c.at(i, p, comp)));
                }
                red.add_row(acc.finish());
            }
    return matrices_from_kernel(a, red);
}

std::vector<RatMatrix> centroid(const Algebra& a) {
    const std::size_t m = a.dim();
    const Tensor3& c = a.structure();
    RowReducer red(m * m);
    RowAccumulator acc;
    for (int family = 0; family < 2; ++family)
        for (std::size_t i = 0; i < m && !red.saturated(); ++i)
            for (std::size_t j = 0; j < m && !red.saturated(); ++j)
                for (std::size_t comp = 0; comp < m; ++comp) {
                    for (std::size_t k = 0; k < m; ++k)
                        acc.push(comp * m + k, c.at(i, j, k));
                    for (std::size_t p = 0; p < m; ++p) {
                        if (family == 0)
                            acc.push(p * m + i, -c.at(p, j, comp));
                        else
                            acc.push(p * m + j, -c.at(i, p, comp));
                    }
                    red.add_row(acc.finish());
                }
    return matrices_from_kernel(a, red);
}

bool is_delta_derivation(const Algebra& a, const RatMatrix& d, const Rational& delta) {
    const std::size_t m = a.dim();
    for (std::size_t i = 0; i < m; ++i) {
        const Element ei = a.basis_element(i);
        const Element di = d.apply(ei);
        for (std::size_t j = 0; j < m; ++j) {
            const Element ej = a.basis_element(j);
            const Element lhs = d.apply(a.multiply(ei, ej));
            Element rhs = a.multiply(di, ej);
            const Element rhs2 = a.multiply(ei, d.apply(ej));
            for (std::size_t k = 0; k < m; ++k)
                rhs[k] = delta * (rhs[k] + rhs2[k]);
            if (lhs != rhs)
                return false;
        }
    }
    return true;
}

bool is_centroid_map(const Algebra& a, const RatMatrix& g) {
    const std::size_t m = a.dim();
    for (std::size_t i = 0; i < m; ++i) {
        const Element ei = a.basis_element(i);
        const Element gi = g.apply(ei);
        for (std::size_t j = 0; j < m; ++j) {
            const Element ej = a.basis_element(j);
            const Element lhs = g.apply(a.multiply(ei, ej));
            if (lhs != a.multiply(gi, ej) || lhs != a.multiply(ei, g.apply(ej)))
                return false;
        }
    }
    return true;
}

namespace {

std::vector<Vec> flatten_all(const std::vector<RatMatrix>& mats) {
    std::vector<Vec> out;
    for (const auto& mat : mats)
        out.push_back(mat.flat());
    return out;
}

} // namespace

bool centroid_in_delta_check(const Algebra& a) {
    const auto half = delta_derivation_space(a, Rational(1, 2));
    const auto cent = centroid(a);
    return subspace_contains(flatten_all(half), flatten_all(cent), a.dim() * a.dim());
}

ScalarClassification scalar_classification(const Algebra& a, const Rational& delta) {
    const auto basis = delta_derivation_space(a, delta);
    const bool scalar = basis.size() == 1 && basis.front().is_scalar();
    return {basis.size(), scalar};
}

std::vector<Element> required_local_samples(const Algebra& a) {
    const std::size_t m = a.dim();
    std::vector<Element> samples;
    for (std::size_t i = 0; i < m; ++i)
        samples.push_back(a.basis_element(i));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Element s = a.basis_element(i);
            s[j] = Rational(1);
            samples.push_back(std::move(s));
        }
    return samples;
}

namespace {

void check_required_samples(const Algebra& a, const std::vector<Element>& samples) {
    if (samples.empty())
        fail(ErrorCode::invalid_argument, "sample list must not be empty");
    for (const auto& s : samples)
        if (s.size() != a.dim())
            fail(ErrorCode::dimension_mismatch, "sample does not belong to this algebra");
    for (const auto& req : required_local_samples(a))
        if (std::find(samples.begin(), samples.end(), req) == samples.end())
            fail(ErrorCode::invalid_argument,
                 "samples must include every basis vector and every pairwise sum");
}

/// Columns are the images of x under the space's basis maps.
RatMatrix images_at(const std::vector<RatMatrix>& basis, const Element& x) {
    RatMatrix out(x.size(), basis.size());
    for (std::size_t t = 0; t < basis.size(); ++t) {
        const Vec img = basis[t].apply(x);
        for (std::size_t r = 0; r < x.size(); ++r)
            out.at(r, t) = img[r];
    }
    return out;
}

bool scalar_span(const std::vector<RatMatrix>& basis) {
    return basis.size() == 1 && basis.front().is_scalar();
}

} // namespace

LocalDecision is_local_delta_derivation(const Algebra& a, const RatMatrix& d,
                                        const std::vector<Element>& samples,
                                        const Rational& delta) {
    if (d.rows() != a.dim() || d.cols() != a.dim())
        fail(ErrorCode::dimension_mismatch, "candidate map shape does not match the algebra");
    check_required_samples(a, samples);
    const auto space = delta_derivation_space(a, delta);
    LocalDecision decision{true, scalar_span(space), {}, std::nullopt};
    for (const auto& x : samples) {
        auto coords = solve_particular(images_at(space, x), d.apply(x));
        if (!coords) {
            decision.is_local = false;
            decision.witnesses.clear();
            decision.counterexample = x;
            return decision;
        }
        decision.witnesses.push_back({x, std::move(*coords)});
    }
    return decision;
}

TwoLocalDecision is_two_local_delta_derivation(const Algebra& a, const PointValueTable& values,
                                               const std::vector<std::pair<Element, Element>>& pairs,
                                               const Rational& delta) {
    const std::size_t m = a.dim();
    auto lookup = [&](const Element& x) -> const Element& {
        for (const auto& [point, value] : values)
            if (point == x)
                return value;
        fail(ErrorCode::invalid_argument,
             "pair references a point the map is not defined on: " + format_element(a, x));
    };
    const auto space = delta_derivation_space(a, delta);
    for (const auto& [x, y] : pairs) {
        if (x.size() != m || y.size() != m)
            fail(ErrorCode::dimension_mismatch, "pair element does not belong to this algebra");
        const Element& dx = lookup(x);
        const Element& dy = lookup(y);
        RatMatrix joint(2 * m, space.size());
        Vec rhs(2 * m);
        for (std::size_t t = 0; t < space.size(); ++t) {
            const Vec ix = space[t].apply(x);
            const Vec iy = space[t].apply(y);
            for (std::size_t r = 0; r < m; ++r) {
                joint.at(r, t) = ix[r];
                joint.at(m + r, t) = iy[r];
            }
        }
        for (std::size_t r = 0; r < m; ++r) {
            rhs[r] = dx[r];
            rhs[m + r] = dy[r];
        }
        if (!solve_particular(joint, rhs))
            return {false, std::make_pair(x, y)};
    }
    return {true, std::nullopt};
}

} // namespace conserva
