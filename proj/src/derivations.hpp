#ifndef CONSERVA_DERIVATIONS_HPP
#define CONSERVA_DERIVATIONS_HPP

#include <optional>
#include <utility>

#include "algebra.hpp"

namespace conserva {

/// Canonical basis of { d : d(e_i e_j) = delta * (d(e_i) e_j + e_i d(e_j)) }.
/// delta = 1 gives ordinary derivations, delta = 1/2 the half-derivations.
/// Unknowns are the m^2 matrix entries (column q = image of e_q), flattened
/// row-major; equations run lexicographically over (i, j, component).
std::vector<RatMatrix> delta_derivation_space(const Algebra& a, const Rational& delta);

/// Canonical basis of { g : g(e_i e_j) = g(e_i) e_j = e_i g(e_j) }.
std::vector<RatMatrix> centroid(const Algebra& a);

/// Exact residual checks of the defining identities on all basis pairs.
bool is_delta_derivation(const Algebra& a, const RatMatrix& d, const Rational& delta);
bool is_centroid_map(const Algebra& a, const RatMatrix& g);

/// Every centroid map is a half-derivation; false flags a solver bug.
bool centroid_in_delta_check(const Algebra& a);

/// Whether the delta-derivation space is exactly the scalar span of the
/// identity map.
struct ScalarClassification {
    std::size_t dimension;
    bool scalar_identity_span;
};
ScalarClassification scalar_classification(const Algebra& a, const Rational& delta);

/// The basis vectors e_i together with all pairwise sums e_i + e_j — the
/// sample set on which the local decision is complete when the
/// delta-derivation space is the scalar span.
std::vector<Element> required_local_samples(const Algebra& a);

/// Per-sample certificate: coordinates over the computed delta-derivation
/// basis of a map agreeing with D at the sample.
struct LocalWitness {
    Element point;
    Vec coords;
};

struct LocalDecision {
    bool is_local;
    /// True when the delta-derivation space is span{id}; a positive answer
    /// over the required samples then decides "local" outright (a passing D
    /// must be scalar). Otherwise a positive answer only covers the samples.
    bool complete;
    std::vector<LocalWitness> witnesses;   // when is_local
    std::optional<Element> counterexample; // first failing sample otherwise
};

/// Decides, sample by sample, whether some member of the delta-derivation
/// space agrees with D at each sample point. Samples must include the basis
/// vectors and all pairwise sums.
LocalDecision is_local_delta_derivation(const Algebra& a, const RatMatrix& d,
                                        const std::vector<Element>& samples,
                                        const Rational& delta);

/// Extensional (point -> value) map, the representation for possibly
/// nonlinear 2-local candidates.
using PointValueTable = std::vector<std::pair<Element, Element>>;

struct TwoLocalDecision {
    bool is_two_local;
    std::optional<std::pair<Element, Element>> counterexample; // first failing pair
};

/// For each pair (x, y), decides joint solvability of d(x) = D(x) and
/// d(y) = D(y) over the delta-derivation space. Every element of `pairs`
/// must appear in the table.
TwoLocalDecision is_two_local_delta_derivation(const Algebra& a, const PointValueTable& values,
                                               const std::vector<std::pair<Element, Element>>& pairs,
                                               const Rational& delta);

} // namespace conserva

#endif
