#ifndef CONSERVA_BIDERIVATIONS_HPP
#define CONSERVA_BIDERIVATIONS_HPP

#include <utility>

#include "algebra.hpp"

namespace conserva {

/// Candidate bilinear map delta(e_i, e_j) = sum_k b[i][j][k] e_k.
using BiderivationCandidate = Tensor3;

/// Canonical basis of the maps satisfying both defining identities
///   delta(xy, z) = x delta(y, z) + delta(x, z) y
///   delta(x, yz) = y delta(x, z) + delta(x, y) z
/// at all basis triples; m^3 unknowns, 2m^4 scalar equations ordered
/// lexicographically by (identity, i, j, l, component).
std::vector<BiderivationCandidate> biderivation_space(const Algebra& a);

/// Same system augmented with b[i][j][k] = b[j][i][k] (symmetric) or
/// b[i][j][k] = -b[j][i][k] (skew) constraints.
std::vector<BiderivationCandidate> symmetric_biderivation_space(const Algebra& a);
std::vector<BiderivationCandidate> skew_biderivation_space(const Algebra& a);

/// plus[i][j] = b[i][j] + b[j][i], minus[i][j] = b[i][j] - b[j][i];
/// the input is recovered as (plus + minus) / 2.
std::pair<BiderivationCandidate, BiderivationCandidate>
split_symmetric(const BiderivationCandidate& b);

/// Exact residual check of both identities at all basis triples.
bool satisfies_biderivation_identities(const Algebra& a, const BiderivationCandidate& b);

/// dim BDer == dim BDer_+ + dim BDer_- with trivial intersection.
bool direct_sum_check(const Algebra& a);

/// Slice with the first argument frozen at e_i: column j is delta(e_i, e_j).
RatMatrix first_argument_slice(const BiderivationCandidate& b, std::size_t i);

/// Independent cross-check mirroring the derivation-matrix route: every
/// first-argument slice of every solution must lie in the span of the
/// computed derivation space.
bool slices_lie_in_derivation_span(const Algebra& a,
                                   const std::vector<BiderivationCandidate>& solutions);

} // namespace conserva

#endif
