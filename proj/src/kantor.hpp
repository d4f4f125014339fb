#ifndef CONSERVA_KANTOR_HPP
#define CONSERVA_KANTOR_HPP

#include <optional>

#include "algebra.hpp"

namespace conserva {

/// Bilinear map N on V_n as a cubic tensor: N(v_i, v_j) = sum_k t[i][j][k] v_k.
using BilinearMap = Tensor3;
using LinearMap = RatMatrix;

/// [M, N](u, v) = M(N(u, v)) - N(Mu, v) - N(u, Mv).
BilinearMap bracket(const LinearMap& m, const BilinearMap& n);

/// Left multiplication by e under M: the linear map u -> M(e, u).
LinearMap left_mul_map(const BilinearMap& m, const Vec& e);

/// M . N = [L_M e, N] for the fixed vector e.
BilinearMap kantor_product(const BilinearMap& m, const BilinearMap& n, const Vec& e);

/// The elementary map B(v_i, v_j) = v_k (all 0-based).
BilinearMap elementary_map(std::size_t n, std::size_t i, std::size_t j, std::size_t k);

/// Index of B^(ijk) in the lexicographic elementary basis of W(n).
std::size_t wn_basis_index(std::size_t n, std::size_t i, std::size_t j, std::size_t k);

/// The algebra of all multiplications on V_n under the Kantor product, with
/// the lexicographic elementary-map basis. result.dim() == n^3.
struct WnAlgebra {
    std::size_t n;
    Vec e;
    Algebra result;
};

WnAlgebra build_wn(std::size_t n, const Vec& e);

/// Identifications between bilinear maps on V_n and elements of W(n); both
/// sides use the same lexicographic flattening.
Element wn_element_of(const BilinearMap& m);
BilinearMap wn_map_of(std::size_t n, const Element& x);

/// Canonical basis of the commutative maps { t : t[i][j][k] = t[j][i][k] }.
std::vector<BilinearMap> symmetric_subspace(const WnAlgebra& w);

/// Canonical basis of the commutative maps whose left multiplications all
/// have trace zero: sum_i t[j][i][i] = 0 for each j.
std::vector<BilinearMap> trace_zero_subspace(const WnAlgebra& w);

/// Solves the witness identity
///   -F(a,b)(xy) + (F(a,b)x)y + x(F(a,b)y)
///     = b(a(xy) - (ax)y - x(ay)) - a((bx)y) + (a(bx))y + (bx)(ay)
///       - a(x(by)) + (ax)(by) + x(a(by))
/// over all basis quadruples (a, b, x, y) for the m^3 coefficients of F.
/// Returns the particular solution with all free parameters zero, or nullopt
/// if the system is inconsistent. F(e_a, e_b) = sum_k f[a][b][k] e_k.
std::optional<Tensor3> find_associated_f(const Algebra& a);

/// Exact check of the witness identity at every basis quadruple.
bool witness_identity_holds(const Algebra& a, const Tensor3& f);

} // namespace conserva

#endif
