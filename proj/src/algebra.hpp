#ifndef CONSERVA_ALGEBRA_HPP
#define CONSERVA_ALGEBRA_HPP

#include <string>
#include <vector>

#include "tensor3.hpp"

namespace conserva {

/// Coordinate vector over an algebra's basis.
using Element = Vec;

/// Finite-dimensional algebra over the rationals, given by structure
/// constants e_i e_j = sum_k c[i][j][k] e_k. Indices are 0-based internally;
/// labels and all serialized/rendered output are 1-based like the tables.
class Algebra {
public:
    Algebra(std::string name, std::vector<std::string> basis_labels, Tensor3 structure);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return structure_.dim(); }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const Tensor3& structure() const { return structure_; }

    Element basis_element(std::size_t i) const;
    Element zero() const { return Element(dim()); }

    /// Bilinear extension of the structure tensor.
    Element multiply(const Element& x, const Element& y) const;

    /// Matrix of u -> x*u; column j is multiply(x, e_j).
    RatMatrix left_mul_matrix(const Element& x) const;

    /// Structure-tensor symmetry c[i][j][k] == c[j][i][k] for all entries.
    bool table_is_commutative() const;

private:
    std::string name_;
    std::vector<std::string> labels_;
    Tensor3 structure_;
};

/// One of the three built-in table algebras: "W2-conservative" (dim 8),
/// "W2-commutative" (dim 6), "S2" (dim 4). When `algebra_dir` is nonempty and
/// contains <name>.json, that file overrides the built-in table.
Algebra builtin(const std::string& name, const std::string& algebra_dir = "");

const std::vector<std::string>& builtin_names();

/// JSON interchange:
///   { "name": str, "dim": int, "basis": [str], "structure": [[i, j, k, "p/q"], ...] }
/// with 1-based indices; unlisted triples are zero; rationals are
/// decimal-free strings.
Algebra load_algebra(const std::string& json_text);
Algebra load_algebra_file(const std::string& path);
std::string save_algebra(const Algebra& a);

/// True iff the span A^n of all n-fold products (any bracketing) is zero,
/// computed from the descending series A^s = sum_{i+j=s} A^i A^j.
bool product_power_vanishes(const Algebra& a, std::size_t n);

/// Zero-coefficient-free rendering of an element, e.g. "e1 - 2*e6".
std::string format_element(const Algebra& a, const Element& x);

/// Multiplication table in the row-times-column layout of the source tables.
std::string render_table(const Algebra& a);

} // namespace conserva

#endif
