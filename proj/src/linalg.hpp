#ifndef CONSERVA_LINALG_HPP
#define CONSERVA_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace conserva {

using Vec = std::vector<Rational>;

/// Dense rational matrix, row-major.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_flat(std::size_t rows, std::size_t cols, Vec entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    /// Matrix times column vector.
    Vec apply(const Vec& x) const;

    RatMatrix transposed() const;

    /// Row-major flattening; the fixed ordering used for subspace comparisons.
    const Vec& flat() const { return e_; }

    bool is_zero() const;
    bool is_scalar() const;  // lambda * identity for some rational lambda

    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator*=(const Rational& s);

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    std::size_t rows_, cols_;
    Vec e_;
};

struct SparseEntry {
    std::size_t col;
    Rational val;  // nonzero
};
/// Sorted by column, one entry per column, values nonzero.
using SparseRow = std::vector<SparseEntry>;

SparseRow to_sparse(const Vec& dense);
Vec to_dense(const SparseRow& row, std::size_t cols);

/// Incremental exact Gaussian elimination. Rows are absorbed one at a time
/// into a row-echelon set with unit leading entries; pivoting takes the first
/// nonzero entry in column order, so results are deterministic. finalize()
/// back-substitutes to reduced row-echelon form (unique for the row space).
class RowReducer {
public:
    explicit RowReducer(std::size_t cols);

    /// Returns true if the row was independent and created a new pivot.
    bool add_row(SparseRow row);
    bool add_row(const Vec& dense) { return add_row(to_sparse(dense)); }

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return pivot_cols_.size(); }
    bool saturated() const { return rank() == cols_; }
    bool has_pivot(std::size_t col) const;

    /// Membership of v in the row space (does not modify the reducer).
    bool reduces_to_zero(const Vec& v) const;

    void finalize();

    /// Pivot columns in increasing order.
    const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }

    /// RREF rows, one per pivot column in increasing order. Requires finalize().
    std::vector<SparseRow> rref_rows() const;

    /// Canonical null-space basis: one vector per free column in increasing
    /// order, with that free coordinate exactly 1. Requires finalize().
    std::vector<Vec> kernel_basis() const;

private:
    SparseRow reduce(SparseRow row) const;

    std::size_t cols_;
    bool finalized_ = false;
    std::vector<std::size_t> pivot_cols_;            // sorted ascending
    std::vector<std::size_t> pivot_row_of_col_;      // col -> index into rows_, or npos
    std::vector<SparseRow> rows_;                    // normalized: leading value 1
};

/// Accumulates (index, value) terms, possibly repeated, into a sorted sparse
/// row. finish() clears the accumulator for reuse.
class RowAccumulator {
public:
    void push(std::size_t idx, Rational val) {
        if (!val.is_zero())
            terms_.push_back({idx, std::move(val)});
    }
    SparseRow finish();

private:
    std::vector<SparseEntry> terms_;
};

/// Reduced row-echelon form of A plus its pivot columns.
std::pair<RatMatrix, std::vector<std::size_t>> rref(const RatMatrix& a);

std::size_t rank(const RatMatrix& a);

/// Canonical basis of { x : Ax = 0 }.
std::vector<Vec> kernel_basis(const RatMatrix& a);

/// Particular solution of Ax = b with all free variables zero, or nullopt if
/// the system is inconsistent.
std::optional<Vec> solve_particular(const RatMatrix& a, const Vec& b);

/// True iff span(b1) == span(b2). All vectors must share the ambient length.
bool subspace_equal(const std::vector<Vec>& b1, const std::vector<Vec>& b2, std::size_t ambient);

/// True iff every vector of `inner` lies in span(`outer`).
bool subspace_contains(const std::vector<Vec>& outer, const std::vector<Vec>& inner,
                       std::size_t ambient);

} // namespace conserva

#endif
