#include "linalg.hpp"

#include <algorithm>
#include <limits>

#include "errors.hpp"

namespace conserva {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Rational(1);
    return m;
}

RatMatrix RatMatrix::from_flat(std::size_t rows, std::size_t cols, Vec entries) {
    if (entries.size() != rows * cols)
        fail(ErrorCode::dimension_mismatch, "matrix entry count does not match shape");
    RatMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.e_ = std::move(entries);
    return m;
}

Vec RatMatrix::apply(const Vec& x) const {
    if (x.size() != cols_)
        fail(ErrorCode::dimension_mismatch, "matrix-vector size mismatch");
    Vec y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& a = e_[r * cols_ + c];
            if (!a.is_zero() && !x[c].is_zero())
                acc += a * x[c];
        }
        y[r] = std::move(acc);
    }
    return y;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

bool RatMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rational& v) { return v.is_zero(); });
}

bool RatMatrix::is_scalar() const {
    if (rows_ != cols_ || rows_ == 0)
        return false;
    const Rational& lambda = at(0, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r == c ? at(r, c) != lambda : !at(r, c).is_zero())
                return false;
        }
    return true;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        fail(ErrorCode::dimension_mismatch, "matrix addition shape mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i)
        e_[i] += o.e_[i];
    return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
    for (auto& v : e_)
        v *= s;
    return *this;
}

SparseRow to_sparse(const Vec& dense) {
    SparseRow row;
    for (std::size_t c = 0; c < dense.size(); ++c)
        if (!dense[c].is_zero())
            row.push_back({c, dense[c]});
    return row;
}

Vec to_dense(const SparseRow& row, std::size_t cols) {
    Vec v(cols);
    for (const auto& e : row)
        v[e.col] = e.val;
    return v;
}

namespace {

/// out = a - factor * b, both sorted by column; zero results dropped.
SparseRow axpy_sub(const SparseRow& a, const Rational& factor, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].col < a[i].col) {
            out.push_back({b[j].col, -(factor * b[j].val)});
            ++j;
        } else {
            Rational v = a[i].val - factor * b[j].val;
            if (!v.is_zero())
                out.push_back({a[i].col, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

void normalize(SparseRow& row) {
    const Rational inv = row.front().val.reciprocal();
    row.front().val = Rational(1);
    for (std::size_t i = 1; i < row.size(); ++i)
        row[i].val *= inv;
}

} // namespace

RowReducer::RowReducer(std::size_t cols) : cols_(cols), pivot_row_of_col_(cols, npos) {}

bool RowReducer::has_pivot(std::size_t col) const {
    return col < cols_ && pivot_row_of_col_[col] != npos;
}

SparseRow RowReducer::reduce(SparseRow row) const {
    while (!row.empty()) {
        const std::size_t lead = row.front().col;
        const std::size_t at = pivot_row_of_col_[lead];
        if (at == npos)
            break;
        row = axpy_sub(row, row.front().val, rows_[at]);
    }
    return row;
}

bool RowReducer::add_row(SparseRow row) {
    for (const auto& e : row)
        if (e.col >= cols_)
            fail(ErrorCode::dimension_mismatch, "row entry past column count");
    row = reduce(std::move(row));
    if (row.empty())
        return false;
    finalized_ = false;
    normalize(row);
    const std::size_t lead = row.front().col;
    pivot_row_of_col_[lead] = rows_.size();
    rows_.push_back(std::move(row));
    pivot_cols_.insert(std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), lead), lead);
    return true;
}

bool RowReducer::reduces_to_zero(const Vec& v) const {
    if (v.size() != cols_)
        fail(ErrorCode::dimension_mismatch, "vector length does not match ambient dimension");
    return reduce(to_sparse(v)).empty();
}

void RowReducer::finalize() {
    if (finalized_)
        return;
    // Walk pivots from the right; rows further right are already final, so a
    // single pass per row suffices.
    for (std::size_t idx = pivot_cols_.size(); idx-- > 0;) {
        SparseRow& row = rows_[pivot_row_of_col_[pivot_cols_[idx]]];
        SparseRow pending;
        for (const auto& e : row)
            if (e.col != pivot_cols_[idx] && pivot_row_of_col_[e.col] != npos)
                pending.push_back(e);
        for (const auto& e : pending)
            row = axpy_sub(row, e.val, rows_[pivot_row_of_col_[e.col]]);
    }
    finalized_ = true;
}

std::vector<SparseRow> RowReducer::rref_rows() const {
    if (!finalized_ && !rows_.empty())
        fail(ErrorCode::invalid_argument, "rref_rows requires finalize()");
    std::vector<SparseRow> out;
    out.reserve(pivot_cols_.size());
    for (std::size_t p : pivot_cols_)
        out.push_back(rows_[pivot_row_of_col_[p]]);
    return out;
}

std::vector<Vec> RowReducer::kernel_basis() const {
    if (!finalized_ && !rows_.empty())
        fail(ErrorCode::invalid_argument, "kernel_basis requires finalize()");
    std::vector<Vec> basis;
    std::vector<std::size_t> basis_of_col(cols_, npos);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (pivot_row_of_col_[c] != npos)
            continue;
        basis_of_col[c] = basis.size();
        Vec v(cols_);
        v[c] = Rational(1);
        basis.push_back(std::move(v));
    }
    for (std::size_t p : pivot_cols_) {
        for (const auto& e : rows_[pivot_row_of_col_[p]]) {
            if (e.col == p)
                continue;
            basis[basis_of_col[e.col]][p] = -e.val;
        }
    }
    return basis;
}

SparseRow RowAccumulator::finish() {
    std::sort(terms_.begin(), terms_.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
    SparseRow out;
    for (auto& t : terms_) {
        if (!out.empty() && out.back().col == t.col)
            out.back().val += t.val;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const SparseEntry& e) { return e.val.is_zero(); }),
              out.end());
    terms_.clear();
    return out;
}

std::pair<RatMatrix, std::vector<std::size_t>> rref(const RatMatrix& a) {
    RowReducer red(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        SparseRow row;
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!a.at(r, c).is_zero())
                row.push_back({c, a.at(r, c)});
        red.add_row(std::move(row));
    }
    red.finalize();
    RatMatrix out(a.rows(), a.cols());
    std::size_t r = 0;
    for (const auto& row : red.rref_rows()) {
        for (const auto& e : row)
            out.at(r, e.col) = e.val;
        ++r;
    }
    return {std::move(out), red.pivot_cols()};
}

std::size_t rank(const RatMatrix& a) {
    RowReducer red(a.cols());
    for (std::size_t r = 0; r < a.rows() && !red.saturated(); ++r) {
        SparseRow row;
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!a.at(r, c).is_zero())
                row.push_back({c, a.at(r, c)});
        red.add_row(std::move(row));
    }
    return red.rank();
}

std::vector<Vec> kernel_basis(const RatMatrix& a) {
    RowReducer red(a.cols());
    for (std::size_t r = 0; r < a.rows() && !red.saturated(); ++r) {
        SparseRow row;
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!a.at(r, c).is_zero())
                row.push_back({c, a.at(r, c)});
        red.add_row(std::move(row));
    }
    red.finalize();
    return red.kernel_basis();
}

std::optional<Vec> solve_particular(const RatMatrix& a, const Vec& b) {
    if (b.size() != a.rows())
        fail(ErrorCode::dimension_mismatch, "right-hand side length mismatch");
    const std::size_t n = a.cols();
    RowReducer red(n + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        SparseRow row;
        for (std::size_t c = 0; c < n; ++c)
            if (!a.at(r, c).is_zero())
                row.push_back({c, a.at(r, c)});
        if (!b[r].is_zero())
            row.push_back({n, b[r]});
        red.add_row(std::move(row));
        if (red.has_pivot(n))
            return std::nullopt;
    }
    red.finalize();
    Vec x(n);
    for (const auto& row : red.rref_rows())
        if (row.back().col == n)
            x[row.front().col] = row.back().val;
    return x;
}

namespace {

void check_ambient(const std::vector<Vec>& basis, std::size_t ambient) {
    for (const auto& v : basis)
        if (v.size() != ambient)
            fail(ErrorCode::dimension_mismatch, "basis vector length does not match ambient dimension");
}

} // namespace

bool subspace_contains(const std::vector<Vec>& outer, const std::vector<Vec>& inner,
                       std::size_t ambient) {
    check_ambient(outer, ambient);
    check_ambient(inner, ambient);
    RowReducer red(ambient);
    for (const auto& v : outer)
        red.add_row(v);
    for (const auto& v : inner)
        if (!red.reduces_to_zero(v))
            return false;
    return true;
}

bool subspace_equal(const std::vector<Vec>& b1, const std::vector<Vec>& b2, std::size_t ambient) {
    return subspace_contains(b1, b2, ambient) && subspace_contains(b2, b1, ambient);
}

} // namespace conserva
