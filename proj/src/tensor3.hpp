#ifndef CONSERVA_TENSOR3_HPP
#define CONSERVA_TENSOR3_HPP

#include <cstddef>

#include "errors.hpp"
#include "linalg.hpp"

namespace conserva {

/// Cubic rational tensor t[i][j][k] on an m-dimensional space, stored in
/// index-lexicographic (i, j, k) order — the fixed flattening used whenever a
/// tensor is fed to the subspace machinery. Holds structure constants
/// (e_i e_j = sum_k t[i][j][k] e_k), bilinear maps, and biderivation
/// candidates alike.
class Tensor3 {
public:
    Tensor3() : dim_(0) {}
    explicit Tensor3(std::size_t dim) : dim_(dim), e_(dim * dim * dim) {}

    static Tensor3 from_flat(std::size_t dim, Vec entries);

    std::size_t dim() const { return dim_; }

    Rational& at(std::size_t i, std::size_t j, std::size_t k) {
        return e_[(i * dim_ + j) * dim_ + k];
    }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
        return e_[(i * dim_ + j) * dim_ + k];
    }

    const Vec& flat() const { return e_; }

    bool is_zero() const {
        for (const auto& v : e_)
            if (!v.is_zero())
                return false;
        return true;
    }

    Tensor3& operator+=(const Tensor3& o);
    Tensor3& operator*=(const Rational& s);

    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        return a.dim_ == b.dim_ && a.e_ == b.e_;
    }

private:
    std::size_t dim_;
    Vec e_;
};

inline Tensor3 Tensor3::from_flat(std::size_t dim, Vec entries) {
    Tensor3 t(dim);
    if (entries.size() != t.e_.size())
        fail(ErrorCode::dimension_mismatch, "tensor entry count does not match dimension");
    t.e_ = std::move(entries);
    return t;
}

inline Tensor3& Tensor3::operator+=(const Tensor3& o) {
    if (dim_ != o.dim_)
        fail(ErrorCode::dimension_mismatch, "tensor addition shape mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i)
        e_[i] += o.e_[i];
    return *this;
}

inline Tensor3& Tensor3::operator*=(const Rational& s) {
    for (auto& v : e_)
        v *= s;
    return *this;
}

} // namespace conserva

#endif
