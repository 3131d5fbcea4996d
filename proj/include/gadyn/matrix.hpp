/*
   Copyright 2026 The gadyn Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GADYN_MATRIX_HPP
#define GADYN_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gadyn/error.hpp"

namespace gadyn {

/// Dense row-major matrix over a (possibly noncommutative) ring. Every matrix carries its
/// own zero element so that entries over interned fields stay well-typed.
template <class T>
class Mat {
   public:
    Mat() = default;
    Mat(std::size_t r, std::size_t c, const T& zero) : r_(r), c_(c), zero_(zero), d_(r * c, zero) {}

    static Mat identity(std::size_t n, const T& zero, const T& one) {
        Mat m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const noexcept { return r_; }
    std::size_t cols() const noexcept { return c_; }
    const T& zero() const noexcept { return zero_; }
    T& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

    bool is_zero() const {
        for (const auto& x : d_)
            if (!x.is_zero()) return false;
        return true;
    }

    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Mat m(nr, nc, zero_);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
        return m;
    }

    Mat rows_subset(const std::vector<std::size_t>& idx) const {
        Mat m(idx.size(), c_, zero_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(idx[i], j);
        return m;
    }

    Mat& operator+=(const Mat& o) {
        require(r_ == o.r_ && c_ == o.c_, "matrix shape mismatch in addition");
        for (std::size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        require(r_ == o.r_ && c_ == o.c_, "matrix shape mismatch in subtraction");
        for (std::size_t i = 0; i < d_.size(); ++i) d_[i] -= o.d_[i];
        return *this;
    }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        require(a.c_ == b.r_, "matrix shape mismatch in multiplication");
        Mat m(a.r_, b.c_, a.zero_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.c_; ++j) {
                    const T& y = b(k, j);
                    if (!y.is_zero()) m(i, j) += x * y;
                }
            }
        return m;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) return false;
        for (std::size_t i = 0; i < a.d_.size(); ++i)
            if (!(a.d_[i] == b.d_[i])) return false;
        return true;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

   private:
    std::size_t r_ = 0, c_ = 0;
    T zero_{};
    std::vector<T> d_;
};

/// Block-diagonal sum of two square matrices over the same ring.
template <class T>
Mat<T> direct_sum(const Mat<T>& a, const Mat<T>& b, const T& zero) {
    Mat<T> m(a.rows() + b.rows(), a.cols() + b.cols(), zero);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

template <class T>
Mat<T> mat_pow(const Mat<T>& a, std::uint64_t e, const T& one) {
    require(a.rows() == a.cols(), "power of a non-square matrix");
    Mat<T> r = Mat<T>::identity(a.rows(), a.zero(), one), b = a;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

}  // namespace gadyn

#endif
