// SPDX-License-Identifier: Apache-2.0
//
// chanest - multipath channel parameter estimation
// Copyright (C) 2026 chanest contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef CHANEST_CMATRIX_HPP
#define CHANEST_CMATRIX_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace chanest {

using cplx = std::complex<double>;

/// Non-owning view of a column-major complex matrix. Column j starts at
/// data + j*stride, so a contiguous matrix has stride == rows.
struct CMatrixView {
    cplx* data = nullptr;
    int rows = 0;
    int cols = 0;
    int stride = 0;

    cplx& operator()(int r, int c) const { return data[r + std::size_t(stride) * c]; }
    cplx* col(int c) const { return data + std::size_t(stride) * c; }
};

struct CMatrixConstView {
    const cplx* data = nullptr;
    int rows = 0;
    int cols = 0;
    int stride = 0;

    CMatrixConstView() = default;
    CMatrixConstView(const cplx* d, int r, int c, int s) : data(d), rows(r), cols(c), stride(s) {}
    CMatrixConstView(const CMatrixView& v) : data(v.data), rows(v.rows), cols(v.cols), stride(v.stride) {}

    const cplx& operator()(int r, int c) const { return data[r + std::size_t(stride) * c]; }
    const cplx* col(int c) const { return data + std::size_t(stride) * c; }
};

/// Dense complex double-precision matrix, column-major storage.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("CMatrix: negative dimension");
    }

    static CMatrix identity(int n) {
        CMatrix I(n, n);
        for (int i = 0; i < n; ++i)
            I(i, i) = 1.0;
        return I;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    cplx& operator()(int r, int c) { return data_[r + std::size_t(rows_) * c]; }
    const cplx& operator()(int r, int c) const { return data_[r + std::size_t(rows_) * c]; }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }
    cplx* col(int c) { return data_.data() + std::size_t(rows_) * c; }
    const cplx* col(int c) const { return data_.data() + std::size_t(rows_) * c; }

    CMatrixView view() { return {data_.data(), rows_, cols_, rows_}; }
    CMatrixConstView view() const { return {data_.data(), rows_, cols_, rows_}; }

    /// View of a contiguous row range [row0, row0 + nrows).
    CMatrixView row_block(int row0, int nrows) { return {data_.data() + row0, nrows, cols_, rows_}; }
    CMatrixConstView row_block(int row0, int nrows) const {
        return {data_.data() + row0, nrows, cols_, rows_};
    }

    CMatrix adjoint() const {
        CMatrix out(cols_, rows_);
        for (int c = 0; c < cols_; ++c)
            for (int r = 0; r < rows_; ++r)
                out(c, r) = std::conj((*this)(r, c));
        return out;
    }

    CMatrix transpose() const {
        CMatrix out(cols_, rows_);
        for (int c = 0; c < cols_; ++c)
            for (int r = 0; r < rows_; ++r)
                out(c, r) = (*this)(r, c);
        return out;
    }

    CMatrix& operator+=(const CMatrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] += o.data_[i];
        return *this;
    }
    CMatrix& operator-=(const CMatrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] -= o.data_[i];
        return *this;
    }
    CMatrix& operator*=(cplx s) {
        for (auto& x : data_)
            x *= s;
        return *this;
    }

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

    friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("CMatrix multiply: inner dimensions differ");
        CMatrix out(a.rows_, b.cols_);
        for (int c = 0; c < b.cols_; ++c)
            for (int k = 0; k < a.cols_; ++k) {
                const cplx bkc = b(k, c);
                if (bkc == cplx{})
                    continue;
                const cplx* acol = a.col(k);
                cplx* ocol = out.col(c);
                for (int r = 0; r < a.rows_; ++r)
                    ocol[r] += acol[r] * bkc;
            }
        return out;
    }

    double frobenius_norm() const { return std::sqrt(squared_norm()); }

    double squared_norm() const {
        double s = 0.0;
        for (const auto& x : data_)
            s += std::norm(x);
        return s;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& x : data_)
            m = std::max(m, std::abs(x));
        return m;
    }

    bool is_finite() const {
        for (const auto& x : data_)
            if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
                return false;
        return true;
    }

    bool same_shape(const CMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  private:
    void check_same_shape(const CMatrix& o) const {
        if (!same_shape(o))
            throw std::invalid_argument("CMatrix: shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> data_;
};

/// A^H * B without forming the adjoint.
inline CMatrix adjoint_times(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("adjoint_times: row counts differ");
    CMatrix out(a.cols(), b.cols());
    for (int c = 0; c < b.cols(); ++c)
        for (int r = 0; r < a.cols(); ++r) {
            cplx s{};
            const cplx* ac = a.col(r);
            const cplx* bc = b.col(c);
            for (int k = 0; k < a.rows(); ++k)
                s += std::conj(ac[k]) * bc[k];
            out(r, c) = s;
        }
    return out;
}

/// Re tr(A^H B), the real inner product of two equal-shape matrices.
inline double real_inner(const CMatrix& a, const CMatrix& b) {
    if (!a.same_shape(b))
        throw std::invalid_argument("real_inner: shape mismatch");
    double s = 0.0;
    const cplx* pa = a.data();
    const cplx* pb = b.data();
    for (std::size_t i = 0; i < a.size(); ++i)
        s += pa[i].real() * pb[i].real() + pa[i].imag() * pb[i].imag();
    return s;
}

} // namespace chanest

#endif
