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

#ifndef CHANEST_SVD_HPP
#define CHANEST_SVD_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "chanest/cmatrix.hpp"
#include "chanest/tolerances.hpp"

namespace chanest {

/// Compact SVD A = U * diag(S) * V^H with U (m x r), V (n x r), r = min(m, n).
/// S is non-increasing and nonnegative; U and V have orthonormal columns.
struct SvdFactors {
    CMatrix U;
    std::vector<double> S;
    CMatrix V;
};

struct EigResult {
    std::vector<double> values; // descending
    CMatrix vectors;            // orthonormal columns, A * v_i = values[i] * v_i
};

namespace detail {

inline double col_norm2(const cplx* c, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        s += std::norm(c[i]);
    return s;
}

inline cplx col_dot(const cplx* a, const cplx* b, int n) {
    cplx s{};
    for (int i = 0; i < n; ++i)
        s += std::conj(a[i]) * b[i];
    return s;
}

} // namespace detail

/// One-sided Jacobi SVD for small dense complex matrices. The instance owns
/// its work buffers, so a caller in a hot loop can reuse it across calls.
/// Factors are deterministic: the largest-magnitude entry of each left
/// singular vector is made real-positive, the matching phase is absorbed
/// into the right singular vector.
class JacobiSvd {
  public:
    void compute(CMatrixConstView A) { compute_impl(A, true); }

    /// Singular values only; skips factor assembly.
    void compute_values(CMatrixConstView A) { compute_impl(A, false); }

    int rows() const { return m_; }
    int cols() const { return n_; }
    int rank_size() const { return r_; }

    const double* values() const { return sigma_.data(); }

    double value(int i) const { return sigma_[i]; }
    double spectral() const { return r_ > 0 ? sigma_[0] : 0.0; }
    double nuclear() const { return std::accumulate(sigma_.begin(), sigma_.end(), 0.0); }

    CMatrixConstView u() const { return {u_.data(), m_, r_, m_}; }
    CMatrixConstView v() const { return {v_.data(), n_, r_, n_}; }
    const cplx* u_col(int i) const { return u_.data() + std::size_t(m_) * i; }
    const cplx* v_col(int i) const { return v_.data() + std::size_t(n_) * i; }

  private:
    void compute_impl(CMatrixConstView A, bool want_factors) {
        m_ = A.rows;
        n_ = A.cols;
        if (m_ < 1 || n_ < 1)
            throw std::invalid_argument("JacobiSvd: empty matrix");
        r_ = std::min(m_, n_);
        const bool flip = m_ < n_;
        const int R = flip ? n_ : m_;
        const int C = flip ? m_ : n_;

        w_.assign(std::size_t(R) * C, cplx{});
        if (flip) {
            for (int c = 0; c < n_; ++c)
                for (int r = 0; r < m_; ++r)
                    w_[c + std::size_t(R) * r] = std::conj(A(r, c));
        } else {
            for (int c = 0; c < n_; ++c)
                for (int r = 0; r < m_; ++r)
                    w_[r + std::size_t(R) * c] = A(r, c);
        }
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (!std::isfinite(w_[i].real()) || !std::isfinite(w_[i].imag()))
                throw std::invalid_argument("JacobiSvd: non-finite input");

        const bool track_v = want_factors;
        if (track_v) {
            vacc_.assign(std::size_t(C) * C, cplx{});
            for (int i = 0; i < C; ++i)
                vacc_[i + std::size_t(C) * i] = 1.0;
        }

        constexpr int max_sweeps = 100;
        constexpr double thresh = 1e-15;
        for (int sweep = 0; sweep < max_sweeps; ++sweep) {
            bool rotated = false;
            for (int p = 0; p < C - 1; ++p) {
                for (int q = p + 1; q < C; ++q) {
                    cplx* wp = w_.data() + std::size_t(R) * p;
                    cplx* wq = w_.data() + std::size_t(R) * q;
                    const double app = detail::col_norm2(wp, R);
                    const double aqq = detail::col_norm2(wq, R);
                    const cplx apq = detail::col_dot(wp, wq, R);
                    const double b = std::abs(apq);
                    if (b <= thresh * std::sqrt(app * aqq) || b == 0.0)
                        continue;
                    rotated = true;

                    const cplx beta = std::conj(apq / b);
                    const double zeta = (aqq - app) / (2.0 * b);
                    const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                     (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;

                    for (int i = 0; i < R; ++i) {
                        const cplx xp = wp[i];
                        const cplx xq = beta * wq[i];
                        wp[i] = c * xp - s * xq;
                        wq[i] = s * xp + c * xq;
                    }
                    if (track_v) {
                        cplx* vp = vacc_.data() + std::size_t(C) * p;
                        cplx* vq = vacc_.data() + std::size_t(C) * q;
                        for (int i = 0; i < C; ++i) {
                            const cplx xp = vp[i];
                            const cplx xq = beta * vq[i];
                            vp[i] = c * xp - s * xq;
                            vq[i] = s * xp + c * xq;
                        }
                    }
                }
            }
            if (!rotated)
                break;
        }

        sigma_.resize(C);
        order_.resize(C);
        for (int j = 0; j < C; ++j) {
            sigma_[j] = std::sqrt(detail::col_norm2(w_.data() + std::size_t(R) * j, R));
            order_[j] = j;
        }
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return sigma_[a] > sigma_[b]; });

        sorted_sigma_.resize(C);
        for (int j = 0; j < C; ++j)
            sorted_sigma_[j] = sigma_[order_[j]];
        sigma_.swap(sorted_sigma_);
        sigma_.resize(r_); // C == r_ always, kept for clarity

        if (!want_factors)
            return;

        // Left factor of the tall problem: normalized columns of w_,
        // completing exact-zero columns to an orthonormal set.
        left_.assign(std::size_t(R) * C, cplx{});
        for (int j = 0; j < C; ++j) {
            const cplx* src = w_.data() + std::size_t(R) * order_[j];
            cplx* dst = left_.data() + std::size_t(R) * j;
            const double sv = sigma_[j];
            if (sv >= std::numeric_limits<double>::min()) {
                for (int i = 0; i < R; ++i)
                    dst[i] = src[i] / sv;
            }
        }
        for (int j = 0; j < C; ++j)
            if (sigma_[j] < std::numeric_limits<double>::min())
                complete_column(R, C, j);

        right_.assign(std::size_t(C) * C, cplx{});
        for (int j = 0; j < C; ++j) {
            const cplx* src = vacc_.data() + std::size_t(C) * order_[j];
            std::copy(src, src + C, right_.data() + std::size_t(C) * j);
        }

        if (!flip) {
            u_.swap(left_);
            v_.swap(right_);
        } else {
            u_.swap(right_);
            v_.swap(left_);
        }
        apply_phase_convention();
    }

    // Replace column j of left_ with a unit vector orthogonal to all other
    // columns, chosen deterministically from the canonical basis.
    void complete_column(int R, int C, int j) {
        scratch_.assign(R, cplx{});
        best_scratch_.assign(R, cplx{});
        double best = -1.0;
        for (int k = 0; k < R; ++k) {
            std::fill(scratch_.begin(), scratch_.end(), cplx{});
            scratch_[k] = 1.0;
            for (int pass = 0; pass < 2; ++pass)
                for (int c = 0; c < C; ++c) {
                    if (c == j)
                        continue;
                    const cplx* uc = left_.data() + std::size_t(R) * c;
                    const cplx proj = detail::col_dot(uc, scratch_.data(), R);
                    for (int i = 0; i < R; ++i)
                        scratch_[i] -= proj * uc[i];
                }
            const double nrm = std::sqrt(detail::col_norm2(scratch_.data(), R));
            if (nrm > best) {
                best = nrm;
                best_scratch_ = scratch_;
            }
        }
        cplx* dst = left_.data() + std::size_t(R) * j;
        for (int i = 0; i < R; ++i)
            dst[i] = best_scratch_[i] / best;
    }

    void apply_phase_convention() {
        for (int j = 0; j < r_; ++j) {
            cplx* uc = u_.data() + std::size_t(m_) * j;
            cplx* vc = v_.data() + std::size_t(n_) * j;
            int k = 0;
            double mx = -1.0;
            for (int i = 0; i < m_; ++i) {
                const double a = std::abs(uc[i]);
                if (a > mx) {
                    mx = a;
                    k = i;
                }
            }
            if (mx <= 0.0)
                continue;
            const cplx ph = std::conj(uc[k] / mx);
            for (int i = 0; i < m_; ++i)
                uc[i] *= ph;
            for (int i = 0; i < n_; ++i)
                vc[i] *= ph;
        }
    }

    int m_ = 0, n_ = 0, r_ = 0;
    std::vector<cplx> w_, vacc_, left_, right_, u_, v_;
    std::vector<cplx> scratch_, best_scratch_;
    std::vector<double> sigma_, sorted_sigma_;
    std::vector<int> order_;
};

inline SvdFactors compact_svd(const CMatrix& A) {
    JacobiSvd svd;
    svd.compute(A.view());
    SvdFactors f;
    f.U = CMatrix(svd.rows(), svd.rank_size());
    f.V = CMatrix(svd.cols(), svd.rank_size());
    f.S.assign(svd.values(), svd.values() + svd.rank_size());
    for (int j = 0; j < svd.rank_size(); ++j) {
        std::copy(svd.u_col(j), svd.u_col(j) + svd.rows(), f.U.col(j));
        std::copy(svd.v_col(j), svd.v_col(j) + svd.cols(), f.V.col(j));
    }
    return f;
}

inline std::vector<double> singular_values(const CMatrix& A) {
    JacobiSvd svd;
    svd.compute_values(A.view());
    return std::vector<double>(svd.values(), svd.values() + svd.rank_size());
}

inline double spectral_norm(const CMatrix& A) {
    JacobiSvd svd;
    svd.compute_values(A.view());
    return svd.spectral();
}

inline double nuclear_norm(const CMatrix& A) {
    JacobiSvd svd;
    svd.compute_values(A.view());
    return svd.nuclear();
}

/// Eigendecomposition of a Hermitian matrix by the cyclic complex Jacobi
/// method. The input must be Hermitian within tol::hermitian_input relative
/// to its Frobenius norm; it is symmetrized before iterating.
inline EigResult hermitian_eig(const CMatrix& A) {
    if (A.rows() != A.cols())
        throw std::invalid_argument("hermitian_eig: matrix not square");
    if (!A.is_finite())
        throw std::invalid_argument("hermitian_eig: non-finite input");
    const int n = A.rows();

    double dev2 = 0.0;
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r)
            dev2 += 0.25 * std::norm(A(r, c) - std::conj(A(c, r)));
    const double fro = A.frobenius_norm();
    if (std::sqrt(dev2) > tol::hermitian_input * std::max(1.0, fro))
        throw std::invalid_argument("hermitian_eig: input not Hermitian within tolerance");

    CMatrix W(n, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r)
            W(r, c) = 0.5 * (A(r, c) + std::conj(A(c, r)));
    CMatrix E = CMatrix::identity(n);

    constexpr int max_sweeps = 100;
    constexpr double thresh = 1e-15;
    const double scale = std::max(fro, std::numeric_limits<double>::min());
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx alpha = W(p, q);
                const double b = std::abs(alpha);
                if (b <= thresh * scale)
                    continue;
                rotated = true;

                const double wpp = W(p, p).real();
                const double wqq = W(q, q).real();
                const cplx beta = std::conj(alpha / b);
                const double zeta = (wqq - wpp) / (2.0 * b);
                const double t =
                    (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // W <- R^H W R and E <- E R with R = diag(1, beta) rotation.
                for (int i = 0; i < n; ++i) {
                    const cplx xp = W(i, p);
                    const cplx xq = beta * W(i, q);
                    W(i, p) = c * xp - s * xq;
                    W(i, q) = s * xp + c * xq;
                }
                for (int i = 0; i < n; ++i) {
                    const cplx xp = W(p, i);
                    const cplx xq = std::conj(beta) * W(q, i);
                    W(p, i) = c * xp - s * xq;
                    W(q, i) = s * xp + c * xq;
                }
                for (int i = 0; i < n; ++i) {
                    const cplx xp = E(i, p);
                    const cplx xq = beta * E(i, q);
                    E(i, p) = c * xp - s * xq;
                    E(i, q) = s * xp + c * xq;
                }
                W(p, q) = 0.0;
                W(q, p) = 0.0;
                W(p, p) = W(p, p).real();
                W(q, q) = W(q, q).real();
            }
        }
        if (!rotated)
            break;
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return W(a, a).real() > W(b, b).real(); });

    EigResult res;
    res.values.resize(n);
    res.vectors = CMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        res.values[j] = W(order[j], order[j]).real();
        for (int i = 0; i < n; ++i)
            res.vectors(i, j) = E(i, order[j]);
    }
    return res;
}

/// Minimum-norm least-squares solve: X = pinv(A) * B via the compact SVD,
/// truncating singular values below max(m, n) * eps * sigma_max.
inline CMatrix lstsq(const CMatrix& A, const CMatrix& B) {
    if (A.rows() != B.rows())
        throw std::invalid_argument("lstsq: row counts differ");
    const SvdFactors f = compact_svd(A);
    const double cutoff = std::max(A.rows(), A.cols()) *
                          std::numeric_limits<double>::epsilon() * (f.S.empty() ? 0.0 : f.S[0]);
    CMatrix UtB = adjoint_times(f.U, B); // r x k
    for (int i = 0; i < UtB.rows(); ++i) {
        const double s = f.S[i];
        const cplx scale = (s > cutoff) ? cplx{1.0 / s, 0.0} : cplx{0.0, 0.0};
        for (int c = 0; c < UtB.cols(); ++c)
            UtB(i, c) *= scale;
    }
    return f.V * UtB;
}

} // namespace chanest

#endif
