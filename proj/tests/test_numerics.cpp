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

#include <catch2/catch_amalgamated.hpp>

#include <chanest/cmatrix.hpp>
#include <chanest/rng.hpp>
#include <chanest/svd.hpp>

using namespace chanest;

namespace {

CMatrix random_complex(Rng& rng, int rows, int cols) {
    CMatrix A(rows, cols);
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r)
            A(r, c) = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    return A;
}

CMatrix reconstruct(const SvdFactors& f) {
    CMatrix US = f.U;
    for (int j = 0; j < US.cols(); ++j)
        for (int i = 0; i < US.rows(); ++i)
            US(i, j) *= f.S[j];
    return US * f.V.adjoint();
}

double orthonormality_error(const CMatrix& Q) {
    CMatrix G = adjoint_times(Q, Q);
    G -= CMatrix::identity(Q.cols());
    return G.max_abs();
}

// Random unitary via orthonormalized Gaussian columns (Gram-Schmidt).
CMatrix random_unitary(Rng& rng, int n) {
    CMatrix A = random_complex(rng, n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < j; ++k) {
            cplx proj{};
            for (int i = 0; i < n; ++i)
                proj += std::conj(A(i, k)) * A(i, j);
            for (int i = 0; i < n; ++i)
                A(i, j) -= proj * A(i, k);
        }
        double nrm = 0.0;
        for (int i = 0; i < n; ++i)
            nrm += std::norm(A(i, j));
        nrm = std::sqrt(nrm);
        for (int i = 0; i < n; ++i)
            A(i, j) /= nrm;
    }
    return A;
}

} // namespace

TEST_CASE("compact_svd of a diagonal matrix") {
    CMatrix A(2, 2);
    A(0, 0) = 3.0;
    A(1, 1) = 1.0;
    const SvdFactors f = compact_svd(A);
    REQUIRE(f.S.size() == 2);
    CHECK(f.S[0] == Catch::Approx(3.0).margin(1e-12));
    CHECK(f.S[1] == Catch::Approx(1.0).margin(1e-12));
    // U and V equal identity up to per-column unit phase.
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 2; ++i) {
            CHECK(std::abs(f.U(i, j)) == Catch::Approx(i == j ? 1.0 : 0.0).margin(1e-12));
            CHECK(std::abs(f.V(i, j)) == Catch::Approx(i == j ? 1.0 : 0.0).margin(1e-12));
        }
}

TEST_CASE("compact_svd of a rank-one outer product") {
    // a * h^T with ||a|| = 1 and h = [1, 2j, -1]: S = [sqrt(6), 0, 0].
    const int m = 4;
    Rng rng(7);
    CMatrix a = random_complex(rng, m, 1);
    double nrm = std::sqrt(a.squared_norm());
    for (int i = 0; i < m; ++i)
        a(i, 0) /= nrm;
    const cplx h[3] = {{1, 0}, {0, 2}, {-1, 0}};
    CMatrix A(m, 3);
    for (int c = 0; c < 3; ++c)
        for (int r = 0; r < m; ++r)
            A(r, c) = a(r, 0) * h[c];

    const SvdFactors f = compact_svd(A);
    CHECK(f.S[0] == Catch::Approx(std::sqrt(6.0)).epsilon(1e-12));
    CHECK(f.S[1] <= 1e-12);
    CHECK(f.S[2] <= 1e-12);
    CHECK(orthonormality_error(f.U) < 1e-10);
    CHECK(orthonormality_error(f.V) < 1e-10);
    CHECK((reconstruct(f) - A).frobenius_norm() <= 1e-9 * std::sqrt(6.0));
}

TEST_CASE("compact_svd reconstruction property over seeded draws") {
    Rng rng(20260810);
    for (int trial = 0; trial < 1000; ++trial) {
        const int m = 1 + int(rng.next_u64() % 6);
        const int n = 1 + int(rng.next_u64() % 6);
        CMatrix A = random_complex(rng, m, n);
        const SvdFactors f = compact_svd(A);

        REQUIRE(int(f.S.size()) == std::min(m, n));
        for (std::size_t i = 0; i + 1 < f.S.size(); ++i)
            REQUIRE(f.S[i] >= f.S[i + 1]);
        REQUIRE(f.S.back() >= 0.0);
        REQUIRE((reconstruct(f) - A).frobenius_norm() <=
                1e-9 * std::max(1.0, A.frobenius_norm()));
        REQUIRE(orthonormality_error(f.U) < 1e-10);
        REQUIRE(orthonormality_error(f.V) < 1e-10);
    }
}

TEST_CASE("compact_svd fixed 4x3 shape, dedicated sweep") {
    Rng rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        CMatrix A = random_complex(rng, 4, 3);
        const SvdFactors f = compact_svd(A);
        REQUIRE((reconstruct(f) - A).frobenius_norm() <=
                1e-9 * std::max(1.0, A.frobenius_norm()));
    }
}

TEST_CASE("compact_svd phase convention is reproducible") {
    Rng rng(5);
    CMatrix A = random_complex(rng, 5, 3);
    const SvdFactors f = compact_svd(A);
    for (int j = 0; j < 3; ++j) {
        int k = 0;
        double mx = -1;
        for (int i = 0; i < 5; ++i)
            if (std::abs(f.U(i, j)) > mx) {
                mx = std::abs(f.U(i, j));
                k = i;
            }
        CHECK(f.U(k, j).imag() == Catch::Approx(0.0).margin(1e-12));
        CHECK(f.U(k, j).real() > 0.0);
    }
}

TEST_CASE("compact_svd of constructed factors reproduces the spectrum") {
    Rng rng(11);
    const std::vector<double> S = {2.5, 1.0, 0.25};
    CMatrix U = random_unitary(rng, 4);
    CMatrix V = random_unitary(rng, 3);
    CMatrix A(4, 3);
    for (int c = 0; c < 3; ++c)
        for (int r = 0; r < 4; ++r) {
            cplx s{};
            for (int k = 0; k < 3; ++k)
                s += U(r, k) * S[k] * std::conj(V(c, k));
            A(r, c) = s;
        }
    const SvdFactors f = compact_svd(A);
    for (int k = 0; k < 3; ++k)
        CHECK(f.S[k] == Catch::Approx(S[k]).margin(1e-9));
}

TEST_CASE("norm ordering: nuclear >= frobenius >= spectral") {
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + int(rng.next_u64() % 6);
        const int n = 1 + int(rng.next_u64() % 6);
        CMatrix A = random_complex(rng, m, n);
        const double nuc = nuclear_norm(A);
        const double fro = A.frobenius_norm();
        const double spec = spectral_norm(A);
        REQUIRE(nuc >= fro - 1e-12 * std::max(1.0, nuc));
        REQUIRE(fro >= spec - 1e-12 * std::max(1.0, fro));
    }
}

TEST_CASE("compact_svd rejects non-finite input") {
    CMatrix A(2, 2);
    A(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(compact_svd(A), std::invalid_argument);
}

TEST_CASE("compact_svd of the zero matrix") {
    CMatrix A(3, 2);
    const SvdFactors f = compact_svd(A);
    CHECK(f.S[0] == 0.0);
    CHECK(f.S[1] == 0.0);
    CHECK(orthonormality_error(f.U) < 1e-12);
    CHECK(orthonormality_error(f.V) < 1e-12);
}

TEST_CASE("hermitian_eig of the identity") {
    const auto res = hermitian_eig(CMatrix::identity(3));
    for (double v : res.values)
        CHECK(v == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("hermitian_eig of a diagonal matrix sorts descending") {
    CMatrix A(3, 3);
    A(0, 0) = 5.0;
    A(1, 1) = 2.0;
    A(2, 2) = -1.0;
    const auto res = hermitian_eig(A);
    CHECK(res.values[0] == Catch::Approx(5.0).margin(1e-12));
    CHECK(res.values[1] == Catch::Approx(2.0).margin(1e-12));
    CHECK(res.values[2] == Catch::Approx(-1.0).margin(1e-12));
}

TEST_CASE("hermitian_eig recovers constructed spectra") {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + int(rng.next_u64() % 5);
        std::vector<double> d(n);
        for (auto& x : d)
            x = rng.uniform(-2.0, 2.0);
        CMatrix Q = random_unitary(rng, n);
        CMatrix B(n, n);
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < n; ++r) {
                cplx s{};
                for (int k = 0; k < n; ++k)
                    s += Q(r, k) * d[k] * std::conj(Q(c, k));
                B(r, c) = s;
            }
        const auto res = hermitian_eig(B);

        std::vector<double> want = d;
        std::sort(want.begin(), want.end(), std::greater<>());
        for (int i = 0; i < n; ++i)
            REQUIRE(res.values[i] == Catch::Approx(want[i]).margin(1e-9));

        // Residual A v = lambda v.
        const double fro = B.frobenius_norm();
        for (int j = 0; j < n; ++j) {
            double err = 0.0;
            for (int i = 0; i < n; ++i) {
                cplx s{};
                for (int k = 0; k < n; ++k)
                    s += B(i, k) * res.vectors(k, j);
                s -= res.values[j] * res.vectors(i, j);
                err += std::norm(s);
            }
            REQUIRE(std::sqrt(err) <= 1e-9 * fro);
        }
        REQUIRE(orthonormality_error(res.vectors) < 1e-10);
    }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
    CMatrix A(2, 2);
    A(0, 1) = 1.0;
    A(1, 0) = 0.5; // asymmetric beyond tolerance
    CHECK_THROWS_AS(hermitian_eig(A), std::invalid_argument);
}

TEST_CASE("eigenvalues of A^H A equal squared singular values") {
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 2 + int(rng.next_u64() % 5);
        const int n = 2 + int(rng.next_u64() % 5);
        CMatrix A = random_complex(rng, m, n);
        CMatrix G = adjoint_times(A, A);
        const auto eig = hermitian_eig(G);
        const auto sv = singular_values(A);
        for (std::size_t i = 0; i < sv.size(); ++i) {
            const double want = sv[i] * sv[i];
            REQUIRE(eig.values[i] == Catch::Approx(want).margin(1e-8 * std::max(1.0, want)));
        }
    }
}

TEST_CASE("sample_complex_gaussian basics") {
    Rng rng(42);
    SECTION("zero variance gives the zero matrix") {
        CMatrix Z = sample_complex_gaussian(rng, 3, 4, 0.0);
        CHECK(Z.frobenius_norm() == 0.0);
    }
    SECTION("identical seeds give identical matrices") {
        Rng r1(123), r2(123);
        CMatrix A = sample_complex_gaussian(r1, 5, 5, 2.0);
        CMatrix B = sample_complex_gaussian(r2, 5, 5, 2.0);
        CHECK((A - B).max_abs() == 0.0);
    }
    SECTION("negative variance throws") {
        CHECK_THROWS_AS(sample_complex_gaussian(rng, 2, 2, -1.0), std::invalid_argument);
    }
}

TEST_CASE("sample_complex_gaussian sample statistics") {
    Rng rng(31415);
    const int n = 1000;
    CMatrix A = sample_complex_gaussian(rng, n, n, 1.0); // 10^6 samples
    cplx mean{};
    double var = 0.0;
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) {
            mean += A(r, c);
            var += std::norm(A(r, c));
        }
    mean /= double(n) * n;
    var /= double(n) * n;
    CHECK(std::abs(mean) <= 0.005);
    CHECK(var >= 0.99);
    CHECK(var <= 1.01);
}

TEST_CASE("rng determinism and stream independence") {
    Rng a(99), b(99);
    for (int i = 0; i < 100; ++i)
        REQUIRE(a.next_u64() == b.next_u64());
    Rng c(1);
    Rng d = c.split();
    CHECK(c.next_u64() != d.next_u64());
}

TEST_CASE("lstsq solves overdetermined systems") {
    Rng rng(77);
    CMatrix A = random_complex(rng, 8, 3);
    CMatrix X = random_complex(rng, 3, 2);
    CMatrix B = A * X;
    CMatrix got = lstsq(A, B);
    CHECK((got - X).max_abs() < 1e-10);
}
