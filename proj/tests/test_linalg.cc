// Copyright 2026 The EPR2 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "epr2/linalg.h"
#include "epr2/states.h"
#include "test_util.h"

namespace epr2 {
namespace {

using testing::random_complex;
using testing::Rng;
using testing::throws_kind;

CMat reconstruct(const EigenResult &e) {
    std::vector<Complex> d(e.values.begin(), e.values.end());
    return e.vectors * CMat::diagonal(d) * e.vectors.adjoint();
}

CMat random_hermitian(int n, Rng &rng) {
    CMat g = random_complex(n, n, rng);
    return 0.5 * (g + g.adjoint());
}

CMat random_psd(Rng &rng) {
    std::uniform_int_distribution<int> rank(1, 4);
    CMat g(4, 4);
    int k = rank(rng);
    CMat full = random_complex(4, 4, rng);
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < k; c++) {
            g(r, c) = full(r, c);
        }
    }
    return g * g.adjoint();
}

CMat random_symmetric(int n, Rng &rng) {
    CMat g = random_complex(n, n, rng);
    return 0.5 * (g + g.transpose());
}

TEST(Kron, IdentityTimesIdentity) {
    EXPECT_LE(kron(identity2(), identity2()).max_abs_diff(CMat::identity(4)), 0.0);
}

TEST(Kron, SigmaZSigmaZIsDiagonal) {
    CMat expected = CMat::diagonal({1, -1, -1, 1});
    EXPECT_LE(kron(pauli_z(), pauli_z()).max_abs_diff(expected), 0.0);
}

TEST(Kron, SigmaYSigmaYIsAntidiagonal) {
    CMat expected(4, 4);
    expected(0, 3) = -1;
    expected(1, 2) = 1;
    expected(2, 1) = 1;
    expected(3, 0) = -1;
    EXPECT_LE(kron(pauli_y(), pauli_y()).max_abs_diff(expected), 1e-15);
}

TEST(Kron, MixedProductProperty) {
    Rng rng(11);
    for (int trial = 0; trial < 200; trial++) {
        CMat a = random_complex(2, 2, rng);
        CMat b = random_complex(2, 2, rng);
        CMat c = random_complex(2, 2, rng);
        CMat d = random_complex(2, 2, rng);
        EXPECT_LE((kron(a, b) * kron(c, d)).max_abs_diff(kron(a * c, b * d)), 1e-12);
    }
}

TEST(EigHermitian, DiagonalInput) {
    auto e = eig_hermitian(CMat::diagonal({0.1, 0.4, 0.2, 0.3}));
    ASSERT_EQ(e.values.size(), 4u);
    EXPECT_NEAR(e.values[0], 0.4, 1e-15);
    EXPECT_NEAR(e.values[1], 0.3, 1e-15);
    EXPECT_NEAR(e.values[2], 0.2, 1e-15);
    EXPECT_NEAR(e.values[3], 0.1, 1e-15);
}

TEST(EigHermitian, PauliX) {
    auto e = eig_hermitian(pauli_x());
    EXPECT_NEAR(e.values[0], 1.0, 1e-14);
    EXPECT_NEAR(e.values[1], -1.0, 1e-14);
    EXPECT_LE(reconstruct(e).max_abs_diff(pauli_x()), 1e-10);
}

TEST(EigHermitian, BellProjectorIsRankOne) {
    CMat rho = DensityMatrix::from_pure(pure_theta(M_PI / 4)).matrix();
    auto e = eig_hermitian(rho);
    EXPECT_NEAR(e.values[0], 1.0, 1e-12);
    for (int k = 1; k < 4; k++) {
        EXPECT_NEAR(e.values[k], 0.0, 1e-12);
    }
}

TEST(EigHermitian, RejectsNonHermitian) {
    CMat m = CMat::identity(4);
    m(0, 1) = 1e-6;
    EXPECT_TRUE(throws_kind([&] { eig_hermitian(m); }, ErrorKind::NotHermitian));
}

TEST(EigHermitian, RandomMatricesReconstructAndAreOrthonormal) {
    Rng rng(12);
    for (int trial = 0; trial < 1000; trial++) {
        int n = (trial % 2 == 0) ? 4 : 2;
        CMat m = random_hermitian(n, rng);
        auto e = eig_hermitian(m);
        EXPECT_LE(reconstruct(e).max_abs_diff(m), 1e-10);
        EXPECT_LE((e.vectors.adjoint() * e.vectors).max_abs_diff(CMat::identity(n)), 1e-10);
        double sum = 0;
        for (int k = 0; k < n; k++) {
            sum += e.values[k];
            if (k > 0) {
                EXPECT_GE(e.values[k - 1], e.values[k]);
            }
        }
        EXPECT_NEAR(sum, m.trace().real(), 1e-10);
    }
}

TEST(EigHermitian, DegenerateSpectrum) {
    Rng rng(13);
    CMat u = testing::random_unitary(4, rng);
    CMat m = u * CMat::diagonal({0.5, 0.5, 0.25, 0.25}) * u.adjoint();
    auto e = eig_hermitian(m);
    EXPECT_LE(reconstruct(e).max_abs_diff(m), 1e-10);
    EXPECT_NEAR(e.values[0], 0.5, 1e-12);
    EXPECT_NEAR(e.values[3], 0.25, 1e-12);
}

TEST(SqrtPsd, Identity) {
    EXPECT_LE(sqrt_psd(CMat::identity(4)).max_abs_diff(CMat::identity(4)), 1e-14);
}

TEST(SqrtPsd, Diagonal) {
    CMat s = sqrt_psd(CMat::diagonal({4, 1, 0, 0.25}));
    EXPECT_LE(s.max_abs_diff(CMat::diagonal({2, 1, 0, 0.5})), 1e-14);
}

TEST(SqrtPsd, ProjectorIsFixedPoint) {
    CMat p = DensityMatrix::from_pure(pure_theta(M_PI / 4)).matrix();
    EXPECT_LE(sqrt_psd(p).max_abs_diff(p), 1e-10);
}

TEST(SqrtPsd, RejectsNegativeEigenvalue) {
    EXPECT_TRUE(throws_kind([] { sqrt_psd(CMat::diagonal({1, 1, 1, -1e-6})); }, ErrorKind::NotPSD));
}

TEST(SqrtPsd, ClampsTinyNegativeEigenvalue) {
    CMat s = sqrt_psd(CMat::diagonal({1, 1, 1, -1e-12}));
    EXPECT_NEAR(s(3, 3).real(), 0.0, 1e-15);
}

TEST(SqrtPsd, SquareReproducesRandomPsd) {
    Rng rng(14);
    for (int trial = 0; trial < 1000; trial++) {
        CMat m = random_psd(rng);
        CMat s = sqrt_psd(m);
        EXPECT_TRUE(s.is_hermitian(1e-10));
        EXPECT_LE((s * s).max_abs_diff(m), 1e-9);
        auto e = eig_hermitian(0.5 * (s + s.adjoint()));
        EXPECT_GE(e.values[3], -1e-9);
    }
}

TEST(Takagi, DiagonalInput) {
    CMat m = CMat::diagonal({3, 2, 1, 0});
    auto t = takagi(m);
    ASSERT_EQ(t.values.size(), 4u);
    EXPECT_NEAR(t.values[0], 3, 1e-14);
    EXPECT_NEAR(t.values[1], 2, 1e-14);
    EXPECT_NEAR(t.values[2], 1, 1e-14);
    EXPECT_NEAR(t.values[3], 0, 1e-14);
    EXPECT_TRUE(t.unitary.is_unitary(1e-10));
    std::vector<Complex> d(t.values.begin(), t.values.end());
    EXPECT_LE((t.unitary * CMat::diagonal(d) * t.unitary.transpose()).max_abs_diff(m), 1e-9);
}

TEST(Takagi, DegenerateSigmaX) {
    auto t = takagi(pauli_x());
    EXPECT_NEAR(t.values[0], 1, 1e-12);
    EXPECT_NEAR(t.values[1], 1, 1e-12);
    EXPECT_TRUE(t.unitary.is_unitary(1e-10));
    CMat d = CMat::diagonal({t.values[0], t.values[1]});
    EXPECT_LE((t.unitary * d * t.unitary.transpose()).max_abs_diff(pauli_x()), 1e-9);
}

TEST(Takagi, RejectsNonSymmetric) {
    CMat m = CMat::identity(2);
    m(0, 1) = 1.0;
    EXPECT_TRUE(throws_kind([&] { takagi(m); }, ErrorKind::NotSymmetric));
}

TEST(Takagi, RandomSymmetricReconstruct) {
    Rng rng(15);
    for (int trial = 0; trial < 1000; trial++) {
        int n = (trial % 4 == 3) ? 2 : 4;
        CMat m = random_symmetric(n, rng);
        auto t = takagi(m);
        EXPECT_TRUE(t.unitary.is_unitary(1e-10));
        std::vector<Complex> d(t.values.begin(), t.values.end());
        EXPECT_LE((t.unitary * CMat::diagonal(d) * t.unitary.transpose()).max_abs_diff(m), 1e-9);
        for (int k = 0; k < n; k++) {
            EXPECT_GE(t.values[k], 0.0);
            if (k > 0) {
                EXPECT_GE(t.values[k - 1], t.values[k]);
            }
        }
    }
}

TEST(Takagi, RankDeficientAndDegenerate) {
    Rng rng(16);
    for (int trial = 0; trial < 200; trial++) {
        CMat u = testing::random_unitary(4, rng);
        std::vector<Complex> d = {1.0, 1.0, 0.0, 0.0};
        if (trial % 3 == 1) {
            d = {2.0, 0.5, 0.5, 0.0};
        } else if (trial % 3 == 2) {
            d = {0.7, 0.7, 0.7, 0.7};
        }
        CMat m = u * CMat::diagonal(d) * u.transpose();
        auto t = takagi(m);
        EXPECT_TRUE(t.unitary.is_unitary(1e-10));
        std::vector<Complex> v(t.values.begin(), t.values.end());
        EXPECT_LE((t.unitary * CMat::diagonal(v) * t.unitary.transpose()).max_abs_diff(m), 1e-9);
    }
}

}  // namespace
}  // namespace epr2
