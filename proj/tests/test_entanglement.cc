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

#include <algorithm>
#include <cmath>

#include "epr2/entanglement.h"
#include "epr2/states.h"
#include "test_util.h"

namespace epr2 {
namespace {

using testing::Rng;

int rank_of(const DensityMatrix &rho) {
    auto e = eig_hermitian(rho.matrix());
    return static_cast<int>(std::count_if(e.values.begin(), e.values.end(), [](double v) { return v >= 1e-12; }));
}

void expect_valid_decomposition(const DensityMatrix &rho, const WoottersDecomposition &d) {
    double c = concurrence(rho);
    double total = 0;
    for (const auto &b : d.branches) {
        EXPECT_GE(b.t, 0.0);
        total += b.t;
    }
    EXPECT_NEAR(total, 1.0, 1e-10);
    EXPECT_LE(d.mixture().max_abs_diff(rho.matrix()), 1e-9);
    EXPECT_NEAR(d.average_concurrence(), c, 1e-8);
    if (c > 0) {
        EXPECT_LE(static_cast<int>(d.branches.size()), rank_of(rho));
        for (const auto &b : d.branches) {
            EXPECT_NEAR(concurrence_pure(b.phi), c, 1e-8);
        }
    } else {
        for (const auto &b : d.branches) {
            EXPECT_LE(concurrence_pure(b.phi), 1e-8);
        }
    }
}

TEST(ConcurrencePure, Examples) {
    EXPECT_EQ(concurrence_pure(pure_theta(0)), 0.0);
    for (double theta : {0.1, 0.3, M_PI / 6, M_PI / 4}) {
        EXPECT_NEAR(concurrence_pure(pure_theta(theta)), std::sin(2 * theta), 1e-15);
    }
    double h = 1 / std::sqrt(2.0);
    EXPECT_NEAR(concurrence_pure(PureState({0.0, h, h, 0.0})), 1.0, 1e-15);
}

TEST(SpinFlip, Examples) {
    auto bell = DensityMatrix::from_pure(pure_theta(M_PI / 4));
    EXPECT_LE(spin_flip(bell).matrix().max_abs_diff(bell.matrix()), 1e-15);
    auto zero = DensityMatrix(CMat::diagonal({1, 0, 0, 0}));
    EXPECT_LE(spin_flip(zero).matrix().max_abs_diff(CMat::diagonal({0, 0, 0, 1})), 1e-15);
    auto mixed = werner(0);
    EXPECT_LE(spin_flip(mixed).matrix().max_abs_diff(mixed.matrix()), 1e-15);
}

TEST(SpinFlip, MatchesExplicitFormula) {
    Rng rng(31);
    CMat yy = kron(pauli_y(), pauli_y());
    for (int trial = 0; trial < 100; trial++) {
        auto rho = testing::random_density(rng);
        CMat expected = yy * rho.matrix().conj() * yy;
        EXPECT_LE(spin_flip(rho).matrix().max_abs_diff(expected), 1e-15);
    }
}

TEST(RSpectrum, Examples) {
    auto bell = r_spectrum(DensityMatrix::from_pure(pure_theta(M_PI / 4)));
    EXPECT_NEAR(bell.lambdas[0], 1.0, 1e-12);
    for (int k = 1; k < 4; k++) {
        EXPECT_NEAR(bell.lambdas[k], 0.0, 1e-12);
    }
    auto mixed = r_spectrum(werner(0));
    for (int k = 0; k < 4; k++) {
        EXPECT_NEAR(mixed.lambdas[k], 1.0 / 16, 1e-14);
    }
    auto boundary = r_spectrum(werner(1.0 / 3));
    double c = std::sqrt(boundary.lambdas[0]);
    for (int k = 1; k < 4; k++) {
        c -= std::sqrt(boundary.lambdas[k]);
    }
    EXPECT_NEAR(c, 0.0, 1e-10);
}

TEST(RSpectrum, SumEqualsTraceAndDescending) {
    Rng rng(32);
    for (int trial = 0; trial < 1000; trial++) {
        auto rho = testing::random_density(rng, 1 + trial % 4);
        auto sp = r_spectrum(rho);
        double sum = 0;
        for (int k = 0; k < 4; k++) {
            EXPECT_GE(sp.lambdas[k], 0.0);
            if (k > 0) {
                EXPECT_GE(sp.lambdas[k - 1], sp.lambdas[k]);
            }
            sum += sp.lambdas[k];
        }
        EXPECT_NEAR(sum, (rho.matrix() * spin_flip(rho).matrix()).trace().real(), 1e-10);
    }
}

TEST(RSpectrum, AgreesWithConcurrenceOnFullRankStates) {
    Rng rng(39);
    for (int trial = 0; trial < 500; trial++) {
        auto rho = testing::random_density(rng);
        auto sp = r_spectrum(rho);
        double c = std::sqrt(sp.lambdas[0]);
        for (int k = 1; k < 4; k++) {
            c -= std::sqrt(sp.lambdas[k]);
        }
        EXPECT_NEAR(std::max(c, 0.0), concurrence(rho), 1e-9);
    }
}

TEST(Concurrence, Examples) {
    EXPECT_NEAR(concurrence(werner(0.6)), 0.4, 1e-10);
    EXPECT_NEAR(concurrence(bell_diag(BDParams{0.15, 0.15, 0.1, 0.1, 0.5})), 0.3, 1e-10);
    EXPECT_EQ(concurrence(bell_diag(BDParams{0.5, 0.5, 0, 0, 0})), 0.0);
}

TEST(Concurrence, WernerLine) {
    for (int k = 0; k <= 100; k++) {
        double x = k / 100.0;
        EXPECT_NEAR(concurrence(werner(x)), std::max(0.0, (3 * x - 1) / 2), 1e-10) << "x=" << x;
    }
}

TEST(Concurrence, BellDiagonalClosedForm) {
    Rng rng(33);
    for (int trial = 0; trial < 200; trial++) {
        std::array<double, 5> w;
        double sum = 0;
        for (auto &v : w) {
            v = testing::uniform(rng, 0, 1);
            sum += v;
        }
        BDParams p{w[0] / sum, w[1] / sum, w[2] / sum, w[3] / sum, w[4] / sum};
        double expected = std::max(0.0, p.gamma - 2 * std::sqrt(p.a * p.b));
        EXPECT_NEAR(concurrence(bell_diag(p)), expected, 1e-9);
    }
}

TEST(Concurrence, MatchesPureFormula) {
    Rng rng(34);
    for (int trial = 0; trial < 500; trial++) {
        auto psi = testing::random_pure(rng);
        EXPECT_NEAR(concurrence(DensityMatrix::from_pure(psi)), concurrence_pure(psi), 1e-9);
    }
}

TEST(Concurrence, RangeAndLocalUnitaryInvariance) {
    Rng rng(35);
    for (int trial = 0; trial < 1000; trial++) {
        auto rho = testing::random_density(rng, 1 + trial % 4);
        double c = concurrence(rho);
        EXPECT_GE(c, 0.0);
        EXPECT_LE(c, 1.0);
        auto moved = testing::conjugate_local(rho, testing::random_unitary(2, rng), testing::random_unitary(2, rng));
        EXPECT_NEAR(concurrence(moved), c, 1e-9);
    }
}

TEST(Wootters, PureStateIsSingleBranch) {
    Rng rng(36);
    auto psi = testing::random_pure(rng);
    auto rho = DensityMatrix::from_pure(psi);
    auto d = wootters_decomposition(rho);
    ASSERT_EQ(d.branches.size(), 1u);
    EXPECT_NEAR(d.branches[0].t, 1.0, 1e-12);
    expect_valid_decomposition(rho, d);
}

TEST(Wootters, BellStateIsSingleBranch) {
    auto d = wootters_decomposition(werner(1));
    ASSERT_EQ(d.branches.size(), 1u);
    EXPECT_NEAR(concurrence_pure(d.branches[0].phi), 1.0, 1e-12);
}

TEST(Wootters, WernerPointEight) {
    auto rho = werner(0.8);
    auto d = wootters_decomposition(rho);
    EXPECT_NEAR(d.average_concurrence(), 0.7, 1e-8);
    expect_valid_decomposition(rho, d);
}

TEST(Wootters, MaximallyMixedState) {
    auto rho = werner(0);
    auto d = wootters_decomposition(rho);
    EXPECT_EQ(d.branches.size(), 4u);
    expect_valid_decomposition(rho, d);
}

TEST(Wootters, NamedFamilies) {
    for (double x : {0.2, 1.0 / 3, 0.34, 0.5, 0.9, 0.999}) {
        expect_valid_decomposition(werner(x), wootters_decomposition(werner(x)));
        auto gw = generalized_werner(x, 0.3);
        expect_valid_decomposition(gw, wootters_decomposition(gw));
    }
    for (auto p : {BDParams{0.5, 0.5, 0, 0, 0}, BDParams{0.15, 0.15, 0.1, 0.1, 0.5}, BDParams{0, 0, 0.3, 0.2, 0.5},
                   BDParams{0.1, 0.0, 0.0, 0.0, 0.9}, BDParams{0.0, 0.0, 0.25, 0.25, 0.5}}) {
        auto rho = bell_diag(p);
        expect_valid_decomposition(rho, wootters_decomposition(rho));
    }
}

TEST(Wootters, RandomMixedStates) {
    Rng rng(37);
    int separable = 0;
    for (int trial = 0; trial < 150; trial++) {
        auto rho = testing::random_entangled(rng);
        expect_valid_decomposition(rho, wootters_decomposition(rho));
    }
    for (int trial = 0; trial < 50; trial++) {
        auto rho = testing::random_separable(rng);
        EXPECT_EQ(concurrence(rho), 0.0);
        separable++;
        expect_valid_decomposition(rho, wootters_decomposition(rho));
    }
    EXPECT_EQ(separable, 50);
}

TEST(Wootters, LowRankStates) {
    Rng rng(38);
    for (int trial = 0; trial < 100; trial++) {
        auto rho = testing::random_density(rng, 2 + trial % 2);
        expect_valid_decomposition(rho, wootters_decomposition(rho));
    }
}

}  // namespace
}  // namespace epr2
