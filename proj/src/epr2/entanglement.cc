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

#include "epr2/entanglement.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "epr2/error.h"
#include "epr2/tolerances.h"

namespace epr2 {

namespace {

using Vec4 = std::array<Complex, 4>;

constexpr int kEqualizeBudget = 500;
constexpr double kEqualizeTol = 1e-13;

// (sy x sy) conj(v); the spin-flip operator is antidiag(-1, 1, 1, -1).
Vec4 tilde(const Vec4 &v) {
    return {-std::conj(v[3]), std::conj(v[2]), std::conj(v[1]), -std::conj(v[0])};
}

Complex inner(const Vec4 &a, const Vec4 &b) {
    Complex acc = 0;
    for (int k = 0; k < 4; k++) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

Vec4 combine(Complex ca, const Vec4 &a, Complex cb, const Vec4 &b) {
    Vec4 out;
    for (int k = 0; k < 4; k++) {
        out[k] = ca * a[k] + cb * b[k];
    }
    return out;
}

PureState normalize(const Vec4 &v, double norm2) {
    double n = std::sqrt(norm2);
    return PureState({v[0] / n, v[1] / n, v[2] / n, v[3] / n});
}

// Real pair rotations driving every <y|y~> to target * <y|y>. Each rotation
// zeroes the excess of one vector, so it finishes in at most n - 1 steps in
// exact arithmetic; the budget only guards against round-off cycling.
void equalize_preconcurrence(std::vector<Vec4> &ys, double target) {
    int n = static_cast<int>(ys.size());
    auto excess = [&](int i) {
        return inner(ys[i], tilde(ys[i])).real() - target * inner(ys[i], ys[i]).real();
    };
    for (int iter = 0; iter < kEqualizeBudget; iter++) {
        int hi = 0;
        int lo = 0;
        double worst = 0;
        std::vector<double> e(n);
        for (int i = 0; i < n; i++) {
            e[i] = excess(i);
            if (e[i] > e[hi]) {
                hi = i;
            }
            if (e[i] < e[lo]) {
                lo = i;
            }
            worst = std::max(worst, std::abs(e[i]) / inner(ys[i], ys[i]).real());
        }
        if (worst <= kEqualizeTol || hi == lo || e[hi] <= 0 || e[lo] >= 0) {
            return;
        }
        double a = e[hi];
        double b = e[lo];
        double m = inner(ys[hi], tilde(ys[lo])).real() - target * inner(ys[hi], ys[lo]).real();
        double half_diff = (a - b) / 2;
        double radius = std::hypot(half_diff, m);
        double delta = std::atan2(m, half_diff);
        double arg = std::clamp(-(a + b) / (2 * radius), -1.0, 1.0);
        double phi = (delta + std::acos(arg)) / 2;
        double c = std::cos(phi);
        double s = std::sin(phi);
        Vec4 yi = combine(c, ys[hi], s, ys[lo]);
        Vec4 yj = combine(-s, ys[hi], c, ys[lo]);
        ys[hi] = yi;
        ys[lo] = yj;
    }
    double worst = 0;
    for (int i = 0; i < n; i++) {
        worst = std::max(worst, std::abs(excess(i)) / inner(ys[i], ys[i]).real());
    }
    if (worst > kEqualizeTol) {
        std::ostringstream ss;
        ss << "preconcurrence equalization did not converge (residual " << worst << ")";
        throw Error(ErrorKind::NumericalFailure, ss.str());
    }
}

// Phases making lambda_1 + e^{i a} lambda_2 + e^{i b} (lambda_3 + lambda_4) = 0.
// Requires lambda_1 <= lambda_2 + lambda_3 + lambda_4 and descending order.
std::array<double, 4> closing_phases(const std::array<double, 4> &lambda) {
    double l1 = lambda[0];
    double l2 = lambda[1];
    double l3 = lambda[2] + lambda[3];
    if (l1 <= 0 || l2 <= 0) {
        return {0, 0, 0, 0};
    }
    double cos_alpha = std::clamp((l3 * l3 - l1 * l1 - l2 * l2) / (2 * l1 * l2), -1.0, 1.0);
    double alpha = std::acos(cos_alpha);
    Complex partial = l1 + l2 * std::polar(1.0, alpha);
    double beta = l3 > 0 ? std::arg(-partial) : 0.0;
    return {0, alpha, beta, beta};
}

}  // namespace

CMat WoottersDecomposition::mixture() const {
    CMat m(4, 4);
    for (const auto &br : branches) {
        m += br.t * br.phi.projector();
    }
    return m;
}

double WoottersDecomposition::average_concurrence() const {
    double acc = 0;
    for (const auto &br : branches) {
        acc += br.t * concurrence_pure(br.phi);
    }
    return acc;
}

double concurrence_pure(const PureState &psi) {
    return std::min(1.0, 2 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]));
}

DensityMatrix spin_flip(const DensityMatrix &rho) {
    static const CMat yy = kron(pauli_y(), pauli_y());
    return DensityMatrix(yy * rho.matrix().conj() * yy);
}

Spectrum4 r_spectrum(const DensityMatrix &rho) {
    CMat root = sqrt_psd(rho.matrix());
    CMat h = root * spin_flip(rho).matrix() * root;
    h = 0.5 * (h + h.adjoint());
    auto eig = eig_hermitian(h);
    Spectrum4 out{};
    for (int k = 0; k < 4; k++) {
        double v = eig.values[k];
        if (v < -PSD_TOL) {
            std::ostringstream ss;
            ss << "R spectrum has negative eigenvalue " << v;
            throw Error(ErrorKind::NumericalFailure, ss.str());
        }
        out.lambdas[k] = std::max(v, 0.0);
    }
    return out;
}

// sqrt(lambda_k) taken directly as the Takagi values of tau = W^dag Y W*
// with rho = W W^dag. Square-rooting eigenvalues of the Hermitian surrogate
// turns 1e-17 noise on a null space into 3e-9 errors; singular values do not.
double concurrence(const DensityMatrix &rho) {
    auto eig = eig_hermitian(rho.matrix());
    std::array<Vec4, 4> ws;
    for (int k = 0; k < 4; k++) {
        double w = std::sqrt(std::max(eig.values[k], 0.0));
        ws[k] = {w * eig.vectors(0, k), w * eig.vectors(1, k), w * eig.vectors(2, k), w * eig.vectors(3, k)};
    }
    CMat tau(4, 4);
    for (int i = 0; i < 4; i++) {
        for (int j = i; j < 4; j++) {
            tau(i, j) = inner(ws[i], tilde(ws[j]));
            tau(j, i) = tau(i, j);
        }
    }
    auto tk = takagi(tau);
    double c = tk.values[0] - tk.values[1] - tk.values[2] - tk.values[3];
    return std::clamp(c, 0.0, 1.0);
}

WoottersDecomposition wootters_decomposition(const DensityMatrix &rho) {
    auto eig = eig_hermitian(rho.matrix());

    // Subnormalized eigenvectors v_k = sqrt(p_k) e_k, rank-deficient part dropped.
    std::vector<Vec4> vs;
    for (int k = 0; k < 4; k++) {
        if (eig.values[k] < RANK_TOL) {
            continue;
        }
        double w = std::sqrt(eig.values[k]);
        vs.push_back({w * eig.vectors(0, k), w * eig.vectors(1, k), w * eig.vectors(2, k), w * eig.vectors(3, k)});
    }
    int rank = static_cast<int>(vs.size());
    if (rank == 0) {
        throw Error(ErrorKind::NumericalFailure, "density matrix has no eigenvalue above rank cutoff");
    }
    if (rank == 1) {
        return {{{1.0, normalize(vs[0], inner(vs[0], vs[0]).real())}}};
    }

    // tau_ij = <v_i|v~_j> is complex symmetric; Takagi gives x = v W with
    // <x_i|x~_j> = lambda_i delta_ij.
    CMat tau(rank, rank);
    for (int i = 0; i < rank; i++) {
        for (int j = 0; j < rank; j++) {
            tau(i, j) = inner(vs[i], tilde(vs[j]));
        }
    }
    auto tk = takagi(tau);
    std::vector<Vec4> xs(rank, Vec4{});
    for (int j = 0; j < rank; j++) {
        for (int i = 0; i < rank; i++) {
            for (int k = 0; k < 4; k++) {
                xs[j][k] += tk.unitary(i, j) * vs[i][k];
            }
        }
    }
    std::array<double, 4> lambda{};
    for (int j = 0; j < rank; j++) {
        lambda[j] = tk.values[j];
    }
    double cx = lambda[0] - lambda[1] - lambda[2] - lambda[3];

    std::vector<Vec4> ys;
    if (cx > 0) {
        // z_1 = x_1, z_k = i x_k: <z_k|z~_k> = (l1, -l2, -l3, -l4), trace cx.
        ys = xs;
        for (int j = 1; j < rank; j++) {
            for (auto &a : ys[j]) {
                a *= Complex(0, 1);
            }
        }
        equalize_preconcurrence(ys, cx);
    } else {
        // z_k = e^{i theta_k / 2} x_k with sum_k e^{-i theta_k} lambda_k = 0,
        // then the +-1/2 Hadamard mixing gives four zero-preconcurrence states.
        xs.resize(4, Vec4{});
        auto phases = closing_phases(lambda);
        std::vector<Vec4> zs(4);
        for (int k = 0; k < 4; k++) {
            Complex ph = std::polar(1.0, phases[k] / 2);
            for (int r = 0; r < 4; r++) {
                zs[k][r] = ph * xs[k][r];
            }
        }
        static constexpr int kSigns[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
        for (const auto &row : kSigns) {
            Vec4 y{};
            for (int k = 0; k < 4; k++) {
                for (int r = 0; r < 4; r++) {
                    y[r] += 0.5 * row[k] * zs[k][r];
                }
            }
            ys.push_back(y);
        }
    }

    WoottersDecomposition out;
    for (const auto &y : ys) {
        double t = inner(y, y).real();
        if (t < 1e-15) {
            continue;
        }
        out.branches.push_back({t, normalize(y, t)});
    }
    return out;
}

}  // namespace epr2
