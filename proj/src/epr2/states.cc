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

#include "epr2/states.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "epr2/error.h"
#include "epr2/tolerances.h"

namespace epr2 {

namespace {

void require_theta(double theta) {
    if (!(theta >= 0 && theta <= std::numbers::pi / 4 + 1e-15)) {
        std::ostringstream ss;
        ss << "theta=" << theta << " outside [0, pi/4]";
        throw Error(ErrorKind::OutOfRange, ss.str());
    }
}

void require_unit_interval(double x, const char *name) {
    if (!(x >= 0 && x <= 1)) {
        std::ostringstream ss;
        ss << name << "=" << x << " outside [0, 1]";
        throw Error(ErrorKind::OutOfRange, ss.str());
    }
}

DensityMatrix noisy_mixture(double x, const PureState &psi) {
    CMat m = x * psi.projector() + ((1 - x) / 4) * CMat::identity(4);
    return DensityMatrix(m);
}

using Vec2 = std::array<Complex, 2>;

Vec2 normalized(Vec2 v) {
    double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    return {v[0] / n, v[1] / n};
}

// Unit vector orthogonal to a unit vector in C^2.
Vec2 complement(const Vec2 &v) {
    return {-std::conj(v[1]), std::conj(v[0])};
}

// Leading eigenvector of the 2x2 Hermitian matrix [[a, b], [conj(b), d]].
Vec2 leading_eigenvector(double a, Complex b, double d) {
    double half_gap = (a - d) / 2;
    double radius = std::sqrt(half_gap * half_gap + std::norm(b));
    if (radius == 0 || std::abs(b) <= 1e-15 * radius) {
        return a >= d ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};
    }
    double top = (a + d) / 2 + radius;
    // Two algebraically equivalent candidates; keep the larger-norm one.
    Vec2 first{b, top - a};
    Vec2 second{top - d, std::conj(b)};
    double n1 = std::norm(first[0]) + std::norm(first[1]);
    double n2 = std::norm(second[0]) + std::norm(second[1]);
    return normalized(n1 >= n2 ? first : second);
}

}  // namespace

PureState::PureState(const std::array<Complex, 4> &amplitudes) : c_(amplitudes) {
    double norm = 0;
    for (const auto &z : c_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorKind::InvalidState, "non-finite amplitude");
        }
        norm += std::norm(z);
    }
    if (std::abs(norm - 1) > TRACE_TOL) {
        std::ostringstream ss;
        ss << "pure state norm^2 = " << norm << ", expected 1";
        throw Error(ErrorKind::InvalidState, ss.str());
    }
}

CMat PureState::projector() const {
    CMat m(4, 4);
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            m(r, c) = c_[r] * std::conj(c_[c]);
        }
    }
    return m;
}

DensityMatrix::DensityMatrix(const CMat &m) : m_(m) {
    if (m.rows() != 4 || m.cols() != 4) {
        throw Error(ErrorKind::InvalidState, "density matrix must be 4x4");
    }
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag())) {
                throw Error(ErrorKind::InvalidState, "non-finite matrix entry");
            }
        }
    }
    double herm = m.max_abs_diff(m.adjoint());
    if (herm > HERM_TOL) {
        std::ostringstream ss;
        ss << "density matrix not Hermitian (deviation " << herm << ")";
        throw Error(ErrorKind::InvalidState, ss.str());
    }
    double tr = m.trace().real();
    if (std::abs(tr - 1) > TRACE_TOL) {
        std::ostringstream ss;
        ss << "density matrix trace " << tr << ", expected 1";
        throw Error(ErrorKind::InvalidState, ss.str());
    }
    double smallest = eig_hermitian(m).values.back();
    if (smallest < -PSD_TOL) {
        std::ostringstream ss;
        ss << "density matrix has negative eigenvalue " << smallest;
        throw Error(ErrorKind::InvalidState, ss.str());
    }
    m_ = 0.5 * (m + m.adjoint());
}

DensityMatrix DensityMatrix::from_pure(const PureState &psi) {
    return DensityMatrix(psi.projector());
}

double SchmidtForm::c() const {
    return std::cos(2 * theta);
}

double SchmidtForm::s() const {
    return std::sin(2 * theta);
}

void BDParams::validate() const {
    for (double v : {x, y, a, b, gamma}) {
        if (!(v >= 0) || !std::isfinite(v)) {
            throw Error(ErrorKind::InvalidParams, "Bell-diagonal parameters must be nonnegative");
        }
    }
    double sum = x + y + a + b + gamma;
    if (std::abs(sum - 1) > 1e-12) {
        std::ostringstream ss;
        ss << "Bell-diagonal parameters sum to " << sum << ", expected 1";
        throw Error(ErrorKind::InvalidParams, ss.str());
    }
}

PureState pure_theta(double theta) {
    require_theta(theta);
    return PureState({std::cos(theta), 0.0, 0.0, std::sin(theta)});
}

PureState bell_phi_plus() {
    double h = 1 / std::numbers::sqrt2;
    return PureState({h, 0.0, 0.0, h});
}

DensityMatrix werner(double x) {
    require_unit_interval(x, "x");
    return noisy_mixture(x, bell_phi_plus());
}

DensityMatrix generalized_werner(double x, double theta) {
    require_unit_interval(x, "x");
    require_theta(theta);
    return noisy_mixture(x, pure_theta(theta));
}

DensityMatrix bell_diag(const BDParams &p) {
    p.validate();
    CMat m(4, 4);
    m(0, 0) = p.x + p.gamma / 2;
    m(0, 3) = p.gamma / 2;
    m(1, 1) = p.a;
    m(2, 2) = p.b;
    m(3, 0) = p.gamma / 2;
    m(3, 3) = p.y + p.gamma / 2;
    return DensityMatrix(m);
}

SchmidtForm schmidt_decompose(const PureState &psi) {
    // M[i][j] = <ij|psi>; psi = sum_k lambda_k (uA e_k) (x) (uB e_k) means
    // M = uA diag(lambda) uB^T, i.e. uA = W and uB = conj(V) for M = W S V^dagger.
    CMat m{{psi[0], psi[1]}, {psi[2], psi[3]}};
    CMat mmh = m * m.adjoint();

    Vec2 w1 = leading_eigenvector(mmh(0, 0).real(), mmh(0, 1), mmh(1, 1).real());
    Vec2 w2 = complement(w1);

    auto apply_adjoint = [&](const Vec2 &w) {
        return Vec2{std::conj(m(0, 0)) * w[0] + std::conj(m(1, 0)) * w[1],
                    std::conj(m(0, 1)) * w[0] + std::conj(m(1, 1)) * w[1]};
    };

    Vec2 mv1 = apply_adjoint(w1);
    double sigma1 = std::sqrt(std::norm(mv1[0]) + std::norm(mv1[1]));
    Vec2 v1{mv1[0] / sigma1, mv1[1] / sigma1};
    Vec2 v2 = complement(v1);

    // Fix the phase of w2 so that M^dagger w2 = sigma2 v2 with sigma2 >= 0.
    Vec2 mv2 = apply_adjoint(w2);
    Complex z = std::conj(v2[0]) * mv2[0] + std::conj(v2[1]) * mv2[1];
    double sigma2 = std::abs(z);
    if (sigma2 > 0) {
        Complex ph = std::conj(z) / sigma2;
        w2 = {w2[0] * ph, w2[1] * ph};
    }

    SchmidtForm form{std::atan2(sigma2, sigma1), CMat(2, 2), CMat(2, 2)};
    form.theta = std::min(form.theta, std::numbers::pi / 4);
    for (int r = 0; r < 2; r++) {
        form.uA(r, 0) = w1[r];
        form.uA(r, 1) = w2[r];
        form.uB(r, 0) = std::conj(v1[r]);
        form.uB(r, 1) = std::conj(v2[r]);
    }
    return form;
}

}  // namespace epr2
