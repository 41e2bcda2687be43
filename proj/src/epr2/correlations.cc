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

#include "epr2/correlations.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "epr2/error.h"
#include "epr2/tolerances.h"

namespace epr2 {

namespace {

void require_family_theta(double theta) {
    if (!(theta >= 0 && theta <= std::numbers::pi / 4 + 1e-15)) {
        throw Error(ErrorKind::InvalidParams, "theta outside [0, pi/4]");
    }
}

void require_family_x(double x) {
    if (!(x >= 0 && x <= 1)) {
        throw Error(ErrorKind::InvalidParams, "x outside [0, 1]");
    }
}

}  // namespace

Setting::Setting(double x, double y, double z) : v_{x, y, z} {
    double norm = std::sqrt(x * x + y * y + z * z);
    if (!std::isfinite(norm) || std::abs(norm - 1) > UNIT_INPUT_TOL) {
        std::ostringstream ss;
        ss << "setting (" << x << ", " << y << ", " << z << ") has norm " << norm;
        throw Error(ErrorKind::NotUnit, ss.str());
    }
    for (auto &c : v_) {
        c /= norm;
    }
}

Setting Setting::spherical(double polar, double azimuth) {
    double st = std::sin(polar);
    return Setting(st * std::cos(azimuth), st * std::sin(azimuth), std::cos(polar));
}

Setting Setting::operator-() const {
    return Setting(-v_[0], -v_[1], -v_[2]);
}

Setting Setting::primed() const {
    return Setting(v_[0], -v_[1], v_[2]);
}

double Setting::dot(const Setting &other) const {
    return v_[0] * other.v_[0] + v_[1] * other.v_[1] + v_[2] * other.v_[2];
}

CMat projector(const Setting &s) {
    return CMat{{0.5 * (1 + s.z()), Complex(0.5 * s.x(), -0.5 * s.y())},
                {Complex(0.5 * s.x(), 0.5 * s.y()), 0.5 * (1 - s.z())}};
}

double p_q(const DensityMatrix &rho, const Setting &A, const Setting &B) {
    CMat pa = projector(A);
    CMat pb = projector(B);
    const CMat &m = rho.matrix();
    // Tr(M rho) with M_(ik),(jl) = Pa_ij Pb_kl.
    Complex acc = 0;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            for (int k = 0; k < 2; k++) {
                for (int l = 0; l < 2; l++) {
                    acc += pa(i, j) * pb(k, l) * m(2 * j + l, 2 * i + k);
                }
            }
        }
    }
    return acc.real();
}

double p_q_pure(double theta, const Setting &A, const Setting &B) {
    require_family_theta(theta);
    double c = std::cos(2 * theta);
    double s = std::sin(2 * theta);
    return 0.25 * (1 + c * (A.z() + B.z()) + A.z() * B.z() + s * (A.x() * B.x() - A.y() * B.y()));
}

double p_q_family(const FamilyParams &family, const Setting &A, const Setting &B) {
    struct Visitor {
        const Setting &A;
        const Setting &B;
        double operator()(const WernerFamily &w) const {
            require_family_x(w.x);
            return 0.25 * (1 + w.x * A.dot(B.primed()));
        }
        double operator()(const GenWernerFamily &g) const {
            require_family_x(g.x);
            require_family_theta(g.theta);
            double c = std::cos(2 * g.theta);
            double s = std::sin(2 * g.theta);
            return 0.25 * (1 + g.x * (c * A.z() + c * B.z() + A.z() * B.z() + s * (A.x() * B.x() - A.y() * B.y())));
        }
        double operator()(const BD0Family &f) const {
            if (!(f.a >= 0 && f.b >= 0 && f.gamma >= 0) || std::abs(f.a + f.b + f.gamma - 1) > 1e-12) {
                throw Error(ErrorKind::InvalidParams, "BD0 parameters must be nonnegative and sum to 1");
            }
            return 0.25 * (1 + (f.a - f.b) * (A.z() - B.z()) + (f.gamma - f.a - f.b) * A.z() * B.z() +
                           f.gamma * (A.x() * B.x() - A.y() * B.y()));
        }
    };
    return std::visit(Visitor{A, B}, family);
}

JointTable joint_table(const DensityMatrix &rho, const Setting &a, const Setting &b) {
    return JointTable{{p_q(rho, a, b), p_q(rho, a, -b), p_q(rho, -a, b), p_q(rho, -a, -b)}};
}

Rotation3 rotation_of(const CMat &u) {
    if (u.rows() != 2 || !u.is_unitary(HERM_TOL)) {
        throw Error(ErrorKind::NotUnitary, "rotation requires a 2x2 unitary");
    }
    const CMat *paulis[3] = {&pauli_x(), &pauli_y(), &pauli_z()};
    Rotation3 r{};
    for (int n = 0; n < 3; n++) {
        CMat conj_n = u.adjoint() * (*paulis[n]) * u;
        for (int m = 0; m < 3; m++) {
            r[m][n] = 0.5 * ((*paulis[m]) * conj_n).trace().real();
        }
    }
    return r;
}

Setting rotate_setting(const CMat &u, const Setting &s) {
    if (u.rows() != 2 || !u.is_unitary(HERM_TOL)) {
        throw Error(ErrorKind::NotUnitary, "rotate_setting requires a 2x2 unitary");
    }
    CMat sigma_a = s.x() * pauli_x() + s.y() * pauli_y() + s.z() * pauli_z();
    CMat h = u.adjoint() * sigma_a * u;
    double out[3];
    const CMat *paulis[3] = {&pauli_x(), &pauli_y(), &pauli_z()};
    for (int m = 0; m < 3; m++) {
        out[m] = 0.5 * ((*paulis[m]) * h).trace().real();
    }
    return Setting(out[0], out[1], out[2]);
}

std::vector<std::pair<Setting, Setting>> setting_grid(int n_polar, int n_azimuth) {
    if (n_polar < 2 || n_azimuth < 1) {
        throw Error(ErrorKind::InvalidParams, "setting grid needs n_polar >= 2 and n_azimuth >= 1");
    }
    std::vector<std::pair<Setting, Setting>> grid;
    grid.reserve(static_cast<size_t>(n_polar) * n_polar * n_azimuth);
    for (int i = 0; i < n_polar; i++) {
        double pa = std::numbers::pi * i / (n_polar - 1);
        for (int j = 0; j < n_polar; j++) {
            double pb = std::numbers::pi * j / (n_polar - 1);
            for (int k = 0; k < n_azimuth; k++) {
                double az_a = 2 * std::numbers::pi * k / n_azimuth;
                double az_b = 2 * std::numbers::pi * ((3 * k) % n_azimuth) / n_azimuth + std::numbers::pi / n_azimuth;
                grid.emplace_back(Setting::spherical(pa, az_a), Setting::spherical(pb, az_b));
            }
        }
    }
    return grid;
}

std::vector<Setting> fibonacci_sphere(int n) {
    std::vector<Setting> pts;
    pts.reserve(n);
    const double golden_angle = std::numbers::pi * (3 - std::sqrt(5.0));
    for (int i = 0; i < n; i++) {
        double z = 1 - (2.0 * i + 1) / n;
        double r = std::sqrt(std::max(0.0, 1 - z * z));
        double phi = golden_angle * i;
        pts.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
    }
    return pts;
}

}  // namespace epr2
