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

#ifndef EPR2_CORRELATIONS_H
#define EPR2_CORRELATIONS_H

#include <array>
#include <variant>
#include <vector>

#include "epr2/states.h"

namespace epr2 {

/// Outcome-weighted measurement direction A = alpha * a on the unit sphere.
class Setting {
   public:
    /// Renormalizes inputs within UNIT_INPUT_TOL of unit length; throws NotUnit otherwise.
    Setting(double x, double y, double z);
    explicit Setting(const std::array<double, 3> &v) : Setting(v[0], v[1], v[2]) {
    }

    /// Point on the sphere from polar angle and azimuth.
    static Setting spherical(double polar, double azimuth);

    double x() const {
        return v_[0];
    }
    double y() const {
        return v_[1];
    }
    double z() const {
        return v_[2];
    }
    double operator[](int k) const {
        return v_[k];
    }
    const std::array<double, 3> &vec() const {
        return v_;
    }

    Setting operator-() const;
    /// B' = (B_x, -B_y, B_z).
    Setting primed() const;
    double dot(const Setting &other) const;

   private:
    std::array<double, 3> v_;
};

/// P(alpha, beta) for the four outcome pairs; index 0..3 = (+,+), (+,-), (-,+), (-,-).
struct JointTable {
    std::array<double, 4> p{};

    double operator()(int alpha, int beta) const {
        return p[(alpha > 0 ? 0 : 2) + (beta > 0 ? 0 : 1)];
    }
};

/// (1 + sigma . A) / 2.
CMat projector(const Setting &s);

/// Tr((Pi_A (x) Pi_B) rho).
double p_q(const DensityMatrix &rho, const Setting &A, const Setting &B);

/// Closed form for cos(theta)|00> + sin(theta)|11>.
double p_q_pure(double theta, const Setting &A, const Setting &B);

struct WernerFamily {
    double x;
};
struct GenWernerFamily {
    double x;
    double theta;
};
/// Bell-diagonal mixture with x = y = 0: gamma |psi+><psi+| + a |01><01| + b |10><10|.
struct BD0Family {
    double a;
    double b;
    double gamma;
};
using FamilyParams = std::variant<WernerFamily, GenWernerFamily, BD0Family>;

/// Closed-form quantum distribution for a named family. Throws InvalidParams.
double p_q_family(const FamilyParams &family, const Setting &A, const Setting &B);

/// The four sign combinations of p_q at directions a, b.
JointTable joint_table(const DensityMatrix &rho, const Setting &a, const Setting &b);

/// Real 3x3 rotation R with R_mn = Tr(sigma_m u^dagger sigma_n u) / 2.
using Rotation3 = std::array<std::array<double, 3>, 3>;
Rotation3 rotation_of(const CMat &u);

/// A' with sigma . A' = u^dagger (sigma . A) u. Throws NotUnitary.
Setting rotate_setting(const CMat &u, const Setting &s);

/// Test grid of setting pairs: n_polar polar angles (poles included) for each
/// side and n_azimuth azimuth pairs, n_polar * n_polar * n_azimuth in total.
std::vector<std::pair<Setting, Setting>> setting_grid(int n_polar, int n_azimuth);

/// n points of the Fibonacci lattice on the unit sphere.
std::vector<Setting> fibonacci_sphere(int n);

}  // namespace epr2

#endif
