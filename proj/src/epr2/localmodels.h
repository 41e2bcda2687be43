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

#ifndef EPR2_LOCALMODELS_H
#define EPR2_LOCALMODELS_H

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "epr2/correlations.h"
#include "epr2/states.h"

namespace epr2 {

enum class Axis { X = 0, Y = 1, Z = 2 };

class ResponseFn;

namespace response {

/// Constant 1/2.
struct Uniform {};

/// F^sign(v_axis) = (1 + sign * v_axis) / 2.
struct HalfLinear {
    Axis axis;
    int sign;
};

/// (1 + z_sign sin(vartheta) v_z + sign cos(vartheta) v_axis) / 2; z_sign = +1
/// is the A-side response, z_sign = -1 the B-side one.
struct Tilted {
    Axis axis;
    int sign;
    double vartheta;
    int z_sign;
};

/// (1 + f(v_z)) / 2 with f(x) = sgn(x) min(1, c |x| / (1 - s)), c = cos 2theta,
/// s = sin 2theta. At theta = pi/4 the slope is 0/0 and f is taken as 0.
struct ScaraniF {
    double theta;
};

/// Inner response evaluated at the setting rotated by a local unitary.
struct Rotated {
    CMat u;
    Rotation3 rotation;
    std::shared_ptr<const ResponseFn> inner;
};

}  // namespace response

/// Local response function p(A), with p(A) + p(-A) = 1 and values in [0, 1].
///
/// Closed set of forms so that models can be serialized and sampled.
class ResponseFn {
   public:
    using Form = std::variant<response::Uniform, response::HalfLinear, response::Tilted, response::ScaraniF,
                              response::Rotated>;

    static ResponseFn uniform();
    static ResponseFn half_linear(Axis axis, int sign);
    static ResponseFn tilted(Axis axis, int sign, double vartheta, int z_sign);
    static ResponseFn scarani(double theta);
    /// Throws NotUnitary.
    static ResponseFn rotated(const CMat &u, ResponseFn inner);

    double operator()(const Setting &s) const {
        return eval(s.vec());
    }
    double eval(const std::array<double, 3> &v) const;

    /// Same response with v_z replaced by -v_z. Defined for every form except
    /// Rotated and ScaraniF, which never need it.
    ResponseFn flip_z() const;

    const Form &form() const {
        return form_;
    }

   private:
    explicit ResponseFn(Form form) : form_(std::move(form)) {
    }
    Form form_;
};

struct LHVBranch {
    double mu;
    ResponseFn pA;
    ResponseFn qB;
};

/// P_L(A, B) = sum_i mu_i p_i(A) q_i(B).
class LHVModel {
   public:
    /// Throws InvalidParams unless each mu is in [0, 1] and they sum to 1 within 1e-12.
    explicit LHVModel(std::vector<LHVBranch> branches);

    const std::vector<LHVBranch> &branches() const {
        return branches_;
    }

   private:
    std::vector<LHVBranch> branches_;
};

/// P_Q = p_local P_L + (1 - p_local) P_NL with P_L given by `model`.
struct EPR2Split {
    double p_local;
    LHVModel model;
    DensityMatrix source;
};

double eval_model(const LHVModel &m, const Setting &A, const Setting &B);

/// [P_Q - p_local P_L] / (1 - p_local). Throws LocalWeightOne if p_local >= 1 - 1e-12.
double remainder(const EPR2Split &split, const Setting &A, const Setting &B);

/// Local weight 1 - sin 2theta with the product of Scarani responses.
EPR2Split model_pure(double theta);

/// Werner state: exact six-branch model for x <= 1/3, weight 1 - (3x - 1)/2 above.
EPR2Split model_werner(double x);

/// Generalized Werner state. Above the separability threshold the model mixes
/// the pure-state model with the threshold model; the nonnegativity of the
/// remainder there is only supported numerically.
EPR2Split model_gen_werner(double x, double theta);

/// Bell state mixed with |01><01| and |10><10| (x = y = 0 slice).
EPR2Split model_bd0(double a, double b, double gamma);

/// General Bell-state-plus-diagonal mixture via the x = y = 0 core.
EPR2Split model_bd(const BDParams &p);

/// Construction for an arbitrary state from its optimal decomposition: each
/// branch contributes the pure-state model at locally rotated settings.
EPR2Split model_general(const DensityMatrix &rho);

struct SplitCheck {
    /// Minimum remainder; empty when p_local is 1.
    std::optional<double> min_remainder;
    /// max |P_L - P_Q|, the meaningful check when p_local is 1.
    double max_local_deviation = 0;
    /// Pair index of the minimum remainder (or of the largest deviation).
    size_t worst_index = 0;
};

/// Evaluates the split over a list of setting pairs.
SplitCheck check_split(const EPR2Split &split, const std::vector<std::pair<Setting, Setting>> &pairs);

/// Pairs of a Fibonacci lattice with itself, n * n pairs.
std::vector<std::pair<Setting, Setting>> fibonacci_pairs(int n);

}  // namespace epr2

#endif
