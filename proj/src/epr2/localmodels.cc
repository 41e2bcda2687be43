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

#include "epr2/localmodels.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "epr2/entanglement.h"
#include "epr2/error.h"
#include "epr2/tolerances.h"

namespace epr2 {

namespace {

constexpr double kWeightTol = 1e-12;
constexpr double kSplitTol = 1e-9;

void require_unit_interval(double x, const char *name) {
    if (!(x >= 0 && x <= 1)) {
        std::ostringstream ss;
        ss << name << "=" << x << " outside [0, 1]";
        throw Error(ErrorKind::OutOfRange, ss.str());
    }
}

void require_theta(double theta) {
    if (!(theta >= 0 && theta <= std::numbers::pi / 4 + 1e-15)) {
        std::ostringstream ss;
        ss << "theta=" << theta << " outside [0, pi/4]";
        throw Error(ErrorKind::OutOfRange, ss.str());
    }
}

// Checks a derived coefficient lies in [0, 1] up to round-off and clamps it.
double checked_unit(double v, const char *name) {
    if (!(v >= -kWeightTol && v <= 1 + kWeightTol)) {
        std::ostringstream ss;
        ss << name << "=" << v << " outside [0, 1]";
        throw Error(ErrorKind::NumericalFailure, ss.str());
    }
    return std::clamp(v, 0.0, 1.0);
}

double sgn(double x) {
    return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0);
}

void push(std::vector<LHVBranch> &out, double mu, ResponseFn pA, ResponseFn qB) {
    if (mu > 0) {
        out.push_back({mu, std::move(pA), std::move(qB)});
    }
}

// Six-branch model reproducing the Werner distribution at x = 1/3, scaled by w.
void werner_third(std::vector<LHVBranch> &out, double w) {
    using enum Axis;
    double mu = w / 6;
    push(out, mu, ResponseFn::half_linear(Z, +1), ResponseFn::half_linear(Z, +1));
    push(out, mu, ResponseFn::half_linear(Z, -1), ResponseFn::half_linear(Z, -1));
    push(out, mu, ResponseFn::half_linear(X, +1), ResponseFn::half_linear(X, +1));
    push(out, mu, ResponseFn::half_linear(X, -1), ResponseFn::half_linear(X, -1));
    push(out, mu, ResponseFn::half_linear(Y, +1), ResponseFn::half_linear(Y, -1));
    push(out, mu, ResponseFn::half_linear(Y, -1), ResponseFn::half_linear(Y, +1));
}

// Generalized Werner model exact at x_c = 1/(1 + 2s), scaled by w.
void gen_werner_critical(std::vector<LHVBranch> &out, double theta, double w) {
    using enum Axis;
    double c = std::cos(2 * theta);
    double s = std::sin(2 * theta);
    double half_xc = w / (2 * (1 + 2 * s));
    push(out, half_xc * (1 + c), ResponseFn::half_linear(Z, +1), ResponseFn::half_linear(Z, +1));
    push(out, half_xc * (1 - c), ResponseFn::half_linear(Z, -1), ResponseFn::half_linear(Z, -1));
    push(out, half_xc * s, ResponseFn::half_linear(X, +1), ResponseFn::half_linear(X, +1));
    push(out, half_xc * s, ResponseFn::half_linear(X, -1), ResponseFn::half_linear(X, -1));
    push(out, half_xc * s, ResponseFn::half_linear(Y, +1), ResponseFn::half_linear(Y, -1));
    push(out, half_xc * s, ResponseFn::half_linear(Y, -1), ResponseFn::half_linear(Y, +1));
}

// Four tilted branches; exact for the x = y = 0 Bell-diagonal slice at the
// separability boundary when vartheta = arcsin(sqrt(a) - sqrt(b)).
void bd0_tilted(std::vector<LHVBranch> &out, double vartheta, double w) {
    using enum Axis;
    double mu = w / 4;
    push(out, mu, ResponseFn::tilted(X, +1, vartheta, +1), ResponseFn::tilted(X, +1, vartheta, -1));
    push(out, mu, ResponseFn::tilted(X, -1, vartheta, +1), ResponseFn::tilted(X, -1, vartheta, -1));
    push(out, mu, ResponseFn::tilted(Y, +1, vartheta, +1), ResponseFn::tilted(Y, -1, vartheta, -1));
    push(out, mu, ResponseFn::tilted(Y, -1, vartheta, +1), ResponseFn::tilted(Y, +1, vartheta, -1));
}

// lambda_+ F+(A_z) F-(B_z) + lambda_- F-(A_z) F+(B_z), scaled by w.
void bd0_anticorrelated(std::vector<LHVBranch> &out, double delta, double w) {
    using enum Axis;
    push(out, w * (1 + delta) / 2, ResponseFn::half_linear(Z, +1), ResponseFn::half_linear(Z, -1));
    push(out, w * (1 - delta) / 2, ResponseFn::half_linear(Z, -1), ResponseFn::half_linear(Z, +1));
}

struct Bd0Parts {
    double p_local;
    std::vector<LHVBranch> branches;
};

// Requires a >= b.
Bd0Parts bd0_parts(double a, double b, double gamma) {
    double sa = std::sqrt(a);
    double sb = std::sqrt(b);
    double threshold = 2 * sa * sb;
    Bd0Parts parts{1.0, {}};
    if (std::abs(gamma - threshold) <= 1e-12) {
        bd0_tilted(parts.branches, std::asin(std::min(1.0, sa - sb)), 1.0);
    } else if (gamma < threshold) {
        double g = checked_unit(2 * gamma / (gamma + threshold), "g");
        double delta = checked_unit((sa + sb - g) * (sa - sb) / (1 - g), "Delta");
        bd0_tilted(parts.branches, std::asin(std::min(1.0, sa - sb)), g);
        bd0_anticorrelated(parts.branches, delta, 1 - g);
    } else {
        // a = b = 0 (pure Bell state) leaves vartheta as 0/0; P_L carries zero
        // weight there and vartheta = 0 is used.
        double vartheta = sa + sb > 0 ? std::asin(std::min(1.0, (sa - sb) / (sa + sb))) : 0.0;
        parts.p_local = 1 - (gamma - threshold);
        bd0_tilted(parts.branches, vartheta, 1.0);
    }
    return parts;
}

void verify_or_throw(const EPR2Split &split, const char *what) {
    auto check = check_split(split, fibonacci_pairs(20));
    bool ok = check.min_remainder ? *check.min_remainder >= -kSplitTol : check.max_local_deviation <= kSplitTol;
    if (!ok) {
        std::ostringstream ss;
        ss << what << ": split verification failed (min remainder "
           << (check.min_remainder ? *check.min_remainder : 0.0) << ", local deviation "
           << check.max_local_deviation << ")";
        throw Error(ErrorKind::NumericalFailure, ss.str());
    }
}

}  // namespace

ResponseFn ResponseFn::uniform() {
    return ResponseFn(response::Uniform{});
}

ResponseFn ResponseFn::half_linear(Axis axis, int sign) {
    return ResponseFn(response::HalfLinear{axis, sign >= 0 ? +1 : -1});
}

ResponseFn ResponseFn::tilted(Axis axis, int sign, double vartheta, int z_sign) {
    if (axis == Axis::Z) {
        throw Error(ErrorKind::InvalidParams, "tilted response needs an x or y axis");
    }
    return ResponseFn(response::Tilted{axis, sign >= 0 ? +1 : -1, vartheta, z_sign >= 0 ? +1 : -1});
}

ResponseFn ResponseFn::scarani(double theta) {
    require_theta(theta);
    return ResponseFn(response::ScaraniF{theta});
}

ResponseFn ResponseFn::rotated(const CMat &u, ResponseFn inner) {
    return ResponseFn(response::Rotated{u, rotation_of(u), std::make_shared<const ResponseFn>(std::move(inner))});
}

double ResponseFn::eval(const std::array<double, 3> &v) const {
    struct Visitor {
        const std::array<double, 3> &v;
        double operator()(const response::Uniform &) const {
            return 0.5;
        }
        double operator()(const response::HalfLinear &h) const {
            return 0.5 * (1 + h.sign * v[static_cast<int>(h.axis)]);
        }
        double operator()(const response::Tilted &t) const {
            return 0.5 * (1 + t.z_sign * std::sin(t.vartheta) * v[2] +
                          t.sign * std::cos(t.vartheta) * v[static_cast<int>(t.axis)]);
        }
        double operator()(const response::ScaraniF &f) const {
            double c = std::cos(2 * f.theta);
            double s = std::sin(2 * f.theta);
            if (1 - s <= 0) {
                return 0.5;
            }
            double slope = c / (1 - s);
            return 0.5 * (1 + sgn(v[2]) * std::min(1.0, slope * std::abs(v[2])));
        }
        double operator()(const response::Rotated &r) const {
            std::array<double, 3> w{};
            for (int m = 0; m < 3; m++) {
                w[m] = r.rotation[m][0] * v[0] + r.rotation[m][1] * v[1] + r.rotation[m][2] * v[2];
            }
            return r.inner->eval(w);
        }
    };
    return std::visit(Visitor{v}, form_);
}

ResponseFn ResponseFn::flip_z() const {
    if (auto h = std::get_if<response::HalfLinear>(&form_)) {
        return h->axis == Axis::Z ? half_linear(Axis::Z, -h->sign) : *this;
    }
    if (auto t = std::get_if<response::Tilted>(&form_)) {
        return tilted(t->axis, t->sign, t->vartheta, -t->z_sign);
    }
    if (std::holds_alternative<response::Uniform>(form_)) {
        return *this;
    }
    throw Error(ErrorKind::InvalidParams, "flip_z is not defined for this response form");
}

LHVModel::LHVModel(std::vector<LHVBranch> branches) : branches_(std::move(branches)) {
    if (branches_.empty()) {
        throw Error(ErrorKind::InvalidParams, "LHV model needs at least one branch");
    }
    double total = 0;
    for (const auto &br : branches_) {
        if (!(br.mu >= 0 && br.mu <= 1)) {
            throw Error(ErrorKind::InvalidParams, "branch weight outside [0, 1]");
        }
        total += br.mu;
    }
    if (std::abs(total - 1) > kWeightTol) {
        std::ostringstream ss;
        ss << "branch weights sum to " << total;
        throw Error(ErrorKind::InvalidParams, ss.str());
    }
}

double eval_model(const LHVModel &m, const Setting &A, const Setting &B) {
    double acc = 0;
    for (const auto &br : m.branches()) {
        acc += br.mu * br.pA(A) * br.qB(B);
    }
    return acc;
}

double remainder(const EPR2Split &split, const Setting &A, const Setting &B) {
    if (split.p_local >= 1 - 1e-12) {
        throw Error(ErrorKind::LocalWeightOne, "remainder undefined when the local weight is 1");
    }
    return (p_q(split.source, A, B) - split.p_local * eval_model(split.model, A, B)) / (1 - split.p_local);
}

EPR2Split model_pure(double theta) {
    require_theta(theta);
    std::vector<LHVBranch> branches;
    push(branches, 1.0, ResponseFn::scarani(theta), ResponseFn::scarani(theta));
    EPR2Split split{1 - std::sin(2 * theta), LHVModel(std::move(branches)),
                    DensityMatrix::from_pure(pure_theta(theta))};
    verify_or_throw(split, "model_pure");
    return split;
}

EPR2Split model_werner(double x) {
    require_unit_interval(x, "x");
    std::vector<LHVBranch> branches;
    double p_local = 1;
    if (x < 1.0 / 3) {
        werner_third(branches, 3 * x);
        push(branches, 1 - 3 * x, ResponseFn::uniform(), ResponseFn::uniform());
    } else {
        werner_third(branches, 1.0);
        p_local = 1 - std::max(0.0, (3 * x - 1) / 2);
    }
    return {p_local, LHVModel(std::move(branches)), werner(x)};
}

EPR2Split model_gen_werner(double x, double theta) {
    require_unit_interval(x, "x");
    require_theta(theta);
    double s = std::sin(2 * theta);
    double scaled = (1 + 2 * s) * x;
    std::vector<LHVBranch> branches;
    if (scaled <= 1) {
        gen_werner_critical(branches, theta, scaled);
        push(branches, 1 - scaled, ResponseFn::uniform(), ResponseFn::uniform());
        return {1.0, LHVModel(std::move(branches)), generalized_werner(x, theta)};
    }
    double denominator = s * (3 - scaled);
    if (denominator < 1e-12) {
        // Only x = 1, s = 1: the state is the Bell state itself.
        return model_pure(theta);
    }
    double k = checked_unit((1 - s) * (scaled - 1) / denominator, "k");
    if (k >= 1 - kWeightTol) {
        k = 1;  // x = 1 in exact arithmetic; drop the round-off tail
    }
    push(branches, k, ResponseFn::scarani(theta), ResponseFn::scarani(theta));
    gen_werner_critical(branches, theta, 1 - k);
    return {1 - (scaled - 1) / 2, LHVModel(std::move(branches)), generalized_werner(x, theta)};
}

EPR2Split model_bd0(double a, double b, double gamma) {
    BDParams params{0, 0, a, b, gamma};
    params.validate();
    Bd0Parts parts = a >= b ? bd0_parts(a, b, gamma) : bd0_parts(b, a, gamma);
    if (a < b) {
        // Swapping a and b conjugates the state by the bit flip on both sides;
        // on the distribution that is A_z -> -A_z, B_z -> -B_z.
        for (auto &br : parts.branches) {
            br.pA = br.pA.flip_z();
            br.qB = br.qB.flip_z();
        }
    }
    return {parts.p_local, LHVModel(std::move(parts.branches)), bell_diag(params)};
}

EPR2Split model_bd(const BDParams &p) {
    p.validate();
    using enum Axis;
    double weight = p.gamma + p.a + p.b;
    std::vector<LHVBranch> branches;
    if (weight <= 0) {
        push(branches, p.x, ResponseFn::half_linear(Z, +1), ResponseFn::half_linear(Z, +1));
        push(branches, p.y, ResponseFn::half_linear(Z, -1), ResponseFn::half_linear(Z, -1));
        return {1.0, LHVModel(std::move(branches)), bell_diag(p)};
    }
    double a = p.a / weight;
    double b = p.b / weight;
    double gamma = 1 - a - b;
    EPR2Split core = model_bd0(a, b, gamma);
    double inner_c = 1 - core.p_local;
    double p_local = 1 - weight * inner_c;
    if (p_local <= 1e-15) {
        return {0.0, core.model, bell_diag(p)};
    }
    double core_share = weight * core.p_local / p_local;
    for (const auto &br : core.model.branches()) {
        push(branches, core_share * br.mu, br.pA, br.qB);
    }
    push(branches, p.x / p_local, ResponseFn::half_linear(Z, +1), ResponseFn::half_linear(Z, +1));
    push(branches, p.y / p_local, ResponseFn::half_linear(Z, -1), ResponseFn::half_linear(Z, -1));
    return {p_local, LHVModel(std::move(branches)), bell_diag(p)};
}

EPR2Split model_general(const DensityMatrix &rho) {
    double c = concurrence(rho);
    auto decomposition = wootters_decomposition(rho);

    std::vector<SchmidtForm> forms;
    double total = 0;
    for (const auto &br : decomposition.branches) {
        forms.push_back(schmidt_decompose(br.phi));
        total += br.t;
    }
    double theta = forms.front().theta;
    for (const auto &f : forms) {
        if (std::abs(f.theta - theta) > 1e-8) {
            std::ostringstream ss;
            ss << "decomposition branches are not LU-equivalent (theta " << f.theta << " vs " << theta << ")";
            throw Error(ErrorKind::NumericalFailure, ss.str());
        }
    }

    std::vector<LHVBranch> branches;
    for (size_t i = 0; i < forms.size(); i++) {
        double mu = decomposition.branches[i].t / total;
        push(branches, mu, ResponseFn::rotated(forms[i].uA, ResponseFn::scarani(theta)),
             ResponseFn::rotated(forms[i].uB, ResponseFn::scarani(theta)));
    }
    return {1 - c, LHVModel(std::move(branches)), rho};
}

SplitCheck check_split(const EPR2Split &split, const std::vector<std::pair<Setting, Setting>> &pairs) {
    SplitCheck out;
    bool has_remainder = split.p_local < 1 - 1e-12;
    double worst_remainder = INFINITY;
    for (size_t i = 0; i < pairs.size(); i++) {
        const auto &[A, B] = pairs[i];
        double pq = p_q(split.source, A, B);
        double pl = eval_model(split.model, A, B);
        if (has_remainder) {
            double r = (pq - split.p_local * pl) / (1 - split.p_local);
            if (r < worst_remainder) {
                worst_remainder = r;
                out.worst_index = i;
            }
        } else if (std::abs(pl - pq) > out.max_local_deviation) {
            out.max_local_deviation = std::abs(pl - pq);
            out.worst_index = i;
        }
    }
    if (has_remainder) {
        out.min_remainder = worst_remainder;
    }
    return out;
}

std::vector<std::pair<Setting, Setting>> fibonacci_pairs(int n) {
    auto pts = fibonacci_sphere(n);
    std::vector<std::pair<Setting, Setting>> pairs;
    pairs.reserve(pts.size() * pts.size());
    for (const auto &a : pts) {
        for (const auto &b : pts) {
            pairs.emplace_back(a, b);
        }
    }
    return pairs;
}

}  // namespace epr2
