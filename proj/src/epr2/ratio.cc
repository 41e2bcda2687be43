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

#include "epr2/ratio.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "epr2/error.h"

namespace epr2 {

namespace {

constexpr int kGoldenSteps = 60;

using Angles = std::array<double, 4>;  // polar A, azimuth A, polar B, azimuth B

double ratio_at(const EPR2Split &split, const Angles &t) {
    return quantum_to_local_ratio(split, Setting::spherical(t[0], t[1]), Setting::spherical(t[2], t[3]));
}

Angles angles_of(const Setting &a, const Setting &b) {
    auto polar = [](const Setting &s) {
        return std::acos(std::clamp(s.z(), -1.0, 1.0));
    };
    return {polar(a), std::atan2(a.y(), a.x()), polar(b), std::atan2(b.y(), b.x())};
}

// Golden-section minimization of f on [lo, hi].
template <typename F>
double golden_section(F &&f, double lo, double hi) {
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < kGoldenSteps && hi - lo > 1e-12; i++) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    return fc < fd ? c : d;
}

}  // namespace

double quantum_to_local_ratio(const EPR2Split &split, const Setting &A, const Setting &B) {
    double pl = eval_model(split.model, A, B);
    if (pl < 1e-12) {
        return std::numeric_limits<double>::infinity();
    }
    return p_q(split.source, A, B) / pl;
}

RatioMin min_ratio(const EPR2Split &split, int grid_density, int refine_iters) {
    if (grid_density < 1 || refine_iters < 0) {
        throw Error(ErrorKind::InvalidParams, "min_ratio needs grid_density >= 1 and refine_iters >= 0");
    }
    auto pts = fibonacci_sphere(grid_density);
    double best = std::numeric_limits<double>::infinity();
    size_t best_a = 0;
    size_t best_b = 0;
    for (size_t i = 0; i < pts.size(); i++) {
        for (size_t j = 0; j < pts.size(); j++) {
            double r = quantum_to_local_ratio(split, pts[i], pts[j]);
            if (r < best) {
                best = r;
                best_a = i;
                best_b = j;
            }
        }
    }
    if (!std::isfinite(best)) {
        throw Error(ErrorKind::DegeneratePL, "P_L vanishes at every lattice point");
    }

    Angles t = angles_of(pts[best_a], pts[best_b]);
    double value = best;
    double half_width = std::sqrt(4 * std::numbers::pi / grid_density);
    for (int iter = 0; iter < refine_iters; iter++) {
        for (int coord = 0; coord < 4; coord++) {
            Angles trial = t;
            auto f = [&](double v) {
                trial[coord] = v;
                return ratio_at(split, trial);
            };
            double arg = golden_section(f, t[coord] - half_width, t[coord] + half_width);
            trial[coord] = arg;
            double candidate = ratio_at(split, trial);
            if (candidate < value) {
                value = candidate;
                t = trial;
            }
        }
        half_width /= 2;
    }
    return {value, Setting::spherical(t[0], t[1]), Setting::spherical(t[2], t[3]), best};
}

}  // namespace epr2
