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

#include "epr2/sampling.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "epr2/error.h"

namespace epr2 {

std::mt19937_64 make_stream(uint64_t seed, uint64_t stream) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(stream),
                      static_cast<uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

Setting random_unit_vector(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    while (true) {
        double x = normal(rng);
        double y = normal(rng);
        double z = normal(rng);
        double n = std::sqrt(x * x + y * y + z * z);
        if (n > 1e-12) {
            return Setting(x / n, y / n, z / n);
        }
    }
}

std::vector<GWSample> sample_entangled_gw(uint64_t seed, size_t count) {
    std::vector<GWSample> out;
    out.reserve(count);
    for (size_t i = 0; i < count; i++) {
        auto rng = make_stream(seed, i);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double x = 0;
        double theta = 0;
        do {
            x = unit(rng);
            theta = unit(rng) * std::numbers::pi / 4;
        } while (!((1 + 2 * std::sin(2 * theta)) * x > 1));
        Setting A = random_unit_vector(rng);
        Setting B = random_unit_vector(rng);
        out.push_back({x, theta, A, B});
    }
    return out;
}

JointTable simulate_lhv(const LHVModel &model, const Setting &a, const Setting &b, uint64_t n_samples,
                        uint64_t seed) {
    if (n_samples == 0) {
        throw Error(ErrorKind::InvalidParams, "simulate_lhv needs at least one sample");
    }
    const auto &branches = model.branches();
    std::vector<double> cumulative;
    std::vector<double> prob_a;
    std::vector<double> prob_b;
    double acc = 0;
    for (const auto &br : branches) {
        acc += br.mu;
        cumulative.push_back(acc);
        prob_a.push_back(br.pA(a));
        prob_b.push_back(br.qB(b));
    }
    cumulative.back() = 1.0;

    std::array<uint64_t, 4> counts{};
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (uint64_t start = 0, block = 0; start < n_samples; start += kSimulationBlock, block++) {
        auto rng = make_stream(seed, block);
        uint64_t end = std::min(n_samples, start + kSimulationBlock);
        for (uint64_t s = start; s < end; s++) {
            double u = unit(rng);
            size_t i = std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin();
            i = std::min(i, branches.size() - 1);
            bool alpha_plus = unit(rng) < prob_a[i];
            bool beta_plus = unit(rng) < prob_b[i];
            counts[(alpha_plus ? 0 : 2) + (beta_plus ? 0 : 1)]++;
        }
    }
    JointTable table;
    for (int k = 0; k < 4; k++) {
        table.p[k] = static_cast<double>(counts[k]) / static_cast<double>(n_samples);
    }
    return table;
}

}  // namespace epr2
