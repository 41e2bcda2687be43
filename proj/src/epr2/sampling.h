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

#ifndef EPR2_SAMPLING_H
#define EPR2_SAMPLING_H

#include <cstdint>
#include <random>
#include <vector>

#include "epr2/correlations.h"
#include "epr2/localmodels.h"

namespace epr2 {

/// Random streams are std::mt19937_64 engines seeded through std::seed_seq
/// from (seed, stream index). Every sample index (or block of indices) gets
/// its own stream, so results never depend on evaluation order.
std::mt19937_64 make_stream(uint64_t seed, uint64_t stream);

/// Uniform point on the sphere: normalized triple of standard normals.
Setting random_unit_vector(std::mt19937_64 &rng);

struct GWSample {
    double x;
    double theta;
    Setting A;
    Setting B;
};

/// x ~ U[0,1], theta ~ U[0, pi/4], redrawn until (1 + 2 sin 2theta) x > 1;
/// A, B uniform on the sphere. Sample i uses stream i.
std::vector<GWSample> sample_entangled_gw(uint64_t seed, size_t count);

/// Monte-Carlo run of the LHV model at directions a, b. Samples are drawn in
/// blocks of kSimulationBlock, block k using stream k.
JointTable simulate_lhv(const LHVModel &model, const Setting &a, const Setting &b, uint64_t n_samples,
                        uint64_t seed);

inline constexpr uint64_t kSimulationBlock = 1 << 16;

}  // namespace epr2

#endif
