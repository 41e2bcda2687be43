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

#ifndef EPR2_RATIO_H
#define EPR2_RATIO_H

#include "epr2/localmodels.h"

namespace epr2 {

struct RatioMin {
    double value;
    Setting A;
    Setting B;
    /// Best value found on the lattice before refinement.
    double grid_value;
};

/// P_Q / P_L, or +infinity where P_L < 1e-12 (those settings are excluded).
double quantum_to_local_ratio(const EPR2Split &split, const Setting &A, const Setting &B);

/// Minimizes P_Q / P_L over pairs of a Fibonacci lattice with grid_density
/// points per sphere, then runs refine_iters rounds of coordinate-wise
/// golden-section search over the four spherical angles. Refinement only
/// accepts improvements, so value <= grid_value. Throws DegeneratePL when
/// P_L vanishes at every lattice pair.
RatioMin min_ratio(const EPR2Split &split, int grid_density, int refine_iters);

}  // namespace epr2

#endif
