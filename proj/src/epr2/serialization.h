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

#ifndef EPR2_SERIALIZATION_H
#define EPR2_SERIALIZATION_H

#include <string>
#include <string_view>

#include "epr2/localmodels.h"
#include "epr2/states.h"

namespace epr2 {

/// {"rho": [[[re, im] x4] x4]}, basis |00>,|01>,|10>,|11>, row-major.
std::string density_matrix_to_json(const DensityMatrix &rho);
/// Throws ParseError on schema violations and InvalidState on a bad matrix.
DensityMatrix density_matrix_from_json(std::string_view text);

/// {"p_local": r, "branches": [{"mu": r, "pA": fn, "qB": fn}, ...]} where fn is
/// a tagged object, e.g. {"form": "half_linear", "axis": "z", "sign": 1}.
std::string model_to_json(double p_local, const LHVModel &model);

struct SerializedModel {
    double p_local;
    LHVModel model;
};
SerializedModel model_from_json(std::string_view text);

}  // namespace epr2

#endif
