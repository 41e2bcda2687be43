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

#ifndef EPR2_SCATTER_H
#define EPR2_SCATTER_H

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "epr2/sampling.h"

namespace epr2 {

struct ScatterRow {
    double x;
    double theta;
    std::array<double, 3> A;
    std::array<double, 3> B;
    double concurrence;
    double p_q;
    double p_l;
    double ratio;
    double bound;  // 1 - concurrence
};

struct ScatterSummary {
    size_t rows = 0;
    /// min over rows of ratio - bound; +infinity for an empty scatter.
    double min_margin;
};

/// Rows for entangled generalized Werner samples against their constructed local model.
std::vector<ScatterRow> scatter_rows(uint64_t seed, size_t count);

/// CSV with a header row and 17 significant digits per value.
void write_scatter_csv(std::ostream &out, const std::vector<ScatterRow> &rows);

ScatterSummary summarize(const std::vector<ScatterRow> &rows);

/// scatter_rows + write_scatter_csv to out_path. Throws IoError.
ScatterSummary scatter_fig1(uint64_t seed, size_t count, const std::string &out_path);

}  // namespace epr2

#endif
