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

#include "epr2/scatter.h"

#include <cstdio>
#include <fstream>
#include <limits>

#include "epr2/entanglement.h"
#include "epr2/error.h"
#include "epr2/ratio.h"

namespace epr2 {

std::vector<ScatterRow> scatter_rows(uint64_t seed, size_t count) {
    std::vector<ScatterRow> rows;
    rows.reserve(count);
    for (const auto &sample : sample_entangled_gw(seed, count)) {
        EPR2Split split = model_gen_werner(sample.x, sample.theta);
        double c = concurrence(split.source);
        double pq = p_q(split.source, sample.A, sample.B);
        double pl = eval_model(split.model, sample.A, sample.B);
        double ratio = quantum_to_local_ratio(split, sample.A, sample.B);
        rows.push_back({sample.x, sample.theta, sample.A.vec(), sample.B.vec(), c, pq, pl, ratio, 1 - c});
    }
    return rows;
}

void write_scatter_csv(std::ostream &out, const std::vector<ScatterRow> &rows) {
    out << "x,theta,A_x,A_y,A_z,B_x,B_y,B_z,concurrence,p_q,p_l,ratio,bound\n";
    char buf[32];
    auto put = [&](double v, char sep) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out << buf << sep;
    };
    for (const auto &r : rows) {
        put(r.x, ',');
        put(r.theta, ',');
        for (double v : r.A) {
            put(v, ',');
        }
        for (double v : r.B) {
            put(v, ',');
        }
        put(r.concurrence, ',');
        put(r.p_q, ',');
        put(r.p_l, ',');
        put(r.ratio, ',');
        put(r.bound, '\n');
    }
}

ScatterSummary summarize(const std::vector<ScatterRow> &rows) {
    ScatterSummary s{rows.size(), std::numeric_limits<double>::infinity()};
    for (const auto &r : rows) {
        s.min_margin = std::min(s.min_margin, r.ratio - r.bound);
    }
    return s;
}

ScatterSummary scatter_fig1(uint64_t seed, size_t count, const std::string &out_path) {
    auto rows = scatter_rows(seed, count);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw Error(ErrorKind::IoError, "cannot open '" + out_path + "' for writing");
    }
    write_scatter_csv(out, rows);
    out.close();
    if (!out) {
        throw Error(ErrorKind::IoError, "failed writing '" + out_path + "'");
    }
    return summarize(rows);
}

}  // namespace epr2
