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

#include "epr2/epr2.h"

#include <cstring>
#include <optional>
#include <string>

#include "epr2/entanglement.h"
#include "epr2/error.h"
#include "epr2/ratio.h"
#include "epr2/sampling.h"
#include "epr2/scatter.h"
#include "epr2/serialization.h"
#include "epr2/state_spec.h"

struct epr2_state {
    epr2::StateSpec spec;
    epr2::DensityMatrix rho;
};

struct epr2_split {
    double p_local;
    epr2::LHVModel model;
    std::optional<epr2::DensityMatrix> source;
};

namespace {

thread_local std::string last_error;

epr2_status status_of(epr2::ErrorKind kind) {
    switch (kind) {
        case epr2::ErrorKind::NumericalFailure:
        case epr2::ErrorKind::DegeneratePL:
            return EPR2_ERR_NUMERICAL;
        case epr2::ErrorKind::IoError:
            return EPR2_ERR_IO;
        default:
            return EPR2_ERR_VALIDATION;
    }
}

template <typename F>
epr2_status guarded(F &&body) {
    try {
        body();
        return EPR2_OK;
    } catch (const epr2::Error &e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception &e) {
        last_error = e.what();
        return EPR2_ERR_NUMERICAL;
    }
}

epr2_status null_argument(const char *what) {
    last_error = std::string("null argument: ") + what;
    return EPR2_ERR_ARGUMENT;
}

char *copy_string(const std::string &s) {
    char *out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

epr2::Setting setting(const double v[3]) {
    return epr2::Setting(v[0], v[1], v[2]);
}

void store(const epr2::Setting &s, double out[3]) {
    for (int k = 0; k < 3; k++) {
        out[k] = s[k];
    }
}

epr2::EPR2Split as_split(const epr2_split *split) {
    if (!split->source) {
        throw epr2::Error(epr2::ErrorKind::InvalidParams, "split has no source state (loaded from JSON)");
    }
    return {split->p_local, split->model, *split->source};
}

epr2_split *wrap(epr2::EPR2Split split) {
    return new epr2_split{split.p_local, std::move(split.model), std::move(split.source)};
}

}  // namespace

extern "C" {

const char *epr2_last_error(void) {
    return last_error.c_str();
}

const char *epr2_version(void) {
    return "1.0.0";
}

void epr2_string_free(char *s) {
    delete[] s;
}

epr2_status epr2_state_parse(const char *spec, epr2_state **out) {
    if (!spec || !out) {
        return null_argument("spec/out");
    }
    return guarded([&] {
        auto parsed = epr2::parse_state_spec(spec);
        auto rho = epr2::build_state(parsed);
        *out = new epr2_state{std::move(parsed), std::move(rho)};
    });
}

epr2_status epr2_state_from_json(const char *json, epr2_state **out) {
    if (!json || !out) {
        return null_argument("json/out");
    }
    return guarded([&] {
        auto rho = epr2::density_matrix_from_json(json);
        *out = new epr2_state{epr2::FileSpec{""}, std::move(rho)};
    });
}

epr2_status epr2_state_to_json(const epr2_state *state, char **out) {
    if (!state || !out) {
        return null_argument("state/out");
    }
    return guarded([&] {
        *out = copy_string(epr2::density_matrix_to_json(state->rho));
    });
}

void epr2_state_free(epr2_state *state) {
    delete state;
}

epr2_status epr2_state_matrix(const epr2_state *state, double re[16], double im[16]) {
    if (!state || !re || !im) {
        return null_argument("state/re/im");
    }
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            re[4 * r + c] = state->rho(r, c).real();
            im[4 * r + c] = state->rho(r, c).imag();
        }
    }
    return EPR2_OK;
}

epr2_status epr2_concurrence(const epr2_state *state, double *out) {
    if (!state || !out) {
        return null_argument("state/out");
    }
    return guarded([&] {
        *out = epr2::concurrence(state->rho);
    });
}

epr2_status epr2_joint_table(const epr2_state *state, const double a[3], const double b[3], double table[4]) {
    if (!state || !a || !b || !table) {
        return null_argument("state/a/b/table");
    }
    return guarded([&] {
        auto t = epr2::joint_table(state->rho, setting(a), setting(b));
        std::memcpy(table, t.p.data(), sizeof(double) * 4);
    });
}

epr2_status epr2_split_build(const epr2_state *state, epr2_split **out) {
    if (!state || !out) {
        return null_argument("state/out");
    }
    return guarded([&] {
        if (std::holds_alternative<epr2::FileSpec>(state->spec)) {
            *out = wrap(epr2::model_general(state->rho));
        } else {
            *out = wrap(epr2::build_split(state->spec));
        }
    });
}

epr2_status epr2_split_general(const epr2_state *state, epr2_split **out) {
    if (!state || !out) {
        return null_argument("state/out");
    }
    return guarded([&] {
        *out = wrap(epr2::model_general(state->rho));
    });
}

epr2_status epr2_split_from_json(const char *json, epr2_split **out) {
    if (!json || !out) {
        return null_argument("json/out");
    }
    return guarded([&] {
        auto m = epr2::model_from_json(json);
        *out = new epr2_split{m.p_local, std::move(m.model), std::nullopt};
    });
}

epr2_status epr2_split_to_json(const epr2_split *split, char **out) {
    if (!split || !out) {
        return null_argument("split/out");
    }
    return guarded([&] {
        *out = copy_string(epr2::model_to_json(split->p_local, split->model));
    });
}

void epr2_split_free(epr2_split *split) {
    delete split;
}

epr2_status epr2_split_p_local(const epr2_split *split, double *out) {
    if (!split || !out) {
        return null_argument("split/out");
    }
    *out = split->p_local;
    return EPR2_OK;
}

epr2_status epr2_split_branch_count(const epr2_split *split, size_t *out) {
    if (!split || !out) {
        return null_argument("split/out");
    }
    *out = split->model.branches().size();
    return EPR2_OK;
}

epr2_status epr2_split_eval(const epr2_split *split, const double A[3], const double B[3], double *out) {
    if (!split || !A || !B || !out) {
        return null_argument("split/A/B/out");
    }
    return guarded([&] {
        *out = epr2::eval_model(split->model, setting(A), setting(B));
    });
}

epr2_status epr2_split_remainder(const epr2_split *split, const double A[3], const double B[3], double *out) {
    if (!split || !A || !B || !out) {
        return null_argument("split/A/B/out");
    }
    return guarded([&] {
        *out = epr2::remainder(as_split(split), setting(A), setting(B));
    });
}

epr2_status epr2_check(const epr2_split *split, int grid, int refine, epr2_check_result *out) {
    if (!split || !out) {
        return null_argument("split/out");
    }
    return guarded([&] {
        if (grid < 1 || refine < 0) {
            throw epr2::Error(epr2::ErrorKind::InvalidParams, "grid must be >= 1 and refine >= 0");
        }
        auto s = as_split(split);
        auto check = epr2::check_split(s, epr2::fibonacci_pairs(grid));
        auto ratio = epr2::min_ratio(s, grid, refine);
        epr2_check_result r{};
        r.p_local = s.p_local;
        r.has_remainder = check.min_remainder.has_value() ? 1 : 0;
        r.min_remainder = check.min_remainder.value_or(0.0);
        r.max_local_deviation = check.max_local_deviation;
        r.min_ratio = ratio.value;
        store(ratio.A, r.argmin_a);
        store(ratio.B, r.argmin_b);
        *out = r;
    });
}

epr2_status epr2_simulate(const epr2_split *split, const double a[3], const double b[3], uint64_t samples,
                          uint64_t seed, double freq[4], double expected[4]) {
    if (!split || !a || !b || !freq) {
        return null_argument("split/a/b/freq");
    }
    return guarded([&] {
        auto sa = setting(a);
        auto sb = setting(b);
        auto table = epr2::simulate_lhv(split->model, sa, sb, samples, seed);
        std::memcpy(freq, table.p.data(), sizeof(double) * 4);
        if (expected) {
            expected[0] = epr2::eval_model(split->model, sa, sb);
            expected[1] = epr2::eval_model(split->model, sa, -sb);
            expected[2] = epr2::eval_model(split->model, -sa, sb);
            expected[3] = epr2::eval_model(split->model, -sa, -sb);
        }
    });
}

epr2_status epr2_scatter(uint64_t seed, size_t count, const char *path, epr2_scatter_summary *out) {
    if (!path) {
        return null_argument("path");
    }
    return guarded([&] {
        auto summary = epr2::scatter_fig1(seed, count, path);
        if (out) {
            *out = {summary.rows, summary.min_margin};
        }
    });
}

}  // extern "C"
