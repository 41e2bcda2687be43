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

// Command-line front end. Talks to the library only through the C API.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "epr2/epr2.h"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

struct Failure {
    int code;
};

void check(epr2_status status) {
    if (status == EPR2_OK) {
        return;
    }
    std::fprintf(stderr, "error: %s\n", epr2_last_error());
    throw Failure{status == EPR2_ERR_NUMERICAL ? kExitNumerical : kExitValidation};
}

struct StateHandle {
    epr2_state *ptr = nullptr;
    explicit StateHandle(const std::string &spec) {
        check(epr2_state_parse(spec.c_str(), &ptr));
    }
    ~StateHandle() {
        epr2_state_free(ptr);
    }
    StateHandle(const StateHandle &) = delete;
    StateHandle &operator=(const StateHandle &) = delete;
};

struct SplitHandle {
    epr2_split *ptr = nullptr;
    explicit SplitHandle(const StateHandle &state) {
        check(epr2_split_build(state.ptr, &ptr));
    }
    ~SplitHandle() {
        epr2_split_free(ptr);
    }
    SplitHandle(const SplitHandle &) = delete;
    SplitHandle &operator=(const SplitHandle &) = delete;
};

struct Direction {
    double v[3];
};

Direction parse_direction(const std::string &text, const char *name) {
    Direction d{};
    std::stringstream ss(text);
    std::string item;
    int k = 0;
    while (std::getline(ss, item, ',')) {
        if (k == 3) {
            k = 4;
            break;
        }
        char *end = nullptr;
        d.v[k] = std::strtod(item.c_str(), &end);
        if (item.empty() || *end != '\0') {
            k = -1;
            break;
        }
        k++;
    }
    if (k != 3) {
        std::fprintf(stderr, "error: --%s expects x,y,z\n", name);
        throw Failure{kExitValidation};
    }
    return d;
}

uint64_t default_seed() {
    if (const char *env = std::getenv("EPR2_SEED")) {
        char *end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (*env != '\0' && *end == '\0') {
            return v;
        }
        std::fprintf(stderr, "warning: ignoring non-numeric EPR2_SEED\n");
    }
    return 1;
}

const char *kCells[4] = {"P(+,+)", "P(+,-)", "P(-,+)", "P(-,-)"};

void print_vec(const char *key, const double v[3]) {
    std::printf("%s=%.12g,%.12g,%.12g\n", key, v[0], v[1], v[2]);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Local/nonlocal decomposition of two-qubit measurement statistics"};
    app.require_subcommand(1);

    std::string state_spec;
    std::string a_text;
    std::string b_text;
    std::string out_path;
    int grid = 400;
    int refine = 3;
    size_t count = 20000;
    uint64_t seed = default_seed();
    uint64_t samples = 1000000;

    const char *state_help = "pure:theta=T | werner:x=X | gw:x=X,theta=T | bd:x=..,y=..,a=..,b=..,gamma=.. | file:PATH";

    auto *concurrence_cmd = app.add_subcommand("concurrence", "Print the concurrence of a state");
    concurrence_cmd->add_option("--state", state_spec, state_help)->required();

    auto *pq_cmd = app.add_subcommand("pq", "Print the quantum joint table for directions a, b");
    pq_cmd->add_option("--state", state_spec, state_help)->required();
    pq_cmd->add_option("--A", a_text, "Direction a as x,y,z")->required();
    pq_cmd->add_option("--B", b_text, "Direction b as x,y,z")->required();

    auto *model_cmd = app.add_subcommand("model", "Print the local/nonlocal split as JSON");
    model_cmd->add_option("--state", state_spec, state_help)->required();
    model_cmd->add_option("--out", out_path, "Write JSON to this file instead of stdout");

    auto *check_cmd = app.add_subcommand("check", "Verify the split: remainder and ratio minima");
    check_cmd->add_option("--state", state_spec, state_help)->required();
    check_cmd->add_option("--grid", grid, "Fibonacci points per sphere")->capture_default_str();
    check_cmd->add_option("--refine", refine, "Golden-section refinement rounds")->capture_default_str();

    auto *scatter_cmd = app.add_subcommand("scatter", "Write the generalized Werner scatter CSV");
    scatter_cmd->add_option("--n", count, "Number of samples")->capture_default_str();
    scatter_cmd->add_option("--seed", seed, "RNG seed (default: EPR2_SEED or 1)");
    scatter_cmd->add_option("--out", out_path, "CSV output path")->required();

    auto *simulate_cmd = app.add_subcommand("simulate", "Monte-Carlo run of the local model");
    simulate_cmd->add_option("--state", state_spec, state_help)->required();
    simulate_cmd->add_option("--A", a_text, "Direction a as x,y,z")->required();
    simulate_cmd->add_option("--B", b_text, "Direction b as x,y,z")->required();
    simulate_cmd->add_option("--samples", samples, "Number of samples")->capture_default_str();
    simulate_cmd->add_option("--seed", seed, "RNG seed (default: EPR2_SEED or 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        const CLI::App *shown = &app;
        for (const auto *sub : app.get_subcommands()) {
            shown = sub;
        }
        std::fputs(shown->help().c_str(), stderr);
        return kExitValidation;
    }

    try {
        if (concurrence_cmd->parsed()) {
            StateHandle state(state_spec);
            double c = 0;
            check(epr2_concurrence(state.ptr, &c));
            std::printf("%.12g\n", c);
        } else if (pq_cmd->parsed()) {
            StateHandle state(state_spec);
            auto a = parse_direction(a_text, "A");
            auto b = parse_direction(b_text, "B");
            double table[4];
            check(epr2_joint_table(state.ptr, a.v, b.v, table));
            for (int k = 0; k < 4; k++) {
                std::printf("%s=%.12g\n", kCells[k], table[k]);
            }
        } else if (model_cmd->parsed()) {
            StateHandle state(state_spec);
            SplitHandle split(state);
            char *json = nullptr;
            check(epr2_split_to_json(split.ptr, &json));
            std::string text(json);
            epr2_string_free(json);
            if (out_path.empty()) {
                std::printf("%s\n", text.c_str());
            } else {
                std::ofstream out(out_path);
                out << text << "\n";
                if (!out) {
                    std::fprintf(stderr, "error: cannot write '%s'\n", out_path.c_str());
                    return kExitValidation;
                }
            }
        } else if (check_cmd->parsed()) {
            StateHandle state(state_spec);
            SplitHandle split(state);
            epr2_check_result r{};
            check(epr2_check(split.ptr, grid, refine, &r));
            std::printf("p_local=%.12g\n", r.p_local);
            if (r.has_remainder) {
                std::printf("min_remainder=%.12g\n", r.min_remainder);
            } else {
                std::printf("min_remainder=none\n");
                std::printf("max_local_deviation=%.12g\n", r.max_local_deviation);
            }
            std::printf("min_ratio=%.12g\n", r.min_ratio);
            print_vec("argmin_A", r.argmin_a);
            print_vec("argmin_B", r.argmin_b);
        } else if (scatter_cmd->parsed()) {
            epr2_scatter_summary s{};
            check(epr2_scatter(seed, count, out_path.c_str(), &s));
            std::printf("rows=%zu\n", s.rows);
            std::printf("seed=%" PRIu64 "\n", seed);
            std::printf("min_margin=%.12g\n", s.min_margin);
        } else if (simulate_cmd->parsed()) {
            StateHandle state(state_spec);
            SplitHandle split(state);
            auto a = parse_direction(a_text, "A");
            auto b = parse_direction(b_text, "B");
            double freq[4];
            double expected[4];
            check(epr2_simulate(split.ptr, a.v, b.v, samples, seed, freq, expected));
            for (int k = 0; k < 4; k++) {
                std::printf("%s=%.12g expected=%.12g\n", kCells[k], freq[k], expected[k]);
            }
        }
    } catch (const Failure &f) {
        return f.code;
    }
    return 0;
}
