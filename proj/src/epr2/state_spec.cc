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

#include "epr2/state_spec.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "epr2/error.h"
#include "epr2/serialization.h"

namespace epr2 {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_number(std::string_view key, std::string_view text) {
    text = trim(text);
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        std::ostringstream ss;
        ss << "bad number for '" << key << "': '" << text << "'";
        throw Error(ErrorKind::ParseError, ss.str());
    }
    return value;
}

std::map<std::string, double, std::less<>> parse_params(std::string_view family, std::string_view body,
                                                        std::initializer_list<std::string_view> keys) {
    std::map<std::string, double, std::less<>> out;
    while (!body.empty()) {
        size_t comma = body.find(',');
        std::string_view item = trim(body.substr(0, comma));
        body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
        size_t eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorKind::ParseError, "expected key=value in '" + std::string(item) + "'");
        }
        std::string key(trim(item.substr(0, eq)));
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw Error(ErrorKind::ParseError, "unknown parameter '" + key + "' for " + std::string(family));
        }
        if (out.contains(key)) {
            throw Error(ErrorKind::ParseError, "duplicate parameter '" + key + "'");
        }
        out[key] = parse_number(key, item.substr(eq + 1));
    }
    return out;
}

double require(const std::map<std::string, double, std::less<>> &params, std::string_view family,
               std::string_view key) {
    auto it = params.find(key);
    if (it == params.end()) {
        throw Error(ErrorKind::ParseError, std::string(family) + " requires '" + std::string(key) + "'");
    }
    return it->second;
}

}  // namespace

StateSpec parse_state_spec(std::string_view text) {
    text = trim(text);
    size_t colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw Error(ErrorKind::ParseError,
                    "state spec must look like family:params (pure, werner, gw, bd, file), got '" +
                        std::string(text) + "'");
    }
    std::string_view family = text.substr(0, colon);
    std::string_view body = text.substr(colon + 1);

    if (family == "file") {
        if (trim(body).empty()) {
            throw Error(ErrorKind::ParseError, "file: needs a path");
        }
        return FileSpec{std::string(trim(body))};
    }
    if (family == "pure") {
        auto p = parse_params(family, body, {"theta"});
        return PureSpec{require(p, family, "theta")};
    }
    if (family == "werner") {
        auto p = parse_params(family, body, {"x"});
        return WernerSpec{require(p, family, "x")};
    }
    if (family == "gw") {
        auto p = parse_params(family, body, {"x", "theta"});
        return GenWernerSpec{require(p, family, "x"), require(p, family, "theta")};
    }
    if (family == "bd") {
        auto p = parse_params(family, body, {"x", "y", "a", "b", "gamma"});
        BDParams params;
        params.x = p.contains("x") ? p["x"] : 0.0;
        params.y = p.contains("y") ? p["y"] : 0.0;
        params.a = p.contains("a") ? p["a"] : 0.0;
        params.b = p.contains("b") ? p["b"] : 0.0;
        params.gamma = p.contains("gamma") ? p["gamma"] : 0.0;
        return BellDiagSpec{params};
    }
    throw Error(ErrorKind::ParseError, "unknown state family '" + std::string(family) + "'");
}

DensityMatrix build_state(const StateSpec &spec) {
    struct Visitor {
        DensityMatrix operator()(const PureSpec &s) const {
            return DensityMatrix::from_pure(pure_theta(s.theta));
        }
        DensityMatrix operator()(const WernerSpec &s) const {
            return werner(s.x);
        }
        DensityMatrix operator()(const GenWernerSpec &s) const {
            return generalized_werner(s.x, s.theta);
        }
        DensityMatrix operator()(const BellDiagSpec &s) const {
            return bell_diag(s.params);
        }
        DensityMatrix operator()(const FileSpec &s) const {
            std::ifstream in(s.path);
            if (!in) {
                throw Error(ErrorKind::IoError, "cannot open '" + s.path + "'");
            }
            std::stringstream buffer;
            buffer << in.rdbuf();
            return density_matrix_from_json(buffer.str());
        }
    };
    return std::visit(Visitor{}, spec);
}

EPR2Split build_split(const StateSpec &spec) {
    struct Visitor {
        EPR2Split operator()(const PureSpec &s) const {
            return model_pure(s.theta);
        }
        EPR2Split operator()(const WernerSpec &s) const {
            return model_werner(s.x);
        }
        EPR2Split operator()(const GenWernerSpec &s) const {
            return model_gen_werner(s.x, s.theta);
        }
        EPR2Split operator()(const BellDiagSpec &s) const {
            return model_bd(s.params);
        }
        EPR2Split operator()(const FileSpec &s) const {
            return model_general(build_state(s));
        }
    };
    return std::visit(Visitor{}, spec);
}

}  // namespace epr2
