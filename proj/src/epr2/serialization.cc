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

#include "epr2/serialization.h"

#include "epr2/error.h"
#include "json.hpp"

namespace epr2 {

namespace {

using nlohmann::json;

const char *axis_name(Axis axis) {
    switch (axis) {
        case Axis::X:
            return "x";
        case Axis::Y:
            return "y";
        case Axis::Z:
            return "z";
    }
    return "?";
}

Axis axis_from(const json &j) {
    std::string name = j.get<std::string>();
    if (name == "x") {
        return Axis::X;
    }
    if (name == "y") {
        return Axis::Y;
    }
    if (name == "z") {
        return Axis::Z;
    }
    throw Error(ErrorKind::ParseError, "bad axis '" + name + "'");
}

json complex_matrix(const CMat &m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); r++) {
        json row = json::array();
        for (int c = 0; c < m.cols(); c++) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(row);
    }
    return rows;
}

CMat complex_matrix_from(const json &j, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != n) {
        throw Error(ErrorKind::ParseError, "expected " + std::to_string(n) + " matrix rows");
    }
    CMat m(n, n);
    for (int r = 0; r < n; r++) {
        const json &row = j[r];
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw Error(ErrorKind::ParseError, "expected " + std::to_string(n) + " entries per row");
        }
        for (int c = 0; c < n; c++) {
            const json &z = row[c];
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                throw Error(ErrorKind::ParseError, "matrix entries must be [re, im] pairs");
            }
            m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
        }
    }
    return m;
}

json response_json(const ResponseFn &fn) {
    struct Visitor {
        json operator()(const response::Uniform &) const {
            return {{"form", "uniform"}};
        }
        json operator()(const response::HalfLinear &h) const {
            return {{"form", "half_linear"}, {"axis", axis_name(h.axis)}, {"sign", h.sign}};
        }
        json operator()(const response::Tilted &t) const {
            return {{"form", "tilted"},
                    {"axis", axis_name(t.axis)},
                    {"sign", t.sign},
                    {"vartheta", t.vartheta},
                    {"z_sign", t.z_sign}};
        }
        json operator()(const response::ScaraniF &f) const {
            return {{"form", "scarani"}, {"theta", f.theta}};
        }
        json operator()(const response::Rotated &r) const {
            return {{"form", "rotated"}, {"u", complex_matrix(r.u)}, {"inner", response_json(*r.inner)}};
        }
    };
    return std::visit(Visitor{}, fn.form());
}

ResponseFn response_from(const json &j) {
    std::string form = j.at("form").get<std::string>();
    if (form == "uniform") {
        return ResponseFn::uniform();
    }
    if (form == "half_linear") {
        return ResponseFn::half_linear(axis_from(j.at("axis")), j.at("sign").get<int>());
    }
    if (form == "tilted") {
        return ResponseFn::tilted(axis_from(j.at("axis")), j.at("sign").get<int>(), j.at("vartheta").get<double>(),
                                  j.at("z_sign").get<int>());
    }
    if (form == "scarani") {
        return ResponseFn::scarani(j.at("theta").get<double>());
    }
    if (form == "rotated") {
        return ResponseFn::rotated(complex_matrix_from(j.at("u"), 2), response_from(j.at("inner")));
    }
    throw Error(ErrorKind::ParseError, "unknown response form '" + form + "'");
}

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

}  // namespace

std::string density_matrix_to_json(const DensityMatrix &rho) {
    return json{{"rho", complex_matrix(rho.matrix())}}.dump();
}

DensityMatrix density_matrix_from_json(std::string_view text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("rho")) {
        throw Error(ErrorKind::ParseError, "expected an object with key \"rho\"");
    }
    return DensityMatrix(complex_matrix_from(j["rho"], 4));
}

std::string model_to_json(double p_local, const LHVModel &model) {
    json branches = json::array();
    for (const auto &br : model.branches()) {
        branches.push_back({{"mu", br.mu}, {"pA", response_json(br.pA)}, {"qB", response_json(br.qB)}});
    }
    return json{{"p_local", p_local}, {"branches", branches}}.dump();
}

SerializedModel model_from_json(std::string_view text) {
    json j = parse(text);
    try {
        std::vector<LHVBranch> branches;
        for (const auto &br : j.at("branches")) {
            branches.push_back({br.at("mu").get<double>(), response_from(br.at("pA")), response_from(br.at("qB"))});
        }
        return {j.at("p_local").get<double>(), LHVModel(std::move(branches))};
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

}  // namespace epr2
