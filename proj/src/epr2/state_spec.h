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

#ifndef EPR2_STATE_SPEC_H
#define EPR2_STATE_SPEC_H

#include <string>
#include <string_view>
#include <variant>

#include "epr2/localmodels.h"
#include "epr2/states.h"

namespace epr2 {

struct PureSpec {
    double theta;
};
struct WernerSpec {
    double x;
};
struct GenWernerSpec {
    double x;
    double theta;
};
struct BellDiagSpec {
    BDParams params;
};
struct FileSpec {
    std::string path;
};

/// Parsed form of the state mini-language:
///   pure:theta=T | werner:x=X | gw:x=X,theta=T |
///   bd:x=..,y=..,a=..,b=..,gamma=.. | file:PATH
using StateSpec = std::variant<PureSpec, WernerSpec, GenWernerSpec, BellDiagSpec, FileSpec>;

/// Throws ParseError with a diagnostic on malformed input.
StateSpec parse_state_spec(std::string_view text);

DensityMatrix build_state(const StateSpec &spec);

/// The family-specific split for named families; model_general for files.
EPR2Split build_split(const StateSpec &spec);

}  // namespace epr2

#endif
