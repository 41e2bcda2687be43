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

#include "epr2/error.h"

namespace epr2 {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotHermitian:
            return "NotHermitian";
        case ErrorKind::NotPSD:
            return "NotPSD";
        case ErrorKind::NotSymmetric:
            return "NotSymmetric";
        case ErrorKind::NotUnit:
            return "NotUnit";
        case ErrorKind::NotUnitary:
            return "NotUnitary";
        case ErrorKind::OutOfRange:
            return "OutOfRange";
        case ErrorKind::InvalidParams:
            return "InvalidParams";
        case ErrorKind::InvalidState:
            return "InvalidState";
        case ErrorKind::NumericalFailure:
            return "NumericalFailure";
        case ErrorKind::LocalWeightOne:
            return "LocalWeightOne";
        case ErrorKind::DegeneratePL:
            return "DegeneratePL";
        case ErrorKind::ParseError:
            return "ParseError";
        case ErrorKind::IoError:
            return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

}  // namespace epr2
