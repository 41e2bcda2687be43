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

#ifndef EPR2_ERROR_H
#define EPR2_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace epr2 {

enum class ErrorKind {
    NotHermitian,
    NotPSD,
    NotSymmetric,
    NotUnit,
    NotUnitary,
    OutOfRange,
    InvalidParams,
    InvalidState,
    NumericalFailure,
    LocalWeightOne,
    DegeneratePL,
    ParseError,
    IoError,
};

std::string_view error_kind_name(ErrorKind kind);

/// Exception thrown by every validation and numerical failure in the library.
/// The kind lets the C API map failures onto status codes.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace epr2

#endif
