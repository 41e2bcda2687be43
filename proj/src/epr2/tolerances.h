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

#ifndef EPR2_TOLERANCES_H
#define EPR2_TOLERANCES_H

namespace epr2 {

/// Max entry deviation accepted when checking Hermiticity / symmetry / unitarity.
inline constexpr double HERM_TOL = 1e-10;
/// Max entry deviation accepted for factorization reconstructions.
inline constexpr double RECON_TOL = 1e-9;
/// Trace and normalization slack for states.
inline constexpr double TRACE_TOL = 1e-10;
/// Most negative eigenvalue still treated as zero in a density matrix.
inline constexpr double PSD_TOL = 1e-9;
/// Most negative eigenvalue still treated as zero by sqrt_psd.
inline constexpr double SQRT_PSD_TOL = 1e-10;
/// Relative deviation from unit length that a measurement direction may have.
inline constexpr double UNIT_INPUT_TOL = 1e-6;
/// Eigenvalues of rho below this are dropped before building a decomposition.
inline constexpr double RANK_TOL = 1e-12;

}  // namespace epr2

#endif
