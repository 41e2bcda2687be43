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

#ifndef EPR2_STATES_H
#define EPR2_STATES_H

#include <array>

#include "epr2/linalg.h"

namespace epr2 {

/// Pure two-qubit state c1|00> + c2|01> + c3|10> + c4|11>.
class PureState {
   public:
    /// Throws InvalidState unless the amplitudes are normalized within TRACE_TOL.
    explicit PureState(const std::array<Complex, 4> &amplitudes);

    const std::array<Complex, 4> &amplitudes() const {
        return c_;
    }
    const Complex &operator[](int k) const {
        return c_[k];
    }

    /// |psi><psi| as a 4x4 matrix.
    CMat projector() const;

   private:
    std::array<Complex, 4> c_;
};

/// Validated 4x4 density matrix in basis |00>,|01>,|10>,|11>.
class DensityMatrix {
   public:
    /// Throws InvalidState unless m is Hermitian (HERM_TOL), has unit trace
    /// (TRACE_TOL) and no eigenvalue below -PSD_TOL.
    explicit DensityMatrix(const CMat &m);
    static DensityMatrix from_pure(const PureState &psi);

    const CMat &matrix() const {
        return m_;
    }
    const Complex &operator()(int r, int c) const {
        return m_(r, c);
    }

   private:
    CMat m_;
};

/// LU-canonical form: psi = (uA (x) uB) (cos theta |00> + sin theta |11>),
/// up to a global phase, with theta in [0, pi/4].
struct SchmidtForm {
    double theta;
    CMat uA;
    CMat uB;

    double c() const;  // cos 2 theta
    double s() const;  // sin 2 theta
};

/// Parameters of the Bell-state-plus-diagonal family.
struct BDParams {
    double x = 0;
    double y = 0;
    double a = 0;
    double b = 0;
    double gamma = 0;

    /// Throws InvalidParams on negative entries or a sum off by more than 1e-12.
    void validate() const;
};

/// cos(theta)|00> + sin(theta)|11>, theta in [0, pi/4].
PureState pure_theta(double theta);

/// Bell state (|00> + |11>)/sqrt(2).
PureState bell_phi_plus();

/// x |psi+><psi+| + (1 - x) I/4.
DensityMatrix werner(double x);

/// x |psi(theta)><psi(theta)| + (1 - x) I/4.
DensityMatrix generalized_werner(double x, double theta);

/// The Bell-diagonal mixture with entries x + gamma/2, a, b, y + gamma/2 on the
/// diagonal and gamma/2 coupling |00> and |11>.
DensityMatrix bell_diag(const BDParams &p);

/// Schmidt form via a closed-form 2x2 singular value decomposition of the
/// amplitude matrix M[i][j] = <ij|psi>. When the Schmidt coefficients are
/// equal (theta = pi/4) the local unitaries are not unique; the returned uA is
/// then the deterministic eigenbasis of M M^dagger (identity for an exactly
/// scalar M M^dagger).
SchmidtForm schmidt_decompose(const PureState &psi);

}  // namespace epr2

#endif
