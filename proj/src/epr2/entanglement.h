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

#ifndef EPR2_ENTANGLEMENT_H
#define EPR2_ENTANGLEMENT_H

#include <array>
#include <vector>

#include "epr2/states.h"

namespace epr2 {

/// Eigenvalues of R = rho (sy x sy) rho* (sy x sy), descending, clamped at zero.
struct Spectrum4 {
    std::array<double, 4> lambdas;
};

struct WoottersBranch {
    double t;
    PureState phi;
};

/// Pure-state ensemble reproducing rho whose average concurrence equals C(rho).
struct WoottersDecomposition {
    std::vector<WoottersBranch> branches;

    /// sum_i t_i |phi_i><phi_i|
    CMat mixture() const;
    /// sum_i t_i C(phi_i)
    double average_concurrence() const;
};

/// 2 |c1 c4 - c2 c3|.
double concurrence_pure(const PureState &psi);

/// (sy x sy) rho* (sy x sy).
DensityMatrix spin_flip(const DensityMatrix &rho);

/// Spectrum of R computed from the Hermitian, isospectral sqrt(rho) rho~ sqrt(rho).
Spectrum4 r_spectrum(const DensityMatrix &rho);

/// max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)}.
double concurrence(const DensityMatrix &rho);

/// Wootters' optimal decomposition.
///
/// Entangled states get at most rank(rho) branches, each of concurrence C(rho).
/// Separable states of rank >= 2 get four branches of zero concurrence. Throws
/// NumericalFailure if the preconcurrence equalization does not converge.
WoottersDecomposition wootters_decomposition(const DensityMatrix &rho);

}  // namespace epr2

#endif
