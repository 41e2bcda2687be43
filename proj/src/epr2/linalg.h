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

#ifndef EPR2_LINALG_H
#define EPR2_LINALG_H

#include <array>
#include <complex>
#include <initializer_list>
#include <vector>

namespace epr2 {

using Complex = std::complex<double>;

/// Dense complex matrix with at most 4 rows and 4 columns, stored row-major.
///
/// Everything in this library lives on one or two qubits, so storage is a
/// fixed inline array and no heap allocation ever happens.
class CMat {
   public:
    static constexpr int kMaxDim = 4;

    CMat() : CMat(0, 0) {
    }
    CMat(int rows, int cols);
    CMat(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMat identity(int n);
    static CMat diagonal(const std::vector<Complex> &entries);

    int rows() const {
        return rows_;
    }
    int cols() const {
        return cols_;
    }

    Complex &operator()(int r, int c) {
        return data_[r * kMaxDim + c];
    }
    const Complex &operator()(int r, int c) const {
        return data_[r * kMaxDim + c];
    }

    CMat adjoint() const;
    CMat transpose() const;
    CMat conj() const;
    Complex trace() const;

    CMat &operator+=(const CMat &other);
    CMat &operator-=(const CMat &other);
    CMat &operator*=(Complex scale);

    /// Largest |a_ij - b_ij|; dimensions must agree.
    double max_abs_diff(const CMat &other) const;
    double max_abs() const;
    bool is_hermitian(double tol) const;
    bool is_symmetric(double tol) const;
    bool is_unitary(double tol) const;

   private:
    int rows_;
    int cols_;
    std::array<Complex, kMaxDim * kMaxDim> data_{};
};

CMat operator+(CMat a, const CMat &b);
CMat operator-(CMat a, const CMat &b);
CMat operator*(const CMat &a, const CMat &b);
CMat operator*(Complex s, CMat a);

/// Pauli matrices and the 2x2 identity.
const CMat &pauli_x();
const CMat &pauli_y();
const CMat &pauli_z();
const CMat &identity2();

/// Kronecker product of two 2x2 matrices in basis order |00>,|01>,|10>,|11>.
CMat kron(const CMat &a, const CMat &b);

struct EigenResult {
    /// Real eigenvalues in descending order.
    std::vector<double> values;
    /// Orthonormal eigenvectors stored as columns, matching `values`.
    CMat vectors;
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Throws NotHermitian if m deviates from m^dagger by more than HERM_TOL.
EigenResult eig_hermitian(const CMat &m);

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [-SQRT_PSD_TOL, 0) are clamped to zero; anything more
/// negative throws NotPSD.
CMat sqrt_psd(const CMat &m);

struct TakagiResult {
    CMat unitary;
    /// Nonnegative, descending.
    std::vector<double> values;
};

/// Takagi factorization m = U diag(values) U^T of a complex symmetric matrix.
/// Throws NotSymmetric if m deviates from m^T by more than HERM_TOL.
TakagiResult takagi(const CMat &m);

}  // namespace epr2

#endif
