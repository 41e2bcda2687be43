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

#include "epr2/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "epr2/error.h"
#include "epr2/tolerances.h"

namespace epr2 {

namespace {

constexpr int kMaxSweeps = 100;

void check_dim(int n) {
    if (n < 0 || n > CMat::kMaxDim) {
        throw Error(ErrorKind::InvalidParams, "matrix dimension out of range");
    }
}

// Row-major real square matrix used by the Takagi embedding (up to 8x8).
struct RealSquare {
    int n;
    std::vector<double> a;
    double &operator()(int r, int c) {
        return a[r * n + c];
    }
    double operator()(int r, int c) const {
        return a[r * n + c];
    }
};

// Cyclic Jacobi for a real symmetric matrix. Returns eigenvalues; `vecs`
// receives the eigenvectors as columns. Unsorted.
std::vector<double> jacobi_real_symmetric(RealSquare a, RealSquare &vecs) {
    int n = a.n;
    vecs = RealSquare{n, std::vector<double>(n * n, 0.0)};
    for (int k = 0; k < n; k++) {
        vecs(k, k) = 1.0;
    }
    double scale = 0;
    for (double v : a.a) {
        scale += v * v;
    }
    for (int sweep = 0; sweep < kMaxSweeps; sweep++) {
        double off = 0;
        for (int p = 0; p < n; p++) {
            for (int q = p + 1; q < n; q++) {
                off += a(p, q) * a(p, q);
            }
        }
        if (off <= 1e-34 * scale || off == 0) {
            break;
        }
        for (int p = 0; p < n; p++) {
            for (int q = p + 1; q < n; q++) {
                double apq = a(p, q);
                if (apq == 0) {
                    continue;
                }
                double theta = (a(q, q) - a(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (int k = 0; k < n; k++) {
                    double akp = a(k, p);
                    double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; k++) {
                    double apk = a(p, k);
                    double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; k++) {
                    double vkp = vecs(k, p);
                    double vkq = vecs(k, q);
                    vecs(k, p) = c * vkp - s * vkq;
                    vecs(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    std::vector<double> values(n);
    for (int k = 0; k < n; k++) {
        values[k] = a(k, k);
    }
    return values;
}

std::vector<int> descending_order(const std::vector<double> &values) {
    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return values[i] > values[j];
    });
    return order;
}

std::string describe_deviation(const char *what, double dev) {
    std::ostringstream ss;
    ss << what << " (max deviation " << dev << ")";
    return ss.str();
}

}  // namespace

CMat::CMat(int rows, int cols) : rows_(rows), cols_(cols) {
    check_dim(rows);
    check_dim(cols);
}

CMat::CMat(std::initializer_list<std::initializer_list<Complex>> rows) : CMat(static_cast<int>(rows.size()), 0) {
    cols_ = rows.size() == 0 ? 0 : static_cast<int>(rows.begin()->size());
    check_dim(cols_);
    int r = 0;
    for (const auto &row : rows) {
        if (static_cast<int>(row.size()) != cols_) {
            throw Error(ErrorKind::InvalidParams, "ragged matrix literal");
        }
        int c = 0;
        for (const auto &v : row) {
            (*this)(r, c++) = v;
        }
        r++;
    }
}

CMat CMat::identity(int n) {
    CMat m(n, n);
    for (int k = 0; k < n; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

CMat CMat::diagonal(const std::vector<Complex> &entries) {
    int n = static_cast<int>(entries.size());
    CMat m(n, n);
    for (int k = 0; k < n; k++) {
        m(k, k) = entries[k];
    }
    return m;
}

CMat CMat::adjoint() const {
    CMat out(cols_, rows_);
    for (int r = 0; r < rows_; r++) {
        for (int c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

CMat CMat::transpose() const {
    CMat out(cols_, rows_);
    for (int r = 0; r < rows_; r++) {
        for (int c = 0; c < cols_; c++) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

CMat CMat::conj() const {
    CMat out(rows_, cols_);
    for (int r = 0; r < rows_; r++) {
        for (int c = 0; c < cols_; c++) {
            out(r, c) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex CMat::trace() const {
    Complex t = 0;
    for (int k = 0; k < std::min(rows_, cols_); k++) {
        t += (*this)(k, k);
    }
    return t;
}

CMat &CMat::operator+=(const CMat &other) {
    for (int r = 0; r < rows_; r++) {
        for (int c = 0; c < cols_; c++) {
            (*this)(r, c) += other(r, c);
        }
    }
    return *this;
}

CMat &CMat::operator-=(const CMat &other) {
    for (int r = 0; r < rows_; r++) {
        for (int c = 0; c < cols_; c++) {
            (*this)(r, c) -= other(r, c);
        }
    }
    return *this;
}

CMat &CMat::operator*=(Complex scale) {
    for (int r = 0; r < rows_; r++) {
        for (int c = 0; c < cols_; c++) {
            (*this)(r, c) *= scale;
        }
    }
    return *this;
}

double CMat::max_abs_diff(const CMat &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error(ErrorKind::InvalidParams, "dimension mismatch");
    }
    double d = 0;
    for (int r = 0; r < rows_; r++) {
        for (int c = 0; c < cols_; c++) {
            d = std::max(d, std::abs((*this)(r, c) - other(r, c)));
        }
    }
    return d;
}

double CMat::max_abs() const {
    double d = 0;
    for (int r = 0; r < rows_; r++) {
        for (int c = 0; c < cols_; c++) {
            d = std::max(d, std::abs((*this)(r, c)));
        }
    }
    return d;
}

bool CMat::is_hermitian(double tol) const {
    return rows_ == cols_ && max_abs_diff(adjoint()) <= tol;
}

bool CMat::is_symmetric(double tol) const {
    return rows_ == cols_ && max_abs_diff(transpose()) <= tol;
}

bool CMat::is_unitary(double tol) const {
    return rows_ == cols_ && (adjoint() * (*this)).max_abs_diff(identity(rows_)) <= tol;
}

CMat operator+(CMat a, const CMat &b) {
    a += b;
    return a;
}

CMat operator-(CMat a, const CMat &b) {
    a -= b;
    return a;
}

CMat operator*(const CMat &a, const CMat &b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::InvalidParams, "dimension mismatch in product");
    }
    CMat out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); r++) {
        for (int c = 0; c < b.cols(); c++) {
            Complex acc = 0;
            for (int k = 0; k < a.cols(); k++) {
                acc += a(r, k) * b(k, c);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

CMat operator*(Complex s, CMat a) {
    a *= s;
    return a;
}

const CMat &pauli_x() {
    static const CMat m{{0, 1}, {1, 0}};
    return m;
}

const CMat &pauli_y() {
    static const CMat m{{0, Complex(0, -1)}, {Complex(0, 1), 0}};
    return m;
}

const CMat &pauli_z() {
    static const CMat m{{1, 0}, {0, -1}};
    return m;
}

const CMat &identity2() {
    static const CMat m = CMat::identity(2);
    return m;
}

CMat kron(const CMat &a, const CMat &b) {
    if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) {
        throw Error(ErrorKind::InvalidParams, "kron expects 2x2 factors");
    }
    CMat out(4, 4);
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            for (int k = 0; k < 2; k++) {
                for (int l = 0; l < 2; l++) {
                    out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

EigenResult eig_hermitian(const CMat &m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::NotHermitian, "matrix is not square");
    }
    double dev = m.max_abs_diff(m.adjoint());
    if (dev > HERM_TOL) {
        throw Error(ErrorKind::NotHermitian, describe_deviation("matrix is not Hermitian", dev));
    }
    int n = m.rows();
    // Symmetrize so the rotations act on an exactly Hermitian matrix.
    CMat a = 0.5 * (m + m.adjoint());
    CMat v = CMat::identity(n);
    double scale = 0;
    for (int r = 0; r < n; r++) {
        for (int c = 0; c < n; c++) {
            scale += std::norm(a(r, c));
        }
    }

    for (int sweep = 0; sweep < kMaxSweeps; sweep++) {
        double off = 0;
        for (int p = 0; p < n; p++) {
            for (int q = p + 1; q < n; q++) {
                off += std::norm(a(p, q));
            }
        }
        if (off <= 1e-34 * scale || off == 0) {
            break;
        }
        for (int p = 0; p < n; p++) {
            for (int q = p + 1; q < n; q++) {
                double r = std::abs(a(p, q));
                if (r == 0) {
                    continue;
                }
                // Phase on column q makes the pivot real and positive.
                Complex d = std::conj(a(p, q)) / r;
                for (int k = 0; k < n; k++) {
                    a(k, q) *= d;
                    v(k, q) *= d;
                }
                for (int k = 0; k < n; k++) {
                    a(q, k) *= std::conj(d);
                }
                a(q, q) = a(q, q).real();

                double theta = (a(q, q).real() - a(p, p).real()) / (2 * r);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (int k = 0; k < n; k++) {
                    Complex akp = a(k, p);
                    Complex akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; k++) {
                    Complex apk = a(p, k);
                    Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; k++) {
                    Complex vkp = v(k, p);
                    Complex vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<double> raw(n);
    for (int k = 0; k < n; k++) {
        raw[k] = a(k, k).real();
    }
    auto order = descending_order(raw);
    EigenResult result{std::vector<double>(n), CMat(n, n)};
    for (int k = 0; k < n; k++) {
        result.values[k] = raw[order[k]];
        for (int r = 0; r < n; r++) {
            result.vectors(r, k) = v(r, order[k]);
        }
    }
    return result;
}

CMat sqrt_psd(const CMat &m) {
    auto eig = eig_hermitian(m);
    int n = m.rows();
    std::vector<Complex> roots(n);
    for (int k = 0; k < n; k++) {
        double lambda = eig.values[k];
        if (lambda < -SQRT_PSD_TOL) {
            throw Error(ErrorKind::NotPSD, describe_deviation("matrix has a negative eigenvalue", lambda));
        }
        roots[k] = std::sqrt(std::max(lambda, 0.0));
    }
    CMat s = eig.vectors * CMat::diagonal(roots) * eig.vectors.adjoint();
    return 0.5 * (s + s.adjoint());
}

TakagiResult takagi(const CMat &m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::NotSymmetric, "matrix is not square");
    }
    double dev = m.max_abs_diff(m.transpose());
    if (dev > HERM_TOL) {
        throw Error(ErrorKind::NotSymmetric, describe_deviation("matrix is not symmetric", dev));
    }
    int n = m.rows();
    CMat sym = 0.5 * (m + m.transpose());

    // For m = X + iY the real symmetric embedding [[X, Y], [Y, -X]] has
    // eigenpairs (+sigma, (x; y)) exactly when m conj(u) = sigma u with
    // u = x + iy. Distinct-sign eigenspaces are orthogonal, so any real
    // orthonormal basis of the positive part gives orthonormal complex u,
    // degenerate clusters included.
    RealSquare embed{2 * n, std::vector<double>(4 * n * n, 0.0)};
    for (int r = 0; r < n; r++) {
        for (int c = 0; c < n; c++) {
            double x = sym(r, c).real();
            double y = sym(r, c).imag();
            embed(r, c) = x;
            embed(r, c + n) = y;
            embed(r + n, c) = y;
            embed(r + n, c + n) = -x;
        }
    }
    RealSquare vecs{0, {}};
    auto values = jacobi_real_symmetric(embed, vecs);
    auto order = descending_order(values);

    double zero_cut = 1e-13 * std::max(1.0, sym.max_abs());
    TakagiResult result{CMat(n, n), std::vector<double>(n, 0.0)};
    int found = 0;
    for (int idx : order) {
        if (found == n || values[idx] <= zero_cut) {
            break;
        }
        for (int r = 0; r < n; r++) {
            result.unitary(r, found) = Complex(vecs(r, idx), vecs(r + n, idx));
        }
        result.values[found] = values[idx];
        found++;
    }

    // Zero singular values: complete to a unitary with vectors orthogonal to
    // the range of m, which satisfy m conj(u) = 0.
    for (int e = 0; e < n && found < n; e++) {
        std::vector<Complex> u(n, 0.0);
        u[e] = 1.0;
        for (int pass = 0; pass < 2; pass++) {
            for (int k = 0; k < found; k++) {
                Complex proj = 0;
                for (int r = 0; r < n; r++) {
                    proj += std::conj(result.unitary(r, k)) * u[r];
                }
                for (int r = 0; r < n; r++) {
                    u[r] -= proj * result.unitary(r, k);
                }
            }
        }
        double norm = 0;
        for (const auto &z : u) {
            norm += std::norm(z);
        }
        norm = std::sqrt(norm);
        if (norm < 1e-6) {
            continue;
        }
        for (int r = 0; r < n; r++) {
            result.unitary(r, found) = u[r] / norm;
        }
        result.values[found] = 0;
        found++;
    }
    if (found != n) {
        throw Error(ErrorKind::NumericalFailure, "takagi: failed to complete unitary basis");
    }
    return result;
}

}  // namespace epr2
