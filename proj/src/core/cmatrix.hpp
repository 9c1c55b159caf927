// Copyright 2026 The qbasis authors
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

#ifndef QBASIS_CMATRIX_HPP
#define QBASIS_CMATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace qbasis {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. Small sizes only; everything is value
/// semantic and all operations below are pure.
struct CMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cplx> data;

    CMatrix() = default;
    CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, cplx(0.0, 0.0)) {}

    static CMatrix identity(std::size_t n);

    cplx& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    bool is_square() const { return rows == cols; }

    CMatrix adjoint() const;
    CMatrix transpose() const;
    CMatrix conj() const;

    CMatrix operator*(const CMatrix& rhs) const;
    CMatrix operator+(const CMatrix& rhs) const;
    CMatrix operator-(const CMatrix& rhs) const;
    CMatrix scaled(cplx factor) const;

    std::vector<cplx> apply(const std::vector<cplx>& v) const;

    double frobenius_norm() const;
    double max_abs() const;

    /// True iff ||U^dag U - I||_F <= tol.
    bool is_unitary(double tol) const;
};

/// Default tolerance for unitarity / contraction validation.
inline constexpr double kDefaultTolerance = 1e-10;

/// Determinant via LU with partial pivoting. The 0x0 determinant is 1.
cplx determinant(const CMatrix& a);

struct EigResult {
    std::vector<double> values;  // ascending
    CMatrix vectors;             // column j is the eigenvector of values[j]
};

/// Cyclic Jacobi eigensolver for Hermitian matrices.
EigResult hermitian_eig(const CMatrix& a);

/// Matrix exponential by scaling-and-squaring with a Taylor kernel.
CMatrix expm(const CMatrix& a);

/// Principal matrix logarithm of a unitary matrix; eigenphases on (-pi, pi].
/// The result is anti-Hermitian. Throws invalid_input_error if `u` is not
/// unitary within tol.
CMatrix unitary_log(const CMatrix& u, double tol = kDefaultTolerance);

struct SvdResult {
    CMatrix L;                  // unitary, columns are left singular vectors
    std::vector<double> sigma;  // non-increasing, >= 0
    CMatrix R;                  // unitary; L * diag(sigma) * R == input
};

/// One-sided Jacobi SVD (cyclic sweeps on column pairs). High relative
/// accuracy for small singular values.
SvdResult svd(const CMatrix& a);

/// Spectral norm (largest singular value) via power iteration on A^dag A.
double two_norm(const CMatrix& a);

}  // namespace qbasis

#endif
