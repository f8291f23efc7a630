// Copyright 2026 The steerlab developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Dense complex linear algebra for small Hilbert spaces (dim <= 8):
 * products, tensor products, partial trace/transpose and Hermitian
 * eigendecomposition via cyclic Jacobi sweeps.
 */

#pragma once

#include <complex>
#include <span>
#include <vector>

namespace steerlab {

using Complex = std::complex<double>;

// Default tolerances. All matrices here are 8x8 or smaller and well
// conditioned; every check accepts an override.
inline constexpr double kHermTol = 1e-9;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kEqTol = 1e-12;

/// Square complex matrix with value semantics, row-major storage.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim) : dim_(dim), data_(dim * dim, Complex{0.0, 0.0}) {}

    static ComplexMatrix identity(int dim);
    static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }

    int dim() const { return dim_; }

    Complex& operator()(int r, int c) { return data_[r * dim_ + c]; }
    const Complex& operator()(int r, int c) const { return data_[r * dim_ + c]; }

    std::span<const Complex> data() const { return data_; }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scale);

  private:
    int dim_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(double scale, ComplexMatrix m);

ComplexMatrix dagger(const ComplexMatrix& m);
ComplexMatrix transpose(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);

/// Largest entrywise absolute difference; matrices must share dim.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& m, double tol = kHermTol);
bool is_psd(const ComplexMatrix& m, double tol = kPsdTol);

/// Kronecker product; subsystem of `a` is the slower (more significant) index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace out every subsystem not listed in `keep` (indices into `dims`,
/// ascending). Party 0 is the slowest tensor index.
ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& dims,
                            const std::vector<int>& keep);

/// Transpose one factor of a two-qubit operator (dims [2,2]); `subsystem`
/// is 0 or 1.
ComplexMatrix partial_transpose(const ComplexMatrix& m, int subsystem);

/// Ascending real eigenvalues of a Hermitian matrix. Throws
/// std::invalid_argument when the input fails the hermiticity check.
std::vector<double> eigvals_hermitian(const ComplexMatrix& m, double herm_tol = kHermTol);

struct EigenSystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k is the eigenvector of values[k]
};

/// Full Hermitian eigendecomposition (cyclic Jacobi with complex rotations).
EigenSystem eigh_hermitian(const ComplexMatrix& m, double herm_tol = kHermTol);

// Qubit operators.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Real 3-vector in the Bloch ball; unit vectors parameterize sharp
/// measurement directions.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
    double dot(const BlochVector& other) const;
    BlochVector normalized() const;

    BlochVector operator+(const BlochVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
    BlochVector operator-(const BlochVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
    BlochVector operator*(double s) const { return {x * s, y * s, z * s}; }
    BlochVector operator-() const { return {-x, -y, -z}; }
};

/// n . sigma for a Bloch vector n.
ComplexMatrix bloch_operator(const BlochVector& n);

}  // namespace steerlab
