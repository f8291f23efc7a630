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

#include "steerlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace steerlab {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("matrix dimension mismatch: " + std::to_string(a.dim()) +
                                    " vs " + std::to_string(b.dim()));
    }
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_same_dim(*this, rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_same_dim(*this, rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (auto& v : data_) v *= scale;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    require_same_dim(lhs, rhs);
    const int n = lhs.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex lik = lhs(i, k);
            if (lik == Complex{0.0, 0.0}) continue;
            for (int j = 0; j < n; ++j) out(i, j) += lik * rhs(k, j);
        }
    }
    return out;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }
ComplexMatrix operator*(double scale, ComplexMatrix m) { return m *= Complex{scale, 0.0}; }

ComplexMatrix dagger(const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out(i, j) = std::conj(m(j, i));
    return out;
}

ComplexMatrix transpose(const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out(i, j) = m(j, i);
    return out;
}

Complex trace(const ComplexMatrix& m) {
    Complex t{0.0, 0.0};
    for (int i = 0; i < m.dim(); ++i) t += m(i, i);
    return t;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    double worst = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    for (int i = 0; i < m.dim(); ++i)
        for (int j = i; j < m.dim(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    return true;
}

bool is_psd(const ComplexMatrix& m, double tol) {
    if (!is_hermitian(m, tol)) return false;
    const auto vals = eigvals_hermitian(m, tol);
    return vals.empty() || vals.front() >= -tol;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int na = a.dim();
    const int nb = b.dim();
    ComplexMatrix out(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{0.0, 0.0}) continue;
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& dims,
                            const std::vector<int>& keep) {
    const int n = static_cast<int>(dims.size());
    int total = 1;
    for (int d : dims) total *= d;
    if (total != m.dim()) {
        throw std::invalid_argument("partial_trace: product of dims does not match matrix dim");
    }
    for (int k : keep) {
        if (k < 0 || k >= n) throw std::invalid_argument("partial_trace: keep index out of range");
    }

    std::vector<bool> kept(n, false);
    for (int k : keep) kept[k] = true;

    int keep_dim = 1;
    int traced_dim = 1;
    for (int s = 0; s < n; ++s) (kept[s] ? keep_dim : traced_dim) *= dims[s];

    // Strides of each subsystem in the full index; subsystem 0 is slowest.
    std::vector<int> stride(n, 1);
    for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];

    // Map a (kept multi-index, traced multi-index) pair to the full index,
    // preserving the original subsystem order within each group.
    auto full_index = [&](int kidx, int tidx) {
        int full = 0;
        for (int s = n - 1; s >= 0; --s) {
            const int d = dims[s];
            if (kept[s]) {
                full += (kidx % d) * stride[s];
                kidx /= d;
            } else {
                full += (tidx % d) * stride[s];
                tidx /= d;
            }
        }
        return full;
    };

    ComplexMatrix out(keep_dim);
    for (int r = 0; r < keep_dim; ++r)
        for (int c = 0; c < keep_dim; ++c) {
            Complex sum{0.0, 0.0};
            for (int t = 0; t < traced_dim; ++t) sum += m(full_index(r, t), full_index(c, t));
            out(r, c) = sum;
        }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, int subsystem) {
    if (m.dim() != 4) throw std::invalid_argument("partial_transpose: expected a 4x4 matrix");
    if (subsystem != 0 && subsystem != 1) {
        throw std::invalid_argument("partial_transpose: subsystem must be 0 or 1");
    }
    ComplexMatrix out(4);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int ap = 0; ap < 2; ++ap)
                for (int bp = 0; bp < 2; ++bp) {
                    // transpose swaps the row/column index of one factor
                    const int r = (subsystem == 0) ? ap * 2 + b : a * 2 + bp;
                    const int c = (subsystem == 0) ? a * 2 + bp : ap * 2 + b;
                    out(r, c) = m(a * 2 + b, ap * 2 + bp);
                }
    return out;
}

namespace {

// One cyclic Jacobi pass over all off-diagonal pairs of a Hermitian matrix;
// rotations are accumulated into `vecs`.
double jacobi_sweep(ComplexMatrix& a, ComplexMatrix& vecs) {
    const int n = a.dim();
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const Complex apq = a(p, q);
            const double mag = std::abs(apq);
            if (mag < 1e-300) continue;
            const double app = a(p, p).real();
            const double aqq = a(q, q).real();
            // Phase-carrying Jacobi rotation J = [[c, -s*],[s, c]] with
            // s = sin(theta) e^{-i phi}, phi = arg(a_pq); J^dag A J zeroes
            // the (p,q) element.
            const Complex phase = apq / mag;
            const double theta = 0.5 * std::atan2(2.0 * mag, app - aqq);
            const double c = std::cos(theta);
            const Complex s = std::sin(theta) * std::conj(phase);

            for (int k = 0; k < n; ++k) {
                const Complex akp = a(k, p);
                const Complex akq = a(k, q);
                a(k, p) = c * akp + s * akq;
                a(k, q) = -std::conj(s) * akp + c * akq;
            }
            for (int k = 0; k < n; ++k) {
                const Complex apk = a(p, k);
                const Complex aqk = a(q, k);
                a(p, k) = c * apk + std::conj(s) * aqk;
                a(q, k) = -s * apk + c * aqk;
            }
            for (int k = 0; k < n; ++k) {
                const Complex vkp = vecs(k, p);
                const Complex vkq = vecs(k, q);
                vecs(k, p) = c * vkp + s * vkq;
                vecs(k, q) = -std::conj(s) * vkp + c * vkq;
            }
        }
    }
    for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    return std::sqrt(off);
}

}  // namespace

EigenSystem eigh_hermitian(const ComplexMatrix& m, double herm_tol) {
    if (!is_hermitian(m, herm_tol)) {
        throw std::invalid_argument("eigh_hermitian: matrix is not Hermitian within tolerance");
    }
    const int n = m.dim();
    ComplexMatrix a = m;
    // Iterate on the exactly Hermitian part of the input.
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    ComplexMatrix vecs = ComplexMatrix::identity(n);

    double scale = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
    if (scale == 0.0) scale = 1.0;

    for (int sweep = 0; sweep < 64; ++sweep) {
        if (jacobi_sweep(a, vecs) < 1e-15 * scale) break;
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenSystem out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (int r = 0; r < n; ++r) out.vectors(r, k) = vecs(r, order[k]);
    }
    return out;
}

std::vector<double> eigvals_hermitian(const ComplexMatrix& m, double herm_tol) {
    return eigh_hermitian(m, herm_tol).values;
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2);
    m(0, 1) = Complex{0.0, -1.0};
    m(1, 0) = Complex{0.0, 1.0};
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double BlochVector::dot(const BlochVector& other) const {
    return x * other.x + y * other.y + z * other.z;
}

BlochVector BlochVector::normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::domain_error("cannot normalize the zero Bloch vector");
    return {x / n, y / n, z / n};
}

ComplexMatrix bloch_operator(const BlochVector& n) {
    ComplexMatrix m(2);
    m(0, 0) = Complex{n.z, 0.0};
    m(0, 1) = Complex{n.x, -n.y};
    m(1, 0) = Complex{n.x, n.y};
    m(1, 1) = Complex{-n.z, 0.0};
    return m;
}

}  // namespace steerlab
