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

#include "steerlab/measurements.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace steerlab {

namespace {

ComplexMatrix bloch_effect(const BlochVector& m, int sign) {
    ComplexMatrix e = ComplexMatrix::identity(2);
    e += (sign > 0 ? 1.0 : -1.0) * bloch_operator(m);
    return 0.5 * e;
}

}  // namespace

DichotomicPOVM DichotomicPOVM::projective(const BlochVector& direction, double tol) {
    if (std::abs(direction.norm() - 1.0) > tol) {
        throw std::invalid_argument("projective: direction must be a unit Bloch vector");
    }
    return DichotomicPOVM(bloch_effect(direction, +1), bloch_effect(direction, -1),
                          UnbiasedParam{direction, 1.0});
}

DichotomicPOVM DichotomicPOVM::noisy(const BlochVector& direction, double eta, double tol) {
    if (std::abs(direction.norm() - 1.0) > tol) {
        throw std::invalid_argument("noisy: direction must be a unit Bloch vector");
    }
    if (eta < 0.0 || eta > 1.0) {
        throw std::domain_error("noisy: sharpness eta must lie in [0,1]");
    }
    const BlochVector m = direction * eta;
    return DichotomicPOVM(bloch_effect(m, +1), bloch_effect(m, -1),
                          UnbiasedParam{direction, eta});
}

DichotomicPOVM DichotomicPOVM::from_effects(ComplexMatrix plus, ComplexMatrix minus, double tol) {
    if (plus.dim() != 2 || minus.dim() != 2) {
        throw std::invalid_argument("from_effects: effects must be 2x2");
    }
    if (!is_psd(plus, tol) || !is_psd(minus, tol)) {
        throw std::invalid_argument("from_effects: effects must be positive semidefinite");
    }
    if (max_abs_diff(plus + minus, ComplexMatrix::identity(2)) > kEqTol * 10) {
        throw std::invalid_argument("from_effects: effects must sum to the identity");
    }
    return DichotomicPOVM(std::move(plus), std::move(minus), std::nullopt);
}

const ComplexMatrix& DichotomicPOVM::effect(int outcome) const {
    if (outcome == +1) return plus_;
    if (outcome == -1) return minus_;
    throw std::invalid_argument("effect: outcome must be +1 or -1");
}

BlochVector DichotomicPOVM::bloch(double tol) const {
    if (std::abs(trace(plus_).real() - 1.0) > tol) {
        throw std::invalid_argument("biased POVM: Tr(E+) != 1, Bloch form unavailable");
    }
    return {trace(plus_ * pauli_x()).real(), trace(plus_ * pauli_y()).real(),
            trace(plus_ * pauli_z()).real()};
}

BuschCheck busch_criterion(const DichotomicPOVM& p0, const DichotomicPOVM& p1) {
    const BlochVector m0 = p0.bloch();
    const BlochVector m1 = p1.bloch();
    BuschCheck out;
    out.lhs = (m0 + m1).norm() + (m0 - m1).norm();
    out.compatible = out.lhs <= BuschCheck::bound + kEqTol;
    return out;
}

bool jointly_measurable(const DichotomicPOVM& p0, const DichotomicPOVM& p1) {
    return busch_criterion(p0, p1).compatible;
}

double ParentPOVM::response(int idx, int z, int c) const {
    if (idx < 0 || idx > 3 || (z != 0 && z != 1) || (c != +1 && c != -1)) {
        throw std::invalid_argument("response: bad index");
    }
    // Deterministic readout: z=0 reports mu, z=1 reports nu.
    const int mu = (idx & 2) ? -1 : +1;
    const int nu = (idx & 1) ? -1 : +1;
    const int reported = (z == 0) ? mu : nu;
    return reported == c ? 1.0 : 0.0;
}

ParentPOVM parent_povm(const DichotomicPOVM& p0, const DichotomicPOVM& p1) {
    const BlochVector m0 = p0.bloch();
    const BlochVector m1 = p1.bloch();
    const double eta0 = m0.norm();
    const double eta1 = m1.norm();
    if (std::abs(eta0 - eta1) > 1e-9) {
        throw std::invalid_argument("parent_povm: pair must have equal sharpness");
    }
    if (eta0 > 1e-12 && std::abs(m0.dot(m1)) > 1e-9 * eta0 * eta1) {
        throw std::invalid_argument("parent_povm: pair must have orthogonal directions");
    }
    if (!jointly_measurable(p0, p1)) {
        throw std::runtime_error("parent_povm: pair is not jointly measurable");
    }

    ParentPOVM parent;
    for (int mu : {+1, -1}) {
        for (int nu : {+1, -1}) {
            const BlochVector v = m0 * static_cast<double>(mu) + m1 * static_cast<double>(nu);
            ComplexMatrix g = ComplexMatrix::identity(2) + bloch_operator(v);
            parent.elements[ParentPOVM::index(mu, nu)] = 0.25 * g;
        }
    }
    return parent;
}

double parent_reconstruction_residual(const ParentPOVM& parent, const DichotomicPOVM& p0,
                                      const DichotomicPOVM& p1) {
    double worst = 0.0;
    for (int z : {0, 1}) {
        const DichotomicPOVM& target = (z == 0) ? p0 : p1;
        for (int c : {+1, -1}) {
            ComplexMatrix sum(2);
            for (int idx = 0; idx < 4; ++idx) {
                sum += parent.response(idx, z, c) * parent.elements[idx];
            }
            worst = std::max(worst, max_abs_diff(sum, target.effect(c)));
        }
    }
    return worst;
}

double noise_transfer_check(const DensityMatrix& rho, const BlochVector& alice_dir,
                            double alice_eta, const BlochVector& bob_dir) {
    if (rho.dims() != std::vector<int>{2, 2}) {
        throw std::invalid_argument("noise_transfer_check: expected a two-qubit state");
    }
    const DichotomicPOVM alice = DichotomicPOVM::noisy(alice_dir, alice_eta);
    const DichotomicPOVM alice_sharp = DichotomicPOVM::projective(alice_dir);
    const DichotomicPOVM bob = DichotomicPOVM::projective(bob_dir);

    const ComplexMatrix rho_b = partial_trace(rho.matrix(), {2, 2}, {1});
    const ComplexMatrix noised =
        alice_eta * rho.matrix() +
        (1.0 - alice_eta) * kron(0.5 * ComplexMatrix::identity(2), rho_b);

    double worst = 0.0;
    for (int a : {+1, -1}) {
        for (int b : {+1, -1}) {
            const double lhs = trace(rho.matrix() * kron(alice.effect(a), bob.effect(b))).real();
            const double rhs = trace(noised * kron(alice_sharp.effect(a), bob.effect(b))).real();
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

}  // namespace steerlab
