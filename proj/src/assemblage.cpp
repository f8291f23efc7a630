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

#include "steerlab/assemblage.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace steerlab {

namespace {

void require_three_qubits(const DensityMatrix& rho) {
    if (rho.dims() != std::vector<int>{2, 2, 2}) {
        throw std::invalid_argument("assemblage: expected a three-qubit state");
    }
}

ComplexMatrix conditional_state(const DensityMatrix& rho, const ComplexMatrix& charlie_effect) {
    const ComplexMatrix op = kron(ComplexMatrix::identity(4), charlie_effect);
    return partial_trace(op * rho.matrix(), {2, 2, 2}, {0, 1});
}

}  // namespace

Assemblage steer(const DensityMatrix& rho, const std::array<DichotomicPOVM, 2>& charlie) {
    require_three_qubits(rho);
    Assemblage a;
    for (int z = 0; z < 2; ++z) {
        for (int c : {+1, -1}) {
            a.entry(c, z) = conditional_state(rho, charlie[z].effect(c));
        }
    }
    return a;
}

Assemblage lhs_reconstruct(const DensityMatrix& rho, const ParentPOVM& parent) {
    require_three_qubits(rho);
    ComplexMatrix completeness(2);
    for (const auto& g : parent.elements) {
        if (g.dim() != 2 || !is_psd(g, 1e-10)) {
            throw std::invalid_argument("lhs_reconstruct: parent element is not a valid effect");
        }
        completeness += g;
    }
    if (max_abs_diff(completeness, ComplexMatrix::identity(2)) > 1e-10) {
        throw std::invalid_argument("lhs_reconstruct: parent elements do not sum to identity");
    }
    // Conditional states of the parent outcomes; the classical response then
    // mixes them into each sigma_{c|z}.
    std::array<ComplexMatrix, 4> hidden;
    for (int idx = 0; idx < 4; ++idx) {
        hidden[idx] = conditional_state(rho, parent.elements[idx]);
    }
    Assemblage a;
    for (int z = 0; z < 2; ++z) {
        for (int c : {+1, -1}) {
            ComplexMatrix sum(4);
            for (int idx = 0; idx < 4; ++idx) {
                const double d = parent.response(idx, z, c);
                if (d != 0.0) sum += d * hidden[idx];
            }
            a.entry(c, z) = sum;
        }
    }
    return a;
}

AssemblageReport validate_assemblage(const Assemblage& a) {
    AssemblageReport report;
    report.min_eigenvalue = std::numeric_limits<double>::infinity();

    std::array<ComplexMatrix, 2> totals;
    for (int z = 0; z < 2; ++z) {
        totals[z] = ComplexMatrix(4);
        for (int c : {+1, -1}) {
            const ComplexMatrix& sigma = a.entry(c, z);
            totals[z] += sigma;
            const auto vals = eigvals_hermitian(sigma, 1e-8);
            report.min_eigenvalue = std::min(report.min_eigenvalue, vals.front());
        }
        report.trace_residual =
            std::max(report.trace_residual, std::abs(trace(totals[z]).real() - 1.0));
    }
    report.no_signaling_residual = max_abs_diff(totals[0], totals[1]);
    return report;
}

}  // namespace steerlab
