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

#include "steerlab/states.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace steerlab {

namespace {

ComplexMatrix projector_from_amplitudes(const std::vector<Complex>& amps) {
    const int d = static_cast<int>(amps.size());
    ComplexMatrix m(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = amps[i] * std::conj(amps[j]);
    return m;
}

// Bell projectors in the |00>,|01>,|10>,|11> basis.
ComplexMatrix bell_projector(StateId id) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (id) {
        case StateId::BellPhiPlus:
        case StateId::NoisyBellPhiPlus:
            return projector_from_amplitudes({r, 0.0, 0.0, r});
        case StateId::BellPhiMinus:
        case StateId::NoisyBellPhiMinus:
            return projector_from_amplitudes({r, 0.0, 0.0, -r});
        case StateId::BellPsiPlus:
        case StateId::NoisyBellPsiPlus:
            return projector_from_amplitudes({0.0, r, r, 0.0});
        case StateId::Singlet:
        case StateId::BellPsiMinus:
        case StateId::Werner:
        case StateId::NoisyBellPsiMinus:
            // |Psi-> = (|01> - |10>)/sqrt(2)
            return projector_from_amplitudes({0.0, r, -r, 0.0});
        default:
            throw std::logic_error("bell_projector: not a bipartite id");
    }
}

ComplexMatrix ghz_projector() {
    const double r = 1.0 / std::sqrt(2.0);
    return projector_from_amplitudes({r, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, r});
}

ComplexMatrix mix_with_white_noise(const ComplexMatrix& pure, double v) {
    const int d = pure.dim();
    return v * pure + ((1.0 - v) / d) * ComplexMatrix::identity(d);
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<int> dims, double psd_tol,
                             double trace_tol)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
    int total = 1;
    for (int d : dims_) total *= d;
    if (total != matrix_.dim()) {
        throw std::invalid_argument("DensityMatrix: dims do not factor the matrix dimension");
    }
    if (!is_hermitian(matrix_, psd_tol)) {
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    }
    if (std::abs(trace(matrix_).real() - 1.0) > trace_tol ||
        std::abs(trace(matrix_).imag()) > trace_tol) {
        throw std::invalid_argument("DensityMatrix: trace is not 1");
    }
    if (!is_psd(matrix_, psd_tol)) {
        throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
    }
}

StateId parse_state_id(std::string_view name) {
    if (name == "singlet") return StateId::Singlet;
    if (name == "werner") return StateId::Werner;
    if (name == "ghz") return StateId::Ghz;
    if (name == "noisy_ghz") return StateId::NoisyGhz;
    if (name == "bell_phi_plus") return StateId::BellPhiPlus;
    if (name == "bell_phi_minus") return StateId::BellPhiMinus;
    if (name == "bell_psi_plus") return StateId::BellPsiPlus;
    if (name == "bell_psi_minus") return StateId::BellPsiMinus;
    if (name == "noisy_bell_phi_plus") return StateId::NoisyBellPhiPlus;
    if (name == "noisy_bell_phi_minus") return StateId::NoisyBellPhiMinus;
    if (name == "noisy_bell_psi_plus") return StateId::NoisyBellPsiPlus;
    if (name == "noisy_bell_psi_minus") return StateId::NoisyBellPsiMinus;
    throw std::invalid_argument("unknown state id: " + std::string(name));
}

std::string to_string(StateId id) {
    switch (id) {
        case StateId::Singlet: return "singlet";
        case StateId::Werner: return "werner";
        case StateId::Ghz: return "ghz";
        case StateId::NoisyGhz: return "noisy_ghz";
        case StateId::BellPhiPlus: return "bell_phi_plus";
        case StateId::BellPhiMinus: return "bell_phi_minus";
        case StateId::BellPsiPlus: return "bell_psi_plus";
        case StateId::BellPsiMinus: return "bell_psi_minus";
        case StateId::NoisyBellPhiPlus: return "noisy_bell_phi_plus";
        case StateId::NoisyBellPhiMinus: return "noisy_bell_phi_minus";
        case StateId::NoisyBellPsiPlus: return "noisy_bell_psi_plus";
        case StateId::NoisyBellPsiMinus: return "noisy_bell_psi_minus";
    }
    throw std::logic_error("unreachable");
}

std::vector<std::string> state_id_names() {
    return {"singlet",
            "werner",
            "ghz",
            "noisy_ghz",
            "bell_phi_plus",
            "bell_phi_minus",
            "bell_psi_plus",
            "bell_psi_minus",
            "noisy_bell_phi_plus",
            "noisy_bell_phi_minus",
            "noisy_bell_psi_plus",
            "noisy_bell_psi_minus"};
}

bool state_needs_visibility(StateId id) {
    switch (id) {
        case StateId::Werner:
        case StateId::NoisyGhz:
        case StateId::NoisyBellPhiPlus:
        case StateId::NoisyBellPhiMinus:
        case StateId::NoisyBellPsiPlus:
        case StateId::NoisyBellPsiMinus:
            return true;
        default:
            return false;
    }
}

MadeState make_state(StateId id, std::optional<double> v) {
    const bool noisy = state_needs_visibility(id);
    if (noisy) {
        if (!v.has_value()) {
            throw std::invalid_argument("state '" + to_string(id) + "' requires a visibility");
        }
        if (*v < 0.0 || *v > 1.0) {
            throw std::domain_error("visibility must lie in [0,1]");
        }
    }

    ComplexMatrix mat;
    std::vector<int> dims;
    switch (id) {
        case StateId::Ghz:
            mat = ghz_projector();
            dims = {2, 2, 2};
            break;
        case StateId::NoisyGhz:
            mat = mix_with_white_noise(ghz_projector(), *v);
            dims = {2, 2, 2};
            break;
        case StateId::Werner:
        case StateId::NoisyBellPhiPlus:
        case StateId::NoisyBellPhiMinus:
        case StateId::NoisyBellPsiPlus:
        case StateId::NoisyBellPsiMinus:
            mat = mix_with_white_noise(bell_projector(id), *v);
            dims = {2, 2};
            break;
        default:
            mat = bell_projector(id);
            dims = {2, 2};
            break;
    }

    return MadeState{DensityMatrix(std::move(mat), std::move(dims)),
                     /*visibility_ignored=*/!noisy && v.has_value()};
}

PptResult is_entangled_ppt(const DensityMatrix& rho, double tol) {
    if (rho.dims() != std::vector<int>{2, 2}) {
        throw std::invalid_argument("is_entangled_ppt supports two-qubit states only");
    }
    const ComplexMatrix pt = partial_transpose(rho.matrix(), 1);
    PptResult out;
    for (double lambda : eigvals_hermitian(pt)) {
        if (lambda < -tol) {
            out.entangled = true;
            out.negativity += -lambda;
        }
    }
    return out;
}

}  // namespace steerlab
