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
 * Constructors for the states used throughout the project (Bell states,
 * Werner states, GHZ and its white-noise mixtures) plus the PPT
 * entanglement test for two qubits.
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steerlab/linalg.hpp"

namespace steerlab {

/// PSD, unit-trace operator tagged with its tensor factorization.
/// Computational basis fixed as |00..0>, |00..1>, ...; party 0 (Alice) is
/// the slowest index.
class DensityMatrix {
  public:
    DensityMatrix(ComplexMatrix matrix, std::vector<int> dims, double psd_tol = kPsdTol,
                  double trace_tol = kEqTol);

    const ComplexMatrix& matrix() const { return matrix_; }
    const std::vector<int>& dims() const { return dims_; }
    int n_parties() const { return static_cast<int>(dims_.size()); }

  private:
    ComplexMatrix matrix_;
    std::vector<int> dims_;
};

enum class StateId {
    Singlet,  // |Psi-><Psi-|, alias of BellPsiMinus
    Werner,
    Ghz,
    NoisyGhz,
    BellPhiPlus,
    BellPhiMinus,
    BellPsiPlus,
    BellPsiMinus,
    NoisyBellPhiPlus,
    NoisyBellPhiMinus,
    NoisyBellPsiPlus,
    NoisyBellPsiMinus,
};

StateId parse_state_id(std::string_view name);
std::string to_string(StateId id);
std::vector<std::string> state_id_names();

/// True for ids whose construction consumes a visibility parameter.
bool state_needs_visibility(StateId id);

struct MadeState {
    DensityMatrix state;
    // Set when a visibility was passed for a pure (noise-free) id and ignored.
    bool visibility_ignored = false;
};

/// Build a named state. Noisy ids (werner, noisy_ghz, noisy_bell_*) require
/// v in [0,1] and mix the pure state with white noise as
/// v |psi><psi| + (1-v) I/d. Throws std::domain_error for v outside [0,1]
/// and std::invalid_argument when a required v is missing.
MadeState make_state(StateId id, std::optional<double> v = std::nullopt);

struct PptResult {
    bool entangled = false;
    double negativity = 0.0;  // sum of |negative eigenvalues| of the partial transpose
};

/// Peres-Horodeki test, exact for two qubits: entangled iff the partial
/// transpose has an eigenvalue below -tol.
PptResult is_entangled_ppt(const DensityMatrix& rho, double tol = kEqTol);

}  // namespace steerlab
