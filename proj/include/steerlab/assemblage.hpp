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
 * Steering assemblages: the unnormalized two-qubit conditional states that
 * Charlie's measurements prepare on Alice and Bob, and their reconstruction
 * through a parent measurement when Charlie's pair is compatible.
 */

#pragma once

#include <array>

#include "steerlab/measurements.hpp"
#include "steerlab/states.hpp"

namespace steerlab {

/// Unnormalized conditional states sigma_{c|z} on the trusted pair, indexed
/// by Charlie's outcome c in {+1,-1} and setting z in {0,1}.
struct Assemblage {
    // entries[z][outcome_index] with outcome_index 0 -> +1, 1 -> -1.
    std::array<std::array<ComplexMatrix, 2>, 2> entries;

    const ComplexMatrix& entry(int c, int z) const { return entries[z][c > 0 ? 0 : 1]; }
    ComplexMatrix& entry(int c, int z) { return entries[z][c > 0 ? 0 : 1]; }
};

/// sigma_{c|z} = Tr_C[(I x I x M_{c|z}) rho] for a three-qubit state.
Assemblage steer(const DensityMatrix& rho, const std::array<DichotomicPOVM, 2>& charlie);

/// sigma_{c|z} = sum_nu D_nu(c|z) Tr_C[(I x I x G_nu) rho]: the local
/// hidden-state form available whenever Charlie's pair admits a parent.
Assemblage lhs_reconstruct(const DensityMatrix& rho, const ParentPOVM& parent);

struct AssemblageReport {
    double min_eigenvalue = 0.0;         // smallest eigenvalue over all entries
    double no_signaling_residual = 0.0;  // || sum_c sigma_{c|0} - sum_c sigma_{c|1} ||_max
    double trace_residual = 0.0;         // | Tr sum_c sigma_{c|z} - 1 |, worst z
};

AssemblageReport validate_assemblage(const Assemblage& a);

}  // namespace steerlab
