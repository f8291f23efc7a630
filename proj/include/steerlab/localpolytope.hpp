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
 * Local-model membership for correlation tables, decided by linear
 * programming over the deterministic-strategy vertices of the local
 * polytope. Feasibility is posed as minimization of the infinity-norm
 * reconstruction error over the weight simplex, which doubles as a distance
 * for bisection; the dual prices provide a separating witness when the
 * table lies outside.
 */

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "steerlab/correlations.hpp"

namespace steerlab {

/// Per-party deterministic assignment of an outcome to each setting.
struct DeterministicStrategy {
    std::vector<std::array<int, 2>> outcomes;  // +1/-1 per setting

    CorrelationTable table() const;
};

/// All 4^n deterministic strategies (16 bipartite, 64 tripartite), as tables,
/// in a fixed enumeration order.
std::vector<CorrelationTable> deterministic_vertices(int n_parties);
std::vector<DeterministicStrategy> deterministic_strategies(int n_parties);

struct Witness {
    /// Coefficient per probability entry, flattened as settings * 2^n + outcomes.
    std::vector<double> coeffs;
    double lhv_bound = 0.0;  // max over vertices of coeffs . vertex
    double value = 0.0;      // coeffs . table, exceeds lhv_bound when separating
};

struct LPResult {
    bool feasible = false;
    double distance = 0.0;            // optimal infinity-norm reconstruction error
    std::vector<double> weights;      // convex weights over vertices (feasible case)
    std::optional<Witness> witness;   // present when infeasible
};

/// Membership of `t` in the local polytope within `tol` (infinity norm on
/// probabilities); boundary points count as members. Throws
/// std::runtime_error if the LP hits its iteration cap, so an undecided
/// instance is never mislabeled.
LPResult is_local(const CorrelationTable& t, double tol = 1e-8);

}  // namespace steerlab
