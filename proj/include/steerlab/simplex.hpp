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
 * Self-contained dense two-phase simplex with Bland's rule; problem sizes
 * stay below ~130 constraints x ~70 variables. Returns primal and dual
 * solutions.
 */

#pragma once

#include <vector>

namespace steerlab {

enum class Rel { LE, GE, EQ };

/// min objective . x subject to rows[i] . x (rel[i]) rhs[i], x >= 0.
struct LinearProgram {
    int n_vars = 0;
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    std::vector<Rel> rel;
    std::vector<double> objective;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpSolution {
    LpStatus status = LpStatus::IterationLimit;
    double objective = 0.0;
    std::vector<double> x;
    /// One multiplier per input row, oriented against the rows as given:
    /// at optimality objective == dual . rhs and, for every variable j,
    /// objective[j] >= sum_i dual[i] * rows[i][j].
    std::vector<double> dual;
};

LpSolution solve_lp(const LinearProgram& lp, long max_iterations = 200000);

}  // namespace steerlab
