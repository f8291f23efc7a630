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

#include "steerlab/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace steerlab {

namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kFeasEps = 1e-9;

struct Tableau {
    int m = 0;        // rows
    int n_total = 0;  // structural + slack/surplus + artificial columns
    std::vector<std::vector<double>> a;  // m x n_total
    std::vector<double> b;               // m
    std::vector<int> basis;              // basic column per row
    std::vector<bool> is_artificial;     // per column
    std::vector<int> ident_col;          // per row: its initial identity column
    std::vector<double> row_flip;        // +1/-1 per input row (negated rows)

    // Reduced costs r_j = c_j - cB . B^-1 A_j for a cost vector c.
    std::vector<double> reduced_costs(const std::vector<double>& c) const {
        std::vector<double> r = c;
        for (int i = 0; i < m; ++i) {
            const double cb = c[basis[i]];
            if (cb == 0.0) continue;
            for (int j = 0; j < n_total; ++j) r[j] -= cb * a[i][j];
        }
        return r;
    }

    void pivot(int row, int col) {
        const double p = a[row][col];
        for (int j = 0; j < n_total; ++j) a[row][j] /= p;
        b[row] /= p;
        a[row][col] = 1.0;  // cancel roundoff on the pivot itself
        for (int i = 0; i < m; ++i) {
            if (i == row) continue;
            const double f = a[i][col];
            if (f == 0.0) continue;
            for (int j = 0; j < n_total; ++j) a[i][j] -= f * a[row][j];
            a[i][col] = 0.0;
            b[i] -= f * b[row];
        }
        basis[row] = col;
    }
};

// Bland's rule: entering column is the lowest-index one with a negative
// reduced cost; the leaving row breaks ratio ties by the smallest basic
// variable index. Returns false at optimality, throws on iteration cap.
enum class PhaseOutcome { Optimal, Unbounded, IterationLimit };

PhaseOutcome run_phase(Tableau& t, const std::vector<double>& cost,
                       const std::vector<bool>& allowed, long& iterations_left) {
    while (true) {
        const std::vector<double> r = t.reduced_costs(cost);
        int enter = -1;
        for (int j = 0; j < t.n_total; ++j) {
            if (!allowed[j]) continue;
            if (r[j] < -kPivotEps) {
                enter = j;
                break;
            }
        }
        if (enter < 0) return PhaseOutcome::Optimal;

        int leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < t.m; ++i) {
            if (t.a[i][enter] <= kPivotEps) continue;
            const double ratio = t.b[i] / t.a[i][enter];
            if (ratio < best_ratio - 1e-12 ||
                (ratio < best_ratio + 1e-12 && (leave < 0 || t.basis[i] < t.basis[leave]))) {
                best_ratio = ratio;
                leave = i;
            }
        }
        if (leave < 0) return PhaseOutcome::Unbounded;

        t.pivot(leave, enter);
        if (--iterations_left <= 0) return PhaseOutcome::IterationLimit;
    }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, long max_iterations) {
    const int m = static_cast<int>(lp.rows.size());
    const int n = lp.n_vars;
    if (static_cast<int>(lp.rhs.size()) != m || static_cast<int>(lp.rel.size()) != m ||
        static_cast<int>(lp.objective.size()) != n) {
        throw std::invalid_argument("solve_lp: inconsistent program sizes");
    }

    // Count extra columns after normalizing every rhs to be nonnegative.
    int n_slack = 0;
    int n_art = 0;
    std::vector<Rel> rel(m);
    for (int i = 0; i < m; ++i) {
        rel[i] = lp.rel[i];
        if (lp.rhs[i] < 0.0 && rel[i] != Rel::EQ) rel[i] = (rel[i] == Rel::LE) ? Rel::GE : Rel::LE;
        if (rel[i] == Rel::LE) {
            ++n_slack;
        } else if (rel[i] == Rel::GE) {
            ++n_slack;  // surplus
            ++n_art;
        } else {
            ++n_art;
        }
    }

    Tableau t;
    t.m = m;
    t.n_total = n + n_slack + n_art;
    t.a.assign(m, std::vector<double>(t.n_total, 0.0));
    t.b.assign(m, 0.0);
    t.basis.assign(m, -1);
    t.is_artificial.assign(t.n_total, false);
    t.ident_col.assign(m, -1);
    t.row_flip.assign(m, 1.0);

    int next_slack = n;
    int next_art = n + n_slack;
    for (int i = 0; i < m; ++i) {
        const double flip = (lp.rhs[i] < 0.0) ? -1.0 : 1.0;
        t.row_flip[i] = flip;
        for (int j = 0; j < n; ++j) t.a[i][j] = flip * lp.rows[i][j];
        t.b[i] = flip * lp.rhs[i];

        if (rel[i] == Rel::LE) {
            t.a[i][next_slack] = 1.0;
            t.ident_col[i] = next_slack;
            t.basis[i] = next_slack;
            ++next_slack;
        } else if (rel[i] == Rel::GE) {
            t.a[i][next_slack] = -1.0;
            ++next_slack;
            t.a[i][next_art] = 1.0;
            t.is_artificial[next_art] = true;
            t.ident_col[i] = next_art;
            t.basis[i] = next_art;
            ++next_art;
        } else {
            t.a[i][next_art] = 1.0;
            t.is_artificial[next_art] = true;
            t.ident_col[i] = next_art;
            t.basis[i] = next_art;
            ++next_art;
        }
    }

    LpSolution out;
    long iterations_left = max_iterations;

    // Phase 1: minimize the sum of artificials.
    if (n_art > 0) {
        std::vector<double> cost1(t.n_total, 0.0);
        for (int j = 0; j < t.n_total; ++j)
            if (t.is_artificial[j]) cost1[j] = 1.0;
        std::vector<bool> allowed(t.n_total, true);

        const PhaseOutcome ph1 = run_phase(t, cost1, allowed, iterations_left);
        if (ph1 == PhaseOutcome::IterationLimit) {
            out.status = LpStatus::IterationLimit;
            return out;
        }
        double infeas = 0.0;
        for (int i = 0; i < m; ++i)
            if (t.is_artificial[t.basis[i]]) infeas += t.b[i];
        if (infeas > kFeasEps) {
            out.status = LpStatus::Infeasible;
            return out;
        }
        // Pivot lingering zero-valued artificials out where possible.
        for (int i = 0; i < m; ++i) {
            if (!t.is_artificial[t.basis[i]]) continue;
            for (int j = 0; j < t.n_total; ++j) {
                if (t.is_artificial[j]) continue;
                if (std::abs(t.a[i][j]) > kPivotEps) {
                    t.pivot(i, j);
                    break;
                }
            }
        }
    }

    // Phase 2: the real objective; artificials may not re-enter.
    std::vector<double> cost2(t.n_total, 0.0);
    for (int j = 0; j < n; ++j) cost2[j] = lp.objective[j];
    std::vector<bool> allowed(t.n_total, true);
    for (int j = 0; j < t.n_total; ++j)
        if (t.is_artificial[j]) allowed[j] = false;

    const PhaseOutcome ph2 = run_phase(t, cost2, allowed, iterations_left);
    if (ph2 == PhaseOutcome::IterationLimit) {
        out.status = LpStatus::IterationLimit;
        return out;
    }
    if (ph2 == PhaseOutcome::Unbounded) {
        out.status = LpStatus::Unbounded;
        return out;
    }

    out.status = LpStatus::Optimal;
    out.x.assign(n, 0.0);
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] < n) out.x[t.basis[i]] = t.b[i];
    }
    out.objective = 0.0;
    for (int j = 0; j < n; ++j) out.objective += lp.objective[j] * out.x[j];

    // Duals from the identity-column block: y = cB . B^-1, where column
    // B^-1 e_i sits in the tableau under the row's initial identity column.
    out.dual.assign(m, 0.0);
    for (int i = 0; i < m; ++i) {
        double y = 0.0;
        for (int r = 0; r < m; ++r) y += cost2[t.basis[r]] * t.a[r][t.ident_col[i]];
        out.dual[i] = y * t.row_flip[i];
    }
    return out;
}

}  // namespace steerlab
