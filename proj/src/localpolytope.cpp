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

#include "steerlab/localpolytope.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "steerlab/simplex.hpp"

namespace steerlab {

CorrelationTable DeterministicStrategy::table() const {
    const int n = static_cast<int>(outcomes.size());
    CorrelationTable t(n);
    for (int s = 0; s < t.n_combos(); ++s) {
        int o = 0;
        for (int p = 0; p < n; ++p) {
            const int x = (s >> (n - 1 - p)) & 1;
            o = (o << 1) | CorrelationTable::outcome_bit(outcomes[p][x]);
        }
        t.at(s, o) = 1.0;
    }
    return t;
}

std::vector<DeterministicStrategy> deterministic_strategies(int n_parties) {
    if (n_parties != 2 && n_parties != 3) {
        throw std::invalid_argument("deterministic_strategies: 2 or 3 parties only");
    }
    std::vector<DeterministicStrategy> out;
    const int per_party = 4;  // outcome choice per setting
    int total = 1;
    for (int p = 0; p < n_parties; ++p) total *= per_party;
    out.reserve(total);
    for (int code = 0; code < total; ++code) {
        DeterministicStrategy s;
        int rest = code;
        for (int p = 0; p < n_parties; ++p) {
            const int c = rest % per_party;
            rest /= per_party;
            s.outcomes.push_back({(c & 1) ? -1 : +1, (c & 2) ? -1 : +1});
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<CorrelationTable> deterministic_vertices(int n_parties) {
    std::vector<CorrelationTable> out;
    for (const auto& s : deterministic_strategies(n_parties)) out.push_back(s.table());
    return out;
}

LPResult is_local(const CorrelationTable& t, double tol) {
    const auto vertices = deterministic_vertices(t.n_parties());
    const int n_vertices = static_cast<int>(vertices.size());
    const int n_entries = t.n_combos() * t.n_combos();

    auto entry = [&](const CorrelationTable& table, int e) {
        return table.at(e / t.n_combos(), e % t.n_combos());
    };

    // Variables: vertex weights w_k, then the error bound eps.
    //   sum_k w_k V_k(e) - eps <= t(e)     (dual alpha_e <= 0)
    //   sum_k w_k V_k(e) + eps >= t(e)     (dual beta_e >= 0)
    //   sum_k w_k = 1
    // minimizing eps. The optimum is the infinity-norm distance from t to
    // the polytope, and f(e) = alpha_e + beta_e prices a separating
    // functional with f.t - max_k f.V_k = eps*.
    LinearProgram lp;
    lp.n_vars = n_vertices + 1;
    const int eps_var = n_vertices;
    lp.objective.assign(lp.n_vars, 0.0);
    lp.objective[eps_var] = 1.0;

    for (int e = 0; e < n_entries; ++e) {
        std::vector<double> row(lp.n_vars, 0.0);
        for (int k = 0; k < n_vertices; ++k) row[k] = entry(vertices[k], e);
        row[eps_var] = -1.0;
        lp.rows.push_back(row);
        lp.rhs.push_back(entry(t, e));
        lp.rel.push_back(Rel::LE);

        row[eps_var] = 1.0;
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(entry(t, e));
        lp.rel.push_back(Rel::GE);
    }
    {
        std::vector<double> row(lp.n_vars, 0.0);
        for (int k = 0; k < n_vertices; ++k) row[k] = 1.0;
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(1.0);
        lp.rel.push_back(Rel::EQ);
    }

    const LpSolution sol = solve_lp(lp);
    if (sol.status == LpStatus::IterationLimit) {
        throw std::runtime_error("is_local: simplex iteration limit, result indeterminate");
    }
    if (sol.status != LpStatus::Optimal) {
        // The program is always feasible (any vertex with eps = max error).
        throw std::runtime_error("is_local: unexpected LP status");
    }

    LPResult out;
    out.distance = sol.objective;
    out.feasible = sol.objective <= tol;
    out.weights.assign(sol.x.begin(), sol.x.begin() + n_vertices);

    if (!out.feasible) {
        Witness w;
        w.coeffs.assign(n_entries, 0.0);
        for (int e = 0; e < n_entries; ++e) {
            w.coeffs[e] = sol.dual[2 * e] + sol.dual[2 * e + 1];
        }
        w.value = 0.0;
        for (int e = 0; e < n_entries; ++e) w.value += w.coeffs[e] * entry(t, e);
        double bound = -std::numeric_limits<double>::infinity();
        for (const auto& v : vertices) {
            double s = 0.0;
            for (int e = 0; e < n_entries; ++e) s += w.coeffs[e] * entry(v, e);
            bound = std::max(bound, s);
        }
        w.lhv_bound = bound;
        out.witness = std::move(w);
    }
    return out;
}

}  // namespace steerlab
