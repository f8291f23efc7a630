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

#include <cmath>
#include <set>

#include <doctest.h>

#include "steerlab/localpolytope.hpp"
#include "steerlab/simplex.hpp"

using namespace steerlab;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

double entry(const CorrelationTable& t, int e) {
    return t.at(e / t.n_combos(), e % t.n_combos());
}

double bisect_local_boundary(FamilyId id, double xtol) {
    double lo = 0.0;   // local
    double hi = 1.0;   // nonlocal
    while (hi - lo > xtol) {
        const double mid = 0.5 * (lo + hi);
        (is_local(family_table(id, mid)).feasible ? lo : hi) = mid;
    }
    return hi;
}

}  // namespace

TEST_CASE("simplex solves small programs with correct duals") {
    // max x1 + 2 x2 st x1 + x2 <= 4, x1 <= 3  ->  min -x1 - 2 x2.
    LinearProgram lp;
    lp.n_vars = 2;
    lp.objective = {-1.0, -2.0};
    lp.rows = {{1.0, 1.0}, {1.0, 0.0}};
    lp.rhs = {4.0, 3.0};
    lp.rel = {Rel::LE, Rel::LE};

    const LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(-8.0));
    CHECK(sol.x[0] == doctest::Approx(0.0));
    CHECK(sol.x[1] == doctest::Approx(4.0));
    // Strong duality and dual feasibility against the rows as given.
    CHECK(sol.dual[0] * 4.0 + sol.dual[1] * 3.0 == doctest::Approx(-8.0));
    CHECK(lp.objective[0] >= sol.dual[0] * 1.0 + sol.dual[1] * 1.0 - 1e-9);
    CHECK(lp.objective[1] >= sol.dual[0] * 1.0 + sol.dual[1] * 0.0 - 1e-9);

    // Equality plus GE: min x1 + x2 st x1 + x2 = 2, x1 >= 0.5.
    LinearProgram lp2;
    lp2.n_vars = 2;
    lp2.objective = {1.0, 1.0};
    lp2.rows = {{1.0, 1.0}, {1.0, 0.0}};
    lp2.rhs = {2.0, 0.5};
    lp2.rel = {Rel::EQ, Rel::GE};
    const LpSolution sol2 = solve_lp(lp2);
    REQUIRE(sol2.status == LpStatus::Optimal);
    CHECK(sol2.objective == doctest::Approx(2.0));
    CHECK(sol2.dual[0] * 2.0 + sol2.dual[1] * 0.5 == doctest::Approx(2.0));

    // Infeasible: x1 <= 1 and x1 >= 2.
    LinearProgram lp3;
    lp3.n_vars = 1;
    lp3.objective = {1.0};
    lp3.rows = {{1.0}, {1.0}};
    lp3.rhs = {1.0, 2.0};
    lp3.rel = {Rel::LE, Rel::GE};
    CHECK(solve_lp(lp3).status == LpStatus::Infeasible);

    // Unbounded: min -x1.
    LinearProgram lp4;
    lp4.n_vars = 1;
    lp4.objective = {-1.0};
    lp4.rows = {{1.0}};
    lp4.rhs = {0.0};
    lp4.rel = {Rel::GE};
    CHECK(solve_lp(lp4).status == LpStatus::Unbounded);

    // A one-pivot cap is always exhausted on a nontrivial program.
    CHECK(solve_lp(lp, 1).status == LpStatus::IterationLimit);
}

TEST_CASE("deterministic vertices") {
    const auto two = deterministic_vertices(2);
    CHECK(two.size() == 16);
    const auto three = deterministic_vertices(3);
    CHECK(three.size() == 64);
    CHECK_THROWS_AS(deterministic_vertices(4), std::invalid_argument);

    // Distinct, exactly normalized, exactly nonsignaling.
    std::set<std::vector<double>> seen;
    for (const auto& v : three) {
        const TableReport rep = validate_table(v);
        CHECK(rep.normalization_residual == 0.0);
        CHECK(rep.no_signaling_residual == 0.0);
        std::vector<double> flat;
        for (int s = 0; s < v.n_combos(); ++s)
            for (int o = 0; o < v.n_combos(); ++o) flat.push_back(v.at(s, o));
        seen.insert(flat);
    }
    CHECK(seen.size() == 64);
}

TEST_CASE("bb84 family is local at v=1 with an exact decomposition") {
    const CorrelationTable t = family_table(FamilyId::Bb84, 1.0);
    const LPResult res = is_local(t);
    REQUIRE(res.feasible);
    CHECK(res.distance <= 1e-9);

    double weight_sum = 0.0;
    for (double w : res.weights) {
        CHECK(w >= -1e-9);
        weight_sum += w;
    }
    CHECK(weight_sum == doctest::Approx(1.0).epsilon(1e-9));

    // Round trip: the weighted vertices rebuild the table.
    const auto vertices = deterministic_vertices(2);
    for (int e = 0; e < 16; ++e) {
        double rebuilt = 0.0;
        for (std::size_t k = 0; k < vertices.size(); ++k)
            rebuilt += res.weights[k] * entry(vertices[k], e);
        CHECK(rebuilt == doctest::Approx(entry(t, e)).epsilon(1e-8));
    }
}

TEST_CASE("chsh family outside the polytope carries a separating witness") {
    const CorrelationTable t = family_table(FamilyId::Chsh, 0.72);
    const LPResult res = is_local(t);
    REQUIRE(!res.feasible);
    REQUIRE(res.witness.has_value());
    CHECK(res.distance > 1e-6);

    // The witness separates t from every vertex by at least the distance.
    const auto vertices = deterministic_vertices(2);
    const Witness& w = *res.witness;
    CHECK(w.value - w.lhv_bound == doctest::Approx(res.distance).epsilon(1e-6));
    for (const auto& v : vertices) {
        double on_vertex = 0.0;
        for (int e = 0; e < 16; ++e) on_vertex += w.coeffs[e] * entry(v, e);
        CHECK(w.value > on_vertex + res.distance - 1e-9);
    }

    // Its correlator part looks like a CHSH functional: four near-equal
    // magnitudes with an odd number of negative signs.
    double g[4];
    int negatives = 0;
    double min_mag = 1e9;
    double max_mag = 0.0;
    for (int s = 0; s < 4; ++s) {
        g[s] = 0.0;
        for (int o = 0; o < 4; ++o) {
            const int sign = ((o >> 1) & 1 ? -1 : 1) * ((o & 1) ? -1 : 1);
            g[s] += sign * w.coeffs[s * 4 + o];
        }
        if (g[s] < 0) ++negatives;
        min_mag = std::min(min_mag, std::abs(g[s]));
        max_mag = std::max(max_mag, std::abs(g[s]));
    }
    CHECK(negatives % 2 == 1);
    CHECK(min_mag >= 0.5 * max_mag);
}

TEST_CASE("svetlichny family is local at v = 0.70") {
    const LPResult res = is_local(family_table(FamilyId::Svetlichny, 0.70));
    CHECK(res.feasible);
    CHECK(res.distance <= 1e-9);
}

TEST_CASE("local boundary of the chsh family sits at 1/sqrt2") {
    const double boundary = bisect_local_boundary(FamilyId::Chsh, 1e-6);
    CHECK(std::abs(boundary - kInvSqrt2) <= 1e-5);
}

TEST_CASE("local boundary of the canonical ghz family sits at 1/2") {
    const double boundary = bisect_local_boundary(FamilyId::GhzCanonical, 1e-6);
    CHECK(std::abs(boundary - 0.5) <= 1e-5);
}

TEST_CASE("feasible results rebuild tripartite tables") {
    const CorrelationTable t = family_table(FamilyId::Svetlichny, 0.5);
    const LPResult res = is_local(t);
    REQUIRE(res.feasible);
    const auto vertices = deterministic_vertices(3);
    for (int e = 0; e < 64; ++e) {
        double rebuilt = 0.0;
        for (std::size_t k = 0; k < vertices.size(); ++k)
            rebuilt += res.weights[k] * entry(vertices[k], e);
        CHECK(std::abs(rebuilt - entry(t, e)) <= 1e-8);
    }
}
