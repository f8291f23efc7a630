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

#include <doctest.h>

#include "steerlab/inequalities.hpp"
#include "steerlab/rng.hpp"

using namespace steerlab;

namespace {

const double kSqrt2 = std::sqrt(2.0);

CorrelationTable uniform_table(int n) {
    CorrelationTable t(n);
    const double p = 1.0 / t.n_combos();
    for (int s = 0; s < t.n_combos(); ++s)
        for (int o = 0; o < t.n_combos(); ++o) t.at(s, o) = p;
    return t;
}

CorrelationTable random_table(Rng& rng, int n) {
    // Random local-ish table: product of per-party random response
    // probabilities mixed with noise; valid and nonsignaling by construction.
    CorrelationTable t(n);
    std::vector<std::array<double, 2>> bias(n);
    for (auto& b : bias) b = {rng.uniform(), rng.uniform()};
    for (int s = 0; s < t.n_combos(); ++s) {
        for (int o = 0; o < t.n_combos(); ++o) {
            double p = 1.0;
            for (int q = 0; q < n; ++q) {
                const int x = (s >> (n - 1 - q)) & 1;
                const int a = (o >> (n - 1 - q)) & 1;
                p *= a == 0 ? bias[q][x] : 1.0 - bias[q][x];
            }
            t.at(s, o) = p;
        }
    }
    return t;
}

Relabeling random_relabeling(Rng& rng, int n) {
    Relabeling r = Relabeling::identity(n);
    for (auto& p : r.parties) {
        p.swap_settings = rng.uniform() < 0.5;
        p.outcome_sign[0] = rng.uniform() < 0.5 ? -1 : +1;
        p.outcome_sign[1] = rng.uniform() < 0.5 ? -1 : +1;
    }
    return r;
}

}  // namespace

TEST_CASE("builtin bounds match the published values") {
    CHECK(builtin("chsh").bound == doctest::Approx(2.0));
    CHECK(builtin("steering").bound == doctest::Approx(kSqrt2));
    CHECK(builtin("chsh_nonsep").bound == doctest::Approx(kSqrt2));
    CHECK(builtin("bb84_nonsep").bound == doctest::Approx(1.0));
    CHECK(builtin("svetlichny").bound == doctest::Approx(4.0));
    CHECK(builtin("svetlichny_steering").bound == doctest::Approx(2.0 * kSqrt2));
    CHECK(builtin("mermin").bound == doctest::Approx(2.0));
    CHECK(builtin("mermin_steering").bound == doctest::Approx(2.0));

    CHECK(builtin_names().size() == 8);
    CHECK_THROWS_WITH_AS(builtin("nope"),
                         doctest::Contains("valid names"), std::invalid_argument);
}

TEST_CASE("evaluate on the families") {
    CHECK(evaluate(builtin("chsh"), family_table(FamilyId::Chsh, 1.0)).value ==
          doctest::Approx(2.0 * kSqrt2).epsilon(1e-13));
    CHECK(evaluate(builtin("svetlichny"), family_table(FamilyId::Svetlichny, 1.0)).value ==
          doctest::Approx(4.0 * kSqrt2).epsilon(1e-13));
    CHECK(evaluate(builtin("chsh"), uniform_table(2)).value == doctest::Approx(0.0));
    CHECK(evaluate(builtin("mermin"), uniform_table(3)).value == doctest::Approx(0.0));

    CHECK_THROWS_AS(evaluate(builtin("chsh"), uniform_table(3)), std::invalid_argument);
}

TEST_CASE("family values are linear in the visibility") {
    for (int k = 0; k <= 10; ++k) {
        const double v = k / 10.0;
        CHECK(std::abs(evaluate(builtin("chsh"), family_table(FamilyId::Chsh, v)).value -
                       2.0 * kSqrt2 * v) <= 1e-12);
        CHECK(std::abs(evaluate(builtin("svetlichny"), family_table(FamilyId::Svetlichny, v)).value -
                       4.0 * kSqrt2 * v) <= 1e-12);
        CHECK(std::abs(evaluate(builtin("mermin"), family_table(FamilyId::GhzCanonical, v)).value -
                       4.0 * v) <= 1e-12);
    }
}

TEST_CASE("relabeling orbits") {
    const auto steering_orbit = relabelings(builtin("steering"));
    bool has_cross_form = false;
    for (const auto& e : steering_orbit) {
        CHECK(e.bound == doctest::Approx(kSqrt2));
        CHECK(e.regime == Regime::LHS_2xQ);
        if (e.coeffs == std::vector<double>{0, 1, 1, 0}) has_cross_form = true;
    }
    CHECK(has_cross_form);  // <A0B1 + A1B0> equivalent
    CHECK(steering_orbit.size() == 8);

    const auto chsh_orbit = relabelings(builtin("chsh"));
    CHECK(chsh_orbit.size() == 8);
    int odd_sign_patterns = 0;
    for (const auto& e : chsh_orbit) {
        int negatives = 0;
        for (double c : e.coeffs) {
            CHECK(std::abs(std::abs(c) - 1.0) <= 1e-15);
            if (c < 0) ++negatives;
        }
        if (negatives % 2 == 1) ++odd_sign_patterns;
    }
    CHECK(odd_sign_patterns == 8);

    // Identity relabeling returns the expression itself.
    const InequalityExpr e = builtin("chsh");
    CHECK(apply(Relabeling::identity(2), e).coeffs == e.coeffs);
}

TEST_CASE("expression and table actions are adjoint") {
    Rng rng(41);
    for (int n : {2, 3}) {
        const InequalityExpr e = builtin(n == 2 ? "chsh" : "svetlichny");
        for (int rep = 0; rep < 20; ++rep) {
            const CorrelationTable t = random_table(rng, n);
            const Relabeling r = random_relabeling(rng, n);
            const double lhs = evaluate(apply(r, e), t).value;
            const double rhs = evaluate(e, apply(r, t)).value;
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("max over equivalents") {
    for (int k = 0; k <= 10; ++k) {
        const double v = k / 10.0;
        const auto best = max_over_equivalents(builtin("steering"), family_table(FamilyId::Bb84, v));
        CHECK(best.value == doctest::Approx(2.0 * v).epsilon(1e-12));
    }

    const auto nonsep =
        max_over_equivalents(builtin("bb84_nonsep"), family_table(FamilyId::Bb84, 0.6));
    CHECK(nonsep.value == doctest::Approx(1.2).epsilon(1e-12));
    CHECK(nonsep.margin == doctest::Approx(0.2).epsilon(1e-12));

    CHECK(max_over_equivalents(builtin("chsh"), uniform_table(2)).value ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("max over equivalents is invariant under relabeling the table") {
    Rng rng(42);
    for (int n : {2, 3}) {
        const InequalityExpr e = builtin(n == 2 ? "chsh" : "mermin");
        for (int rep = 0; rep < 10; ++rep) {
            const CorrelationTable t = random_table(rng, n);
            const Relabeling r = random_relabeling(rng, n);
            const double direct = max_over_equivalents(e, t).value;
            const double relabeled = max_over_equivalents(e, apply(r, t)).value;
            CHECK(direct == doctest::Approx(relabeled).epsilon(1e-12));
        }
    }
}

TEST_CASE("quantum maxima are never exceeded by Born tables") {
    Rng rng(43);
    std::vector<InequalityExpr> bipartite{builtin("chsh"), builtin("steering"),
                                          builtin("chsh_nonsep"), builtin("bb84_nonsep")};
    std::vector<InequalityExpr> tripartite{builtin("svetlichny"), builtin("svetlichny_steering"),
                                           builtin("mermin"), builtin("mermin_steering")};

    auto random_setting = [&](int n) {
        MeasurementSetting setting;
        for (int p = 0; p < n; ++p)
            setting.parties.push_back({DichotomicPOVM::projective(rng.unit_vector()),
                                       DichotomicPOVM::projective(rng.unit_vector())});
        return setting;
    };

    for (int rep = 0; rep < 100; ++rep) {
        const DensityMatrix rho(rng.density_matrix(4), {2, 2});
        const CorrelationTable t = born_table(rho, random_setting(2));
        for (const auto& e : bipartite) {
            CHECK(evaluate(e, t).value <= e.quantum_max + 1e-9);
            CHECK(max_over_equivalents(e, t).value <= e.quantum_max + 1e-9);
        }
    }

    for (int rep = 0; rep < 100; ++rep) {
        const DensityMatrix rho(rng.density_matrix(8), {2, 2, 2});
        const CorrelationTable t = born_table(rho, random_setting(3));
        for (const auto& e : tripartite) {
            CHECK(evaluate(e, t).value <= e.quantum_max + 1e-9);
        }
    }
}

TEST_CASE("regime metadata") {
    CHECK(to_string(builtin("svetlichny_steering").regime) == "NLHS_2x2xQ");
    CHECK(!regime_caveat(Regime::SLHS_2x2xQ).empty());
    CHECK(builtin("mermin").regime == Regime::LHV);
}
