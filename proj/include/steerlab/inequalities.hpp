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
 * The eight built-in correlation inequalities as data (coefficients over
 * full-correlator setting tuples, a bound and a model-regime tag), their
 * evaluation on tables, and the relabeling group (per-party setting swaps
 * and per-setting outcome flips) acting on both expressions and tables.
 */

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "steerlab/correlations.hpp"

namespace steerlab {

/// Hidden-variable model class a bound refers to. The tag is metadata: the
/// evaluator never checks that a table's provenance matches the regime.
enum class Regime {
    LHV,          // fully local hidden variables
    LHS_2xQ,      // qubit LHS on the trusted side, black-box remote side
    LHSLHS_2x2,   // quantum separable model, both sides qubits
    NLHV,         // hybrid bipartite-nonsignaling / local (Svetlichny)
    NLHS_2x2xQ,   // two-qubit quantum pair + black-box third party
    SLHS_2x2xQ,   // Bell-local steering pair + black-box third party
};

std::string to_string(Regime r);

/// Human-oriented description of what a violation certifies in each regime.
std::string regime_caveat(Regime r);

struct InequalityExpr {
    std::string name;
    int n_parties = 2;
    // coefficient per settings index (party 0 most significant bit);
    // size 4 for two parties, 8 for three.
    std::vector<double> coeffs;
    double bound = 0.0;
    Regime regime = Regime::LHV;
    // Largest value attainable by quantum systems (qubits per party);
    // relabeling-invariant, used by sanity sweeps.
    double quantum_max = 0.0;
};

/// Named inequalities: chsh, steering, chsh_nonsep, bb84_nonsep,
/// svetlichny, svetlichny_steering, mermin, mermin_steering.
/// Throws std::invalid_argument listing the valid names otherwise.
InequalityExpr builtin(std::string_view name);
std::vector<std::string> builtin_names();

struct EvalResult {
    double value = 0.0;
    double margin = 0.0;  // value - bound; positive means violation
};

EvalResult evaluate(const InequalityExpr& e, const CorrelationTable& t);

/// One party's relabeling: optionally swap the two settings, then flip the
/// outcome sign per (new) setting.
struct PartyRelabeling {
    bool swap_settings = false;
    std::array<int, 2> outcome_sign{+1, +1};
};

struct Relabeling {
    std::vector<PartyRelabeling> parties;

    static Relabeling identity(int n_parties);
    std::string to_string() const;
};

/// All 8^n relabelings for n parties.
std::vector<Relabeling> all_relabelings(int n_parties);

/// Relabeled table: query at (outcomes, settings) reads the original at the
/// relabeled coordinates.
CorrelationTable apply(const Relabeling& r, const CorrelationTable& t);

/// Pullback on expressions, defined so that
/// evaluate(apply(r, e), t) == evaluate(e, apply(r, t)).
InequalityExpr apply(const Relabeling& r, const InequalityExpr& e);

/// Orbit of `e` under the relabeling group, deduplicated; every member keeps
/// the bound and regime of `e`.
std::vector<InequalityExpr> relabelings(const InequalityExpr& e);

struct BestEquivalent {
    double value = 0.0;
    double margin = 0.0;
    Relabeling relabeling;  // the relabeling whose pullback attains the max
    InequalityExpr expr;
};

/// Maximum of evaluate over the relabeling orbit of `e`.
BestEquivalent max_over_equivalents(const InequalityExpr& e, const CorrelationTable& t);

}  // namespace steerlab
