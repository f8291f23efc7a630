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
 * Scenario-level analysis: critical-visibility bisection, alternating
 * (seesaw) maximization of inequality values over sharp qubit observables,
 * and the worked measurement scenarios shipped as presets.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "steerlab/inequalities.hpp"
#include "steerlab/localpolytope.hpp"

namespace steerlab {

struct ThresholdResult {
    bool found = false;
    double critical_v = 1.0;  // smallest visibility with positive margin
};

/// Bisect the sign of `margin` over v in [0,1]. The margin must be monotone
/// nondecreasing; an 11-point pre-scan enforces this and throws
/// std::runtime_error with a diagnostic when it fails. A margin that never
/// turns positive yields found = false rather than an error.
ThresholdResult critical_visibility(const std::function<double(double)>& margin,
                                    double tol = 1e-8);

struct SeesawResult {
    double best_value = 0.0;
    // directions[party][setting]: optimizing sharp observable axes.
    std::vector<std::array<BlochVector, 2>> directions;
    int iterations = 0;     // sweeps spent inside the best restart
    int restarts_used = 0;
    std::uint64_t seed = 0;
};

/// Alternating best-response maximization of an inequality value over sharp
/// qubit observables on a fixed state: each observable in turn is replaced
/// by the unit-Bloch maximizer of the induced linear functional. Restarts
/// draw initial directions from a generator seeded with `seed`; the best
/// restart wins.
SeesawResult seesaw_max(const DensityMatrix& rho, const InequalityExpr& ineq, int restarts,
                        std::uint64_t seed);

enum class PresetId { Example1, Ex1, Ex2, Ex3 };

PresetId parse_preset_id(std::string_view name);
std::string to_string(PresetId id);
std::vector<std::string> preset_id_names();

/// A fully specified run: state, measurements and the inequality it targets.
struct Scenario {
    std::string name;
    StateId state_id;
    double visibility = 1.0;  // state visibility, where the state takes one
    double sharpness = 1.0;   // measurement sharpness, where one applies
    MeasurementSetting settings;
    std::string inequality;
    /// Documents any relabeling applied on top of the published observables
    /// so that the scenario reproduces its analytic family exactly.
    std::string correction_note;
};

/// Worked scenarios:
///  - example1: singlet, unsharp Alice (eta) on x/y, sharp Bob; CHSH family.
///  - ex1: noisy GHZ (v), sharp settings; Svetlichny family.
///  - ex2: noisy GHZ (v), GHZ-paradox settings; canonical GHZ family.
///  - ex3: GHZ, sharp Alice/Bob, unsharp Charlie (eta); Svetlichny family
///    with visibility eta.
Scenario preset(PresetId id, double eta = 1.0, double v = 1.0);

/// Born table of a scenario (builds the state from its id and visibility).
CorrelationTable scenario_table(const Scenario& s);

}  // namespace steerlab
