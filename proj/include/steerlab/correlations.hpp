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
 * Conditional probability tables P(outcomes|settings) for two or three
 * parties with two dichotomic settings each, the Born rule that fills them
 * from a state and measurements, and the four analytic one-parameter
 * families used throughout: CHSH, BB84, Svetlichny and GHZ.
 */

#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "steerlab/measurements.hpp"
#include "steerlab/states.hpp"

namespace steerlab {

/// P(outcomes|settings) for n_parties in {2,3}. Outcomes are +1/-1 per
/// party, settings 0/1 per party. Flat storage: index
/// settings_idx * 2^n + outcomes_idx where party 0 occupies the most
/// significant bit and outcome bit 0 encodes +1, bit 1 encodes -1.
class CorrelationTable {
  public:
    explicit CorrelationTable(int n_parties);

    int n_parties() const { return n_parties_; }
    int n_combos() const { return 1 << n_parties_; }  // per settings or outcomes

    double& at(int settings_idx, int outcomes_idx);
    double at(int settings_idx, int outcomes_idx) const;

    /// Typed accessor; outcomes are +1/-1 values, settings 0/1.
    double prob(std::span<const int> outcomes, std::span<const int> settings) const;

    /// Full n-party correlator < prod_p O_p > at the given settings.
    double correlator(std::span<const int> settings) const;
    double correlator(int settings_idx) const;

    static int outcome_bit(int outcome) { return outcome > 0 ? 0 : 1; }

  private:
    int n_parties_;
    std::vector<double> p_;
};

/// Two POVMs per party.
struct MeasurementSetting {
    std::vector<std::array<DichotomicPOVM, 2>> parties;
};

/// Born rule: probs = Tr(rho . tensor of effects). Requires one qubit
/// factor per party in the setting.
CorrelationTable born_table(const DensityMatrix& rho, const MeasurementSetting& setting);

enum class FamilyId {
    Chsh,          // (2 + ab (-1)^{xy} sqrt(2) V) / 8
    Bb84,          // (1 + ab delta_{x,y} V) / 4
    Svetlichny,    // (2 + abc (-1)^{xy+xz+yz+x+y+z+1} sqrt(2) V) / 16
    GhzLiteral,    // (1 + abc delta_{x^y, z^1} V) / 8
    GhzCanonical,  // (1 + abc delta_{x^y, z^1} (-1)^{xy} V) / 8
};

FamilyId parse_family_id(std::string_view name);
std::string to_string(FamilyId id);
std::vector<std::string> family_id_names();

/// Closed-form evaluation of the analytic families. GhzLiteral is the
/// printed formula; GhzCanonical is the Born statistics of the noisy GHZ
/// state under the setting-swap-corrected GHZ-paradox observables (it
/// differs from the literal form by the sign of the (1,1,1) correlator).
CorrelationTable family_table(FamilyId id, double v);

struct TableReport {
    double normalization_residual = 0.0;  // max | sum_o P(o|s) - 1 |
    double no_signaling_residual = 0.0;   // max marginal shift across a party's settings
};

TableReport validate_table(const CorrelationTable& t);

}  // namespace steerlab
