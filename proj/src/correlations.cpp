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

#include "steerlab/correlations.hpp"

#include <cmath>
#include <stdexcept>

namespace steerlab {

namespace {

int require_party_count(int n) {
    if (n != 2 && n != 3) {
        throw std::invalid_argument("correlation tables support 2 or 3 parties");
    }
    return n;
}

int bit_of(int packed, int n, int party) { return (packed >> (n - 1 - party)) & 1; }

}  // namespace

CorrelationTable::CorrelationTable(int n_parties)
    : n_parties_(require_party_count(n_parties)),
      p_(static_cast<std::size_t>(1) << (2 * n_parties), 0.0) {}

double& CorrelationTable::at(int settings_idx, int outcomes_idx) {
    return p_[static_cast<std::size_t>(settings_idx) * n_combos() + outcomes_idx];
}

double CorrelationTable::at(int settings_idx, int outcomes_idx) const {
    return p_[static_cast<std::size_t>(settings_idx) * n_combos() + outcomes_idx];
}

double CorrelationTable::prob(std::span<const int> outcomes, std::span<const int> settings) const {
    if (static_cast<int>(outcomes.size()) != n_parties_ ||
        static_cast<int>(settings.size()) != n_parties_) {
        throw std::invalid_argument("prob: arity mismatch");
    }
    int s = 0;
    int o = 0;
    for (int p = 0; p < n_parties_; ++p) {
        s = (s << 1) | (settings[p] & 1);
        o = (o << 1) | outcome_bit(outcomes[p]);
    }
    return at(s, o);
}

double CorrelationTable::correlator(int settings_idx) const {
    double sum = 0.0;
    for (int o = 0; o < n_combos(); ++o) {
        int sign = 1;
        for (int p = 0; p < n_parties_; ++p) sign *= bit_of(o, n_parties_, p) ? -1 : 1;
        sum += sign * at(settings_idx, o);
    }
    return sum;
}

double CorrelationTable::correlator(std::span<const int> settings) const {
    if (static_cast<int>(settings.size()) != n_parties_) {
        throw std::invalid_argument("correlator: arity mismatch");
    }
    int s = 0;
    for (int p = 0; p < n_parties_; ++p) s = (s << 1) | (settings[p] & 1);
    return correlator(s);
}

CorrelationTable born_table(const DensityMatrix& rho, const MeasurementSetting& setting) {
    const int n = static_cast<int>(setting.parties.size());
    if (rho.n_parties() != n) {
        throw std::invalid_argument("born_table: state and setting party counts differ");
    }
    for (int d : rho.dims()) {
        if (d != 2) throw std::invalid_argument("born_table: every subsystem must be a qubit");
    }

    CorrelationTable t(n);
    for (int s = 0; s < t.n_combos(); ++s) {
        for (int o = 0; o < t.n_combos(); ++o) {
            ComplexMatrix op = ComplexMatrix::identity(1);
            for (int p = 0; p < n; ++p) {
                const int x = bit_of(s, n, p);
                const int outcome = bit_of(o, n, p) ? -1 : +1;
                op = kron(op, setting.parties[p][x].effect(outcome));
            }
            t.at(s, o) = trace(rho.matrix() * op).real();
        }
    }
    return t;
}

FamilyId parse_family_id(std::string_view name) {
    if (name == "chsh") return FamilyId::Chsh;
    if (name == "bb84") return FamilyId::Bb84;
    if (name == "svetlichny") return FamilyId::Svetlichny;
    if (name == "ghz" || name == "ghz-literal") return FamilyId::GhzLiteral;
    if (name == "ghz-canonical") return FamilyId::GhzCanonical;
    throw std::invalid_argument("unknown family id: " + std::string(name));
}

std::string to_string(FamilyId id) {
    switch (id) {
        case FamilyId::Chsh: return "chsh";
        case FamilyId::Bb84: return "bb84";
        case FamilyId::Svetlichny: return "svetlichny";
        case FamilyId::GhzLiteral: return "ghz-literal";
        case FamilyId::GhzCanonical: return "ghz-canonical";
    }
    throw std::logic_error("unreachable");
}

std::vector<std::string> family_id_names() {
    return {"chsh", "bb84", "svetlichny", "ghz-literal", "ghz-canonical"};
}

CorrelationTable family_table(FamilyId id, double v) {
    if (v < 0.0 || v > 1.0) throw std::domain_error("family visibility must lie in [0,1]");
    const double sqrt2 = std::sqrt(2.0);

    const int n = (id == FamilyId::Chsh || id == FamilyId::Bb84) ? 2 : 3;
    CorrelationTable t(n);
    for (int s = 0; s < t.n_combos(); ++s) {
        for (int o = 0; o < t.n_combos(); ++o) {
            int prod = 1;
            for (int p = 0; p < n; ++p) prod *= bit_of(o, n, p) ? -1 : 1;

            double value = 0.0;
            switch (id) {
                case FamilyId::Chsh: {
                    const int x = bit_of(s, 2, 0);
                    const int y = bit_of(s, 2, 1);
                    value = (2.0 + prod * ((x & y) ? -1.0 : 1.0) * sqrt2 * v) / 8.0;
                    break;
                }
                case FamilyId::Bb84: {
                    const int x = bit_of(s, 2, 0);
                    const int y = bit_of(s, 2, 1);
                    value = (1.0 + prod * (x == y ? 1.0 : 0.0) * v) / 4.0;
                    break;
                }
                case FamilyId::Svetlichny: {
                    const int x = bit_of(s, 3, 0);
                    const int y = bit_of(s, 3, 1);
                    const int z = bit_of(s, 3, 2);
                    const int g = ((x & y) ^ (x & z) ^ (y & z) ^ x ^ y ^ z ^ 1) & 1;
                    value = (2.0 + prod * (g ? -1.0 : 1.0) * sqrt2 * v) / 16.0;
                    break;
                }
                case FamilyId::GhzLiteral:
                case FamilyId::GhzCanonical: {
                    const int x = bit_of(s, 3, 0);
                    const int y = bit_of(s, 3, 1);
                    const int z = bit_of(s, 3, 2);
                    const bool support = ((x ^ y) == (z ^ 1));
                    double sign = support ? 1.0 : 0.0;
                    if (id == FamilyId::GhzCanonical && (x & y)) sign = -sign;
                    value = (1.0 + prod * sign * v) / 8.0;
                    break;
                }
            }
            t.at(s, o) = value;
        }
    }
    return t;
}

TableReport validate_table(const CorrelationTable& t) {
    const int n = t.n_parties();
    TableReport report;

    for (int s = 0; s < t.n_combos(); ++s) {
        double sum = 0.0;
        for (int o = 0; o < t.n_combos(); ++o) sum += t.at(s, o);
        report.normalization_residual =
            std::max(report.normalization_residual, std::abs(sum - 1.0));
    }

    // For each party, the marginal over the remaining parties' outcomes must
    // not depend on that party's setting.
    for (int p = 0; p < n; ++p) {
        const int pbit = n - 1 - p;
        for (int s = 0; s < t.n_combos(); ++s) {
            if ((s >> pbit) & 1) continue;  // compare s (x_p=0) with its partner
            const int s1 = s | (1 << pbit);
            for (int rest = 0; rest < t.n_combos() / 2; ++rest) {
                double m0 = 0.0;
                double m1 = 0.0;
                for (int op = 0; op < 2; ++op) {
                    // Rebuild the full outcome index with party p's bit spliced in.
                    const int high = (rest >> pbit) << (pbit + 1);
                    const int low = rest & ((1 << pbit) - 1);
                    const int o = high | (op << pbit) | low;
                    m0 += t.at(s, o);
                    m1 += t.at(s1, o);
                }
                report.no_signaling_residual =
                    std::max(report.no_signaling_residual, std::abs(m0 - m1));
            }
        }
    }
    return report;
}

}  // namespace steerlab
