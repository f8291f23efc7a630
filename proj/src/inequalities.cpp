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

#include "steerlab/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace steerlab {

namespace {

const double kSqrt2 = std::sqrt(2.0);

// Settings indices for two parties: (x,y) -> x*2 + y.
// For three parties: (x,y,z) -> x*4 + y*2 + z.

InequalityExpr make(std::string name, int n, std::vector<double> coeffs, double bound,
                    Regime regime, double quantum_max) {
    InequalityExpr e;
    e.name = std::move(name);
    e.n_parties = n;
    e.coeffs = std::move(coeffs);
    e.bound = bound;
    e.regime = regime;
    e.quantum_max = quantum_max;
    return e;
}

}  // namespace

std::string to_string(Regime r) {
    switch (r) {
        case Regime::LHV: return "LHV";
        case Regime::LHS_2xQ: return "LHS_2xQ";
        case Regime::LHSLHS_2x2: return "LHSLHS_2x2";
        case Regime::NLHV: return "NLHV";
        case Regime::NLHS_2x2xQ: return "NLHS_2x2xQ";
        case Regime::SLHS_2x2xQ: return "SLHS_2x2xQ";
    }
    throw std::logic_error("unreachable");
}

std::string regime_caveat(Regime r) {
    switch (r) {
        case Regime::LHV:
            return "bound holds for local hidden variable models; violation is "
                   "device-independent";
        case Regime::LHS_2xQ:
            return "bound assumes one characterized qubit side; violation certifies "
                   "steering only in that one-side-device-independent reading";
        case Regime::LHSLHS_2x2:
            return "bound assumes characterized qubit measurements on both sides; "
                   "violation certifies nonseparability under that assumption";
        case Regime::NLHV:
            return "bound holds even with arbitrary bipartite nonsignaling resources "
                   "inside each bipartition";
        case Regime::NLHS_2x2xQ:
            return "bound assumes two characterized qubit parties; violation certifies "
                   "genuine tripartite steering from the uncharacterized party";
        case Regime::SLHS_2x2xQ:
            return "bound assumes a Bell-local steering pair of characterized qubit "
                   "parties; violation certifies genuine tripartite steering";
    }
    throw std::logic_error("unreachable");
}

InequalityExpr builtin(std::string_view name) {
    // Two-party coefficient order: E(0,0), E(0,1), E(1,0), E(1,1).
    if (name == "chsh") {
        return make("chsh", 2, {1, 1, 1, -1}, 2.0, Regime::LHV, 2.0 * kSqrt2);
    }
    if (name == "steering") {
        return make("steering", 2, {1, 0, 0, -1}, kSqrt2, Regime::LHS_2xQ, 2.0);
    }
    if (name == "chsh_nonsep") {
        return make("chsh_nonsep", 2, {1, 1, 1, -1}, kSqrt2, Regime::LHSLHS_2x2, 2.0 * kSqrt2);
    }
    if (name == "bb84_nonsep") {
        return make("bb84_nonsep", 2, {1, 0, 0, -1}, 1.0, Regime::LHSLHS_2x2, 2.0);
    }
    // Three-party coefficient order: E(x,y,z) at index x*4+y*2+z.
    // CHSH_AB C1 + CHSH'_AB C0 with CHSH' = -A0B0 + A0B1 + A1B0 + A1B1:
    // -E(000) +E(001) +E(010) +E(011) +E(100) +E(101) +E(110) -E(111).
    const std::vector<double> svet{-1, 1, 1, 1, 1, 1, 1, -1};
    if (name == "svetlichny") {
        return make("svetlichny", 3, svet, 4.0, Regime::NLHV, 4.0 * kSqrt2);
    }
    if (name == "svetlichny_steering") {
        return make("svetlichny_steering", 3, svet, 2.0 * kSqrt2, Regime::NLHS_2x2xQ,
                    4.0 * kSqrt2);
    }
    // Mermin_AB C1 + Mermin'_AB C0: +E(001) +E(010) +E(100) -E(111).
    const std::vector<double> mermin{0, 1, 1, 0, 1, 0, 0, -1};
    if (name == "mermin") {
        return make("mermin", 3, mermin, 2.0, Regime::LHV, 4.0);
    }
    if (name == "mermin_steering") {
        return make("mermin_steering", 3, mermin, 2.0, Regime::SLHS_2x2xQ, 4.0);
    }

    std::ostringstream msg;
    msg << "unknown inequality '" << name << "'; valid names:";
    for (const auto& n : builtin_names()) msg << ' ' << n;
    throw std::invalid_argument(msg.str());
}

std::vector<std::string> builtin_names() {
    return {"chsh",       "steering",           "chsh_nonsep", "bb84_nonsep",
            "svetlichny", "svetlichny_steering", "mermin",      "mermin_steering"};
}

EvalResult evaluate(const InequalityExpr& e, const CorrelationTable& t) {
    if (e.n_parties != t.n_parties()) {
        throw std::invalid_argument("evaluate: expression and table party counts differ");
    }
    double value = 0.0;
    for (int s = 0; s < t.n_combos(); ++s) {
        if (e.coeffs[s] != 0.0) value += e.coeffs[s] * t.correlator(s);
    }
    return {value, value - e.bound};
}

Relabeling Relabeling::identity(int n_parties) {
    Relabeling r;
    r.parties.resize(n_parties);
    return r;
}

std::string Relabeling::to_string() const {
    std::ostringstream out;
    for (std::size_t p = 0; p < parties.size(); ++p) {
        if (p) out << ';';
        out << static_cast<char>('A' + p) << ':' << (parties[p].swap_settings ? "swap" : "id")
            << ',' << (parties[p].outcome_sign[0] > 0 ? '+' : '-')
            << (parties[p].outcome_sign[1] > 0 ? '+' : '-');
    }
    return out.str();
}

std::vector<Relabeling> all_relabelings(int n_parties) {
    std::vector<Relabeling> out;
    const int per_party = 8;  // 2 swaps x 4 sign patterns
    int total = 1;
    for (int p = 0; p < n_parties; ++p) total *= per_party;
    out.reserve(total);
    for (int code = 0; code < total; ++code) {
        Relabeling r;
        int rest = code;
        for (int p = 0; p < n_parties; ++p) {
            const int c = rest % per_party;
            rest /= per_party;
            PartyRelabeling pr;
            pr.swap_settings = (c & 4) != 0;
            pr.outcome_sign[0] = (c & 1) ? -1 : +1;
            pr.outcome_sign[1] = (c & 2) ? -1 : +1;
            r.parties.push_back(pr);
        }
        out.push_back(std::move(r));
    }
    return out;
}

CorrelationTable apply(const Relabeling& r, const CorrelationTable& t) {
    const int n = t.n_parties();
    if (static_cast<int>(r.parties.size()) != n) {
        throw std::invalid_argument("apply: relabeling arity mismatch");
    }
    CorrelationTable out(n);
    for (int s = 0; s < t.n_combos(); ++s) {
        for (int o = 0; o < t.n_combos(); ++o) {
            // Coordinates in the original table for query (o|s) on the new one.
            int src_s = 0;
            int src_o = 0;
            for (int p = 0; p < n; ++p) {
                const int shift = n - 1 - p;
                const int x_new = (s >> shift) & 1;
                const int a_new = ((o >> shift) & 1) ? -1 : +1;
                const int x_old = x_new ^ (r.parties[p].swap_settings ? 1 : 0);
                const int a_old = a_new * r.parties[p].outcome_sign[x_new];
                src_s = (src_s << 1) | x_old;
                src_o = (src_o << 1) | CorrelationTable::outcome_bit(a_old);
            }
            out.at(s, o) = t.at(src_s, src_o);
        }
    }
    return out;
}

InequalityExpr apply(const Relabeling& r, const InequalityExpr& e) {
    const int n = e.n_parties;
    if (static_cast<int>(r.parties.size()) != n) {
        throw std::invalid_argument("apply: relabeling arity mismatch");
    }
    InequalityExpr out = e;
    for (int u = 0; u < static_cast<int>(e.coeffs.size()); ++u) {
        // evaluate(out, t) must equal evaluate(e, apply(r, t)):
        // E_new(x') = prod_p sign_p(x'_p) * E_old(x' ^ swap), so the pullback
        // coefficient at u = x' ^ swap is coeffs[x'] * prod signs.
        int x_new = 0;
        int sign = 1;
        for (int p = 0; p < n; ++p) {
            const int shift = n - 1 - p;
            const int bit_new = ((u >> shift) & 1) ^ (r.parties[p].swap_settings ? 1 : 0);
            x_new |= bit_new << shift;
            sign *= r.parties[p].outcome_sign[bit_new];
        }
        out.coeffs[u] = sign * e.coeffs[x_new];
    }
    return out;
}

std::vector<InequalityExpr> relabelings(const InequalityExpr& e) {
    std::map<std::vector<double>, InequalityExpr> orbit;
    for (const auto& r : all_relabelings(e.n_parties)) {
        InequalityExpr cand = apply(r, e);
        orbit.emplace(cand.coeffs, std::move(cand));
    }
    std::vector<InequalityExpr> out;
    out.reserve(orbit.size());
    for (auto& [coeffs, expr] : orbit) out.push_back(std::move(expr));
    return out;
}

BestEquivalent max_over_equivalents(const InequalityExpr& e, const CorrelationTable& t) {
    BestEquivalent best;
    bool first = true;
    for (const auto& r : all_relabelings(e.n_parties)) {
        const InequalityExpr cand = apply(r, e);
        const EvalResult res = evaluate(cand, t);
        if (first || res.value > best.value) {
            first = false;
            best.value = res.value;
            best.margin = res.margin;
            best.relabeling = r;
            best.expr = cand;
        }
    }
    return best;
}

}  // namespace steerlab
