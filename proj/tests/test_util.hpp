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

// Test-only brute-force oracle. Deliberately independent of the library's
// linear algebra: plain nested vectors, naive loops, its own state and
// effect constructors. Used to pin Born-rule tables and to resolve
// relabelings by exhaustive search.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;

inline Mat zeros(int n) { return Mat(n, std::vector<C>(n, C{0.0, 0.0})); }

inline Mat eye(int n) {
    Mat m = zeros(n);
    for (int i = 0; i < n; ++i) m[i][i] = 1.0;
    return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
    const int na = static_cast<int>(a.size());
    const int nb = static_cast<int>(b.size());
    Mat out = zeros(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l) out[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
    return out;
}

inline C trace_prod(const Mat& a, const Mat& b) {
    const int n = static_cast<int>(a.size());
    C t{0.0, 0.0};
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) t += a[i][k] * b[k][i];
    return t;
}

/// (I + sign * eta * n.sigma) / 2 for a unit direction n = (nx,ny,nz).
inline Mat effect(const std::array<double, 3>& n, double eta, int sign) {
    Mat m = zeros(2);
    const double s = sign > 0 ? eta : -eta;
    m[0][0] = C{1.0 + s * n[2], 0.0};
    m[0][1] = C{s * n[0], -s * n[1]};
    m[1][0] = C{s * n[0], s * n[1]};
    m[1][1] = C{1.0 - s * n[2], 0.0};
    for (auto& row : m)
        for (auto& v : row) v *= 0.5;
    return m;
}

inline Mat pure_density(const std::vector<C>& amps) {
    const int d = static_cast<int>(amps.size());
    Mat m = zeros(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m[i][j] = amps[i] * std::conj(amps[j]);
    return m;
}

inline Mat mix_white(const Mat& pure, double v) {
    const int d = static_cast<int>(pure.size());
    Mat out = zeros(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            out[i][j] = v * pure[i][j] + (i == j ? C{(1.0 - v) / d, 0.0} : C{0.0, 0.0});
    return out;
}

inline Mat singlet_density() {
    const double r = 1.0 / std::sqrt(2.0);
    return pure_density({0.0, r, -r, 0.0});
}

inline Mat werner_density(double v) { return mix_white(singlet_density(), v); }

inline Mat ghz_density(double v) {
    const double r = 1.0 / std::sqrt(2.0);
    return mix_white(pure_density({r, 0, 0, 0, 0, 0, 0, r}), v);
}

struct PartyObservable {
    std::array<double, 3> direction;
    double eta = 1.0;
};

/// P(outcomes|settings) by the Born rule, naive path.
inline double born_prob(const Mat& rho, const std::vector<PartyObservable>& obs,
                        const std::vector<int>& settings2, const std::vector<int>& outcomes) {
    // obs is laid out per party, two entries each: obs[2*p + setting].
    Mat op = eye(1);
    for (std::size_t p = 0; p < settings2.size(); ++p) {
        const PartyObservable& o = obs[2 * p + settings2[p]];
        op = kron(op, effect(o.direction, o.eta, outcomes[p]));
    }
    return trace_prod(rho, op).real();
}

/// Full probability table, flattened as settings * 2^n + outcomes with party
/// 0 most significant and outcome bit 0 meaning +1 (matches the library's
/// layout so tables can be compared directly).
inline std::vector<double> born_table(const Mat& rho, const std::vector<PartyObservable>& obs,
                                      int n_parties) {
    const int combos = 1 << n_parties;
    std::vector<double> out;
    out.reserve(combos * combos);
    for (int s = 0; s < combos; ++s) {
        for (int o = 0; o < combos; ++o) {
            std::vector<int> settings(n_parties);
            std::vector<int> outcomes(n_parties);
            for (int p = 0; p < n_parties; ++p) {
                settings[p] = (s >> (n_parties - 1 - p)) & 1;
                outcomes[p] = ((o >> (n_parties - 1 - p)) & 1) ? -1 : +1;
            }
            out.push_back(born_prob(rho, obs, settings, outcomes));
        }
    }
    return out;
}

}  // namespace oracle
