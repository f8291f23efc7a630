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
 * Dichotomic qubit measurements: sharp projectors, their unsharp
 * (white-noise) versions, the joint-measurability criterion for unbiased
 * pairs, and the four-outcome parent measurement whose classical
 * post-processing recovers a compatible pair.
 */

#pragma once

#include <array>
#include <optional>

#include "steerlab/linalg.hpp"
#include "steerlab/states.hpp"

namespace steerlab {

struct UnbiasedParam {
    BlochVector direction;  // unit vector
    double eta = 1.0;       // sharpness in [0,1]
};

/// Pair of PSD effects summing to the identity. Outcomes are labeled +1/-1.
class DichotomicPOVM {
  public:
    /// Sharp measurement along a unit Bloch direction: effects (I +- n.sigma)/2.
    static DichotomicPOVM projective(const BlochVector& direction, double tol = kHermTol);

    /// Unsharp measurement, effects (I +- eta n.sigma)/2.
    static DichotomicPOVM noisy(const BlochVector& direction, double eta, double tol = kHermTol);

    /// General constructor; validates positivity and completeness.
    static DichotomicPOVM from_effects(ComplexMatrix plus, ComplexMatrix minus,
                                       double tol = kPsdTol);

    /// Effect for outcome +1 or -1.
    const ComplexMatrix& effect(int outcome) const;

    /// Present when built through projective()/noisy().
    const std::optional<UnbiasedParam>& param() const { return param_; }

    /// Bloch vector m of the +1 effect, (I + m.sigma)/2. Throws
    /// std::invalid_argument when the POVM is biased (Tr E+ != 1).
    BlochVector bloch(double tol = kHermTol) const;

  private:
    DichotomicPOVM(ComplexMatrix plus, ComplexMatrix minus, std::optional<UnbiasedParam> param)
        : plus_(std::move(plus)), minus_(std::move(minus)), param_(std::move(param)) {}

    ComplexMatrix plus_;
    ComplexMatrix minus_;
    std::optional<UnbiasedParam> param_;
};

struct BuschCheck {
    double lhs = 0.0;  // |m0+m1| + |m0-m1|
    static constexpr double bound = 2.0;
    bool compatible = false;
};

/// Joint-measurability decision for a pair of unbiased dichotomic qubit
/// POVMs: compatible iff |m0+m1| + |m0-m1| <= 2.
BuschCheck busch_criterion(const DichotomicPOVM& p0, const DichotomicPOVM& p1);
bool jointly_measurable(const DichotomicPOVM& p0, const DichotomicPOVM& p1);

/// Four-outcome parent measurement indexed by a sign pair (mu, nu), together
/// with the deterministic response table that recovers the marginal pair:
/// reading out mu simulates setting z=0 and nu simulates z=1.
struct ParentPOVM {
    std::array<ComplexMatrix, 4> elements;  // index = (mu<0)*2 + (nu<0)

    static int index(int mu, int nu) { return (mu < 0 ? 2 : 0) + (nu < 0 ? 1 : 0); }

    /// D_{(mu,nu)}(c|z) for outcome c in {+1,-1} and setting z in {0,1}.
    double response(int idx, int z, int c) const;
};

/// Parent construction for a compatible pair of unbiased POVMs with equal
/// sharpness and orthogonal directions: G_{mu nu} = (I + (mu m0 + nu m1).sigma)/4.
/// Throws std::invalid_argument for pairs outside that form and
/// std::runtime_error for incompatible pairs.
ParentPOVM parent_povm(const DichotomicPOVM& p0, const DichotomicPOVM& p1);

/// Largest entrywise deviation between sum_idx D_idx(c|z) G_idx and the
/// marginal effects; diagnostic for the reconstruction identity.
double parent_reconstruction_residual(const ParentPOVM& parent, const DichotomicPOVM& p0,
                                      const DichotomicPOVM& p1);

/// Largest absolute gap, over the four outcome pairs, between the statistics
/// of (unsharp Alice, sharp Bob) on rho and of (sharp, sharp) on the
/// correspondingly noised state eta rho + (1-eta) I/2 x rho_B.
double noise_transfer_check(const DensityMatrix& rho, const BlochVector& alice_dir,
                            double alice_eta, const BlochVector& bob_dir);

}  // namespace steerlab
