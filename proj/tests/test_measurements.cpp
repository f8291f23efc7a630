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

#include "steerlab/measurements.hpp"
#include "steerlab/rng.hpp"

using namespace steerlab;

namespace {

const BlochVector kX{1, 0, 0};
const BlochVector kY{0, 1, 0};
const BlochVector kZ{0, 0, 1};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

TEST_CASE("projective effects") {
    const auto z = DichotomicPOVM::projective(kZ);
    CHECK(z.effect(+1)(0, 0).real() == doctest::Approx(1.0));
    CHECK(z.effect(+1)(1, 1).real() == doctest::Approx(0.0));
    CHECK(z.effect(-1)(1, 1).real() == doctest::Approx(1.0));

    const auto x = DichotomicPOVM::projective(kX);
    CHECK(x.effect(+1)(0, 1).real() == doctest::Approx(0.5));

    const auto diag = DichotomicPOVM::projective({kInvSqrt2, kInvSqrt2, 0});
    const auto vals = eigvals_hermitian(diag.effect(+1));
    CHECK(vals[0] == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(vals[1] == doctest::Approx(1.0).epsilon(1e-13));

    CHECK_THROWS_AS(DichotomicPOVM::projective({0.5, 0, 0}), std::invalid_argument);
}

TEST_CASE("noisy effects") {
    Rng rng(21);
    const BlochVector n = rng.unit_vector();
    CHECK(max_abs_diff(DichotomicPOVM::noisy(n, 1.0).effect(+1),
                       DichotomicPOVM::projective(n).effect(+1)) <= 1e-15);
    CHECK(max_abs_diff(DichotomicPOVM::noisy(n, 0.0).effect(+1),
                       0.5 * ComplexMatrix::identity(2)) <= 1e-15);

    const auto vals = eigvals_hermitian(DichotomicPOVM::noisy(kX, 0.6).effect(+1));
    CHECK(vals[0] == doctest::Approx(0.2).epsilon(1e-13));
    CHECK(vals[1] == doctest::Approx(0.8).epsilon(1e-13));

    CHECK_THROWS_AS(DichotomicPOVM::noisy(kX, 1.2), std::domain_error);
    CHECK_THROWS_AS(DichotomicPOVM::noisy(kX, -0.1), std::domain_error);
}

TEST_CASE("constructed POVMs are complete and positive") {
    Rng rng(22);
    for (int k = 0; k < 50; ++k) {
        const auto povm = DichotomicPOVM::noisy(rng.unit_vector(), rng.uniform());
        CHECK(is_psd(povm.effect(+1), 1e-12));
        CHECK(is_psd(povm.effect(-1), 1e-12));
        CHECK(max_abs_diff(povm.effect(+1) + povm.effect(-1), ComplexMatrix::identity(2)) <=
              1e-12);
    }
}

TEST_CASE("noise transfer identity") {
    const DensityMatrix singlet = make_state(StateId::Singlet).state;
    CHECK(noise_transfer_check(singlet, kX, 1.0, kY) == 0.0);
    CHECK(noise_transfer_check(singlet, kX, 0.7, {kInvSqrt2, kInvSqrt2, 0}) <= 1e-12);

    // Product state: both sides factor.
    ComplexMatrix plus(2);
    plus(0, 0) = plus(0, 1) = plus(1, 0) = plus(1, 1) = 0.5;
    ComplexMatrix zero(2);
    zero(0, 0) = 1.0;
    const DensityMatrix product(kron(plus, zero), {2, 2});
    CHECK(noise_transfer_check(product, kY, 0.3, kZ) <= 1e-12);

    Rng rng(23);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const DensityMatrix rho(rng.density_matrix(4), {2, 2});
        worst = std::max(worst, noise_transfer_check(rho, rng.unit_vector(), rng.uniform(),
                                                     rng.unit_vector()));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("joint measurability of orthogonal equal-sharpness pairs") {
    CHECK(jointly_measurable(DichotomicPOVM::noisy(kX, 0.70), DichotomicPOVM::noisy(kY, 0.70)));
    CHECK(!jointly_measurable(DichotomicPOVM::noisy(kX, 0.72), DichotomicPOVM::noisy(kY, 0.72)));

    // Identical measurements are always compatible.
    for (double eta : {0.1, 0.9, 1.0}) {
        const auto p = DichotomicPOVM::noisy(kX, eta);
        CHECK(jointly_measurable(p, p));
    }

    // Biased pairs are outside the criterion's domain.
    const auto biased = DichotomicPOVM::from_effects(0.6 * ComplexMatrix::identity(2),
                                                     0.4 * ComplexMatrix::identity(2));
    CHECK_THROWS_AS(busch_criterion(biased, biased), std::invalid_argument);
}

TEST_CASE("joint measurability boundary at 1/sqrt2") {
    double lo = 0.0;   // compatible
    double hi = 1.0;   // incompatible
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        const bool ok =
            jointly_measurable(DichotomicPOVM::noisy(kX, mid), DichotomicPOVM::noisy(kY, mid));
        (ok ? lo : hi) = mid;
    }
    CHECK(std::abs(hi - kInvSqrt2) <= 1e-9);
}

TEST_CASE("parent measurement construction") {
    const double eta_boundary = kInvSqrt2;
    const ParentPOVM boundary = parent_povm(DichotomicPOVM::noisy(kX, eta_boundary),
                                            DichotomicPOVM::noisy(kY, eta_boundary));
    for (const auto& g : boundary.elements) {
        const auto vals = eigvals_hermitian(g);
        CHECK(std::abs(vals.front()) <= 1e-12);
        CHECK(vals.back() == doctest::Approx(0.5).epsilon(1e-12));
    }

    const ParentPOVM half = parent_povm(DichotomicPOVM::noisy(kX, 0.5),
                                        DichotomicPOVM::noisy(kY, 0.5));
    for (const auto& g : half.elements) {
        CHECK(eigvals_hermitian(g).front() ==
              doctest::Approx((1.0 - std::sqrt(2.0) / 2.0) / 4.0).epsilon(1e-12));
    }

    const ParentPOVM trivial =
        parent_povm(DichotomicPOVM::noisy(kX, 0.0), DichotomicPOVM::noisy(kY, 0.0));
    for (const auto& g : trivial.elements) {
        CHECK(max_abs_diff(g, 0.25 * ComplexMatrix::identity(2)) <= 1e-15);
    }

    CHECK_THROWS_AS(
        parent_povm(DichotomicPOVM::noisy(kX, 0.8), DichotomicPOVM::noisy(kY, 0.8)),
        std::runtime_error);
    CHECK_THROWS_AS(
        parent_povm(DichotomicPOVM::noisy(kX, 0.5), DichotomicPOVM::noisy(kX, 0.5)),
        std::invalid_argument);
    CHECK_THROWS_AS(
        parent_povm(DichotomicPOVM::noisy(kX, 0.5), DichotomicPOVM::noisy(kY, 0.3)),
        std::invalid_argument);
}

TEST_CASE("parent reconstruction and response normalization") {
    for (double eta : {0.0, 0.3, 0.5, 0.7, kInvSqrt2}) {
        const auto p0 = DichotomicPOVM::noisy(kX, eta);
        const auto p1 = DichotomicPOVM::noisy(kY, eta);
        const ParentPOVM parent = parent_povm(p0, p1);

        // Elements form a POVM.
        ComplexMatrix total(2);
        for (const auto& g : parent.elements) {
            CHECK(is_psd(g, 1e-12));
            total += g;
        }
        CHECK(max_abs_diff(total, ComplexMatrix::identity(2)) <= 1e-12);

        // Response rows are normalized distributions.
        for (int idx = 0; idx < 4; ++idx)
            for (int z = 0; z < 2; ++z)
                CHECK(parent.response(idx, z, +1) + parent.response(idx, z, -1) ==
                      doctest::Approx(1.0));

        CHECK(parent_reconstruction_residual(parent, p0, p1) <= 1e-12);
    }
}
