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

#include "steerlab/states.hpp"

using namespace steerlab;

TEST_CASE("werner construction") {
    const DensityMatrix mixed = make_state(StateId::Werner, 0.0).state;
    CHECK(max_abs_diff(mixed.matrix(), 0.25 * ComplexMatrix::identity(4)) <= 1e-15);

    const DensityMatrix pure = make_state(StateId::Werner, 1.0).state;
    CHECK(pure.matrix()(1, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(pure.matrix()(1, 2).real() == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(pure.matrix()(0, 0).real() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("noisy ghz diagonal") {
    const DensityMatrix rho = make_state(StateId::NoisyGhz, 0.5).state;
    // 0.5 * 0.5 + 0.5/8 on |000> and |111>.
    CHECK(rho.matrix()(0, 0).real() == doctest::Approx(0.3125).epsilon(1e-14));
    CHECK(rho.matrix()(7, 7).real() == doctest::Approx(0.3125).epsilon(1e-14));
    CHECK(rho.matrix()(1, 1).real() == doctest::Approx(0.0625).epsilon(1e-14));
}

TEST_CASE("make_state argument handling") {
    CHECK_THROWS_AS(make_state(StateId::Werner, 1.5), std::domain_error);
    CHECK_THROWS_AS(make_state(StateId::Werner, -0.1), std::domain_error);
    CHECK_THROWS_AS(make_state(StateId::Werner), std::invalid_argument);

    const MadeState pure = make_state(StateId::Ghz, 0.7);
    CHECK(pure.visibility_ignored);
    const MadeState plain = make_state(StateId::Ghz);
    CHECK(!plain.visibility_ignored);
}

TEST_CASE("all ids build valid density matrices") {
    for (const auto& name : state_id_names()) {
        const StateId id = parse_state_id(name);
        for (double v : {0.0, 0.3, 1.0}) {
            const MadeState made = make_state(
                id, state_needs_visibility(id) ? std::optional<double>(v) : std::nullopt);
            CHECK(is_psd(made.state.matrix()));
            CHECK(std::abs(trace(made.state.matrix()).real() - 1.0) <= 1e-12);
            if (!state_needs_visibility(id)) break;
        }
        CHECK(to_string(id) == name);
    }
    CHECK_THROWS_AS(parse_state_id("nonsense"), std::invalid_argument);
}

TEST_CASE("werner marginals are maximally mixed for every v") {
    for (int k = 0; k <= 10; ++k) {
        const DensityMatrix rho = make_state(StateId::Werner, k / 10.0).state;
        const ComplexMatrix half = 0.5 * ComplexMatrix::identity(2);
        CHECK(max_abs_diff(partial_trace(rho.matrix(), {2, 2}, {0}), half) <= 1e-12);
        CHECK(max_abs_diff(partial_trace(rho.matrix(), {2, 2}, {1}), half) <= 1e-12);
    }
}

TEST_CASE("ppt entanglement test") {
    const PptResult at_third = is_entangled_ppt(make_state(StateId::Werner, 1.0 / 3.0).state);
    CHECK(!at_third.entangled);
    CHECK(at_third.negativity == 0.0);

    const PptResult at_one = is_entangled_ppt(make_state(StateId::Werner, 1.0).state);
    CHECK(at_one.entangled);
    CHECK(at_one.negativity == doctest::Approx(0.5).epsilon(1e-12));

    const DensityMatrix mixed(0.25 * ComplexMatrix::identity(4), {2, 2});
    const PptResult mixed_res = is_entangled_ppt(mixed);
    CHECK(!mixed_res.entangled);
    CHECK(mixed_res.negativity == 0.0);

    CHECK_THROWS_AS(is_entangled_ppt(make_state(StateId::Ghz).state), std::invalid_argument);
}

TEST_CASE("ppt boundary sits at v = 1/3") {
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (is_entangled_ppt(make_state(StateId::Werner, mid).state).entangled) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    CHECK(std::abs(hi - 1.0 / 3.0) <= 1e-9);
}

TEST_CASE("density matrix validation rejects bad input") {
    ComplexMatrix not_normalized = ComplexMatrix::identity(4);
    CHECK_THROWS_AS(DensityMatrix(not_normalized, {2, 2}), std::invalid_argument);

    ComplexMatrix negative(2);
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix(negative, {2}), std::invalid_argument);

    CHECK_THROWS_AS(DensityMatrix(0.25 * ComplexMatrix::identity(4), {2, 3}),
                    std::invalid_argument);
}
