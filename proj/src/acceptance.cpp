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

#include "steerlab/acceptance.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "steerlab/analysis.hpp"
#include "steerlab/assemblage.hpp"
#include "steerlab/rng.hpp"

namespace steerlab {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kInvSqrt2 = 1.0 / kSqrt2;
const BlochVector kXHat{1.0, 0.0, 0.0};
const BlochVector kYHat{0.0, 1.0, 0.0};

std::string fmt(double x) {
    std::ostringstream out;
    out.precision(12);
    out << x;
    return out.str();
}

struct Check {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << "FAILED: " << what;
        }
    }
    void note(const std::string& what) {
        if (detail.tellp() > 0) detail << "; ";
        detail << what;
    }
};

// Bisection of a boolean predicate over [0,1]; fires(0) false, fires(1) true.
double bisect_flip(const std::function<bool(double)>& fires, double xtol) {
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > xtol) {
        const double mid = 0.5 * (lo + hi);
        (fires(mid) ? hi : lo) = mid;
    }
    return hi;
}

CriterionResult criterion_werner_ppt() {
    Check c;
    const double flip = bisect_flip(
        [](double v) { return is_entangled_ppt(make_state(StateId::Werner, v).state).entangled; },
        1e-12);
    c.require(std::abs(flip - 1.0 / 3.0) <= 1e-9, "PPT flip at " + fmt(flip));
    c.note("flip at v=" + fmt(flip) + " (target 1/3 +- 1e-9)");
    return {1, "Werner entanglement boundary v=1/3", c.pass, c.detail.str()};
}

CriterionResult criterion_chsh_family() {
    Check c;
    const InequalityExpr chsh = builtin("chsh");
    double worst = 0.0;
    for (int k = 0; k <= 20; ++k) {
        const double v = k * 0.05;
        const double value = evaluate(chsh, family_table(FamilyId::Chsh, v)).value;
        worst = std::max(worst, std::abs(value - 2.0 * kSqrt2 * v));
    }
    c.require(worst <= 1e-12, "value-vs-2sqrt2*v deviation " + fmt(worst));

    const auto th = critical_visibility([&](double v) {
        return evaluate(chsh, family_table(FamilyId::Chsh, v)).margin;
    });
    c.require(th.found && std::abs(th.critical_v - kInvSqrt2) <= 1e-6,
              "critical visibility " + fmt(th.critical_v));
    c.note("grid dev=" + fmt(worst) + ", v*=" + fmt(th.critical_v) + " (target 1/sqrt2)");
    return {2, "CHSH family value 2sqrt2*v, threshold 1/sqrt2", c.pass, c.detail.str()};
}

CriterionResult criterion_bb84_family() {
    Check c;
    const InequalityExpr steering = builtin("steering");
    const InequalityExpr nonsep = builtin("bb84_nonsep");

    double worst = 0.0;
    for (int k = 0; k <= 20; ++k) {
        const double v = k * 0.05;
        const double value = max_over_equivalents(steering, family_table(FamilyId::Bb84, v)).value;
        worst = std::max(worst, std::abs(value - 2.0 * v));
    }
    c.require(worst <= 1e-12, "max-equivalent steering value deviation " + fmt(worst));

    const auto th_steer = critical_visibility([&](double v) {
        return max_over_equivalents(steering, family_table(FamilyId::Bb84, v)).margin;
    });
    c.require(th_steer.found && std::abs(th_steer.critical_v - kInvSqrt2) <= 1e-6,
              "steering threshold " + fmt(th_steer.critical_v));

    const auto th_sep = critical_visibility([&](double v) {
        return max_over_equivalents(nonsep, family_table(FamilyId::Bb84, v)).margin;
    });
    c.require(th_sep.found && std::abs(th_sep.critical_v - 0.5) <= 1e-6,
              "nonseparability threshold " + fmt(th_sep.critical_v));
    c.note("steering v*=" + fmt(th_steer.critical_v) + ", nonsep v*=" + fmt(th_sep.critical_v));
    return {3, "BB84 family steering 2v, thresholds 1/sqrt2 and 1/2", c.pass, c.detail.str()};
}

CriterionResult criterion_noise_transfer() {
    Check c;
    Rng rng(20260808);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const DensityMatrix rho(rng.density_matrix(4), {2, 2});
        const double dev =
            noise_transfer_check(rho, rng.unit_vector(), rng.uniform(), rng.unit_vector());
        worst = std::max(worst, dev);
    }
    c.require(worst <= 1e-12, "max deviation " + fmt(worst));
    c.note("max deviation over 100 random cases = " + fmt(worst));
    return {4, "noise-transfer identity <= 1e-12", c.pass, c.detail.str()};
}

CriterionResult criterion_joint_measurability() {
    Check c;
    const double flip = bisect_flip(
        [](double eta) {
            return !jointly_measurable(DichotomicPOVM::noisy(kXHat, eta),
                                       DichotomicPOVM::noisy(kYHat, eta));
        },
        1e-12);
    c.require(std::abs(flip - kInvSqrt2) <= 1e-9, "JM boundary at " + fmt(flip));

    const auto p0 = DichotomicPOVM::noisy(kXHat, 0.7);
    const auto p1 = DichotomicPOVM::noisy(kYHat, 0.7);
    const ParentPOVM parent = parent_povm(p0, p1);
    double min_eig = 0.0;
    for (const auto& g : parent.elements) {
        min_eig = std::min(min_eig, eigvals_hermitian(g).front());
    }
    const double recon = parent_reconstruction_residual(parent, p0, p1);
    c.require(min_eig >= -1e-12, "parent element min eigenvalue " + fmt(min_eig));
    c.require(recon <= 1e-12, "parent reconstruction residual " + fmt(recon));
    c.note("eta*=" + fmt(flip) + ", parent(0.7) min eig=" + fmt(min_eig) +
           ", recon=" + fmt(recon));
    return {5, "joint measurability boundary 1/sqrt2, parent at eta=0.7", c.pass,
            c.detail.str()};
}

CriterionResult criterion_svetlichny_family() {
    Check c;
    const InequalityExpr svet = builtin("svetlichny");
    const InequalityExpr svet_steer = builtin("svetlichny_steering");

    double worst = 0.0;
    for (int k = 0; k <= 20; ++k) {
        const double v = k * 0.05;
        const double value = evaluate(svet, family_table(FamilyId::Svetlichny, v)).value;
        worst = std::max(worst, std::abs(value - 4.0 * kSqrt2 * v));
    }
    c.require(worst <= 1e-12, "value-vs-4sqrt2*v deviation " + fmt(worst));

    const auto th_nlhv = critical_visibility([&](double v) {
        return evaluate(svet, family_table(FamilyId::Svetlichny, v)).margin;
    });
    c.require(th_nlhv.found && std::abs(th_nlhv.critical_v - kInvSqrt2) <= 1e-6,
              "NLHV threshold " + fmt(th_nlhv.critical_v));

    const auto th_steer = critical_visibility([&](double v) {
        return evaluate(svet_steer, family_table(FamilyId::Svetlichny, v)).margin;
    });
    c.require(th_steer.found && std::abs(th_steer.critical_v - 0.5) <= 1e-6,
              "steering threshold " + fmt(th_steer.critical_v));
    c.note("NLHV v*=" + fmt(th_nlhv.critical_v) + ", steering v*=" + fmt(th_steer.critical_v));
    return {6, "Svetlichny family 4sqrt2*v, thresholds 1/sqrt2 and 1/2", c.pass,
            c.detail.str()};
}

CriterionResult criterion_mermin_ghz() {
    Check c;
    const InequalityExpr mermin = builtin("mermin");
    const InequalityExpr mermin_steer = builtin("mermin_steering");

    // Resolve the published GHZ-paradox observables first: brute force over
    // Charlie's eight sign/swap relabelings of the raw table.
    const double v_probe = 0.8;
    MeasurementSetting raw;
    raw.parties = {{DichotomicPOVM::projective(kXHat), DichotomicPOVM::projective(kYHat)},
                   {DichotomicPOVM::projective(kXHat), DichotomicPOVM::projective(kYHat)},
                   {DichotomicPOVM::projective(kXHat), DichotomicPOVM::projective(-kYHat)}};
    const CorrelationTable raw_table =
        born_table(make_state(StateId::NoisyGhz, v_probe).state, raw);

    double best_mermin = -1e9;
    Relabeling best_rel = Relabeling::identity(3);
    for (const auto& r : all_relabelings(1)) {  // relabel Charlie only
        Relabeling full = Relabeling::identity(3);
        full.parties[2] = r.parties[0];
        const double value = evaluate(mermin, apply(full, raw_table)).value;
        if (value > best_mermin) {
            best_mermin = value;
            best_rel = full;
        }
    }
    c.require(std::abs(best_mermin - 4.0 * v_probe) <= 1e-10,
              "brute-force Mermin max " + fmt(best_mermin));
    const auto& cp = best_rel.parties[2];
    c.require(cp.swap_settings && cp.outcome_sign[0] == 1 && cp.outcome_sign[1] == 1,
              "maximizing relabeling is not the C-setting swap: " + best_rel.to_string());

    // The corrected preset and the canonical family agree with the oracle.
    const CorrelationTable canon_probe = family_table(FamilyId::GhzCanonical, v_probe);
    double table_dev = 0.0;
    const CorrelationTable swapped = apply(best_rel, raw_table);
    for (int s = 0; s < canon_probe.n_combos(); ++s)
        for (int o = 0; o < canon_probe.n_combos(); ++o)
            table_dev = std::max(table_dev, std::abs(swapped.at(s, o) - canon_probe.at(s, o)));
    c.require(table_dev <= 1e-12, "canonical family vs relabeled Born table " + fmt(table_dev));

    double worst = 0.0;
    for (int k = 0; k <= 20; ++k) {
        const double v = k * 0.05;
        const double value = evaluate(mermin, family_table(FamilyId::GhzCanonical, v)).value;
        worst = std::max(worst, std::abs(value - 4.0 * v));
    }
    c.require(worst <= 1e-10, "canonical Mermin value deviation " + fmt(worst));

    const auto th = critical_visibility([&](double v) {
        return evaluate(mermin_steer, family_table(FamilyId::GhzCanonical, v)).margin;
    });
    c.require(th.found && std::abs(th.critical_v - 0.5) <= 1e-6,
              "Mermin-steering threshold " + fmt(th.critical_v));
    c.note("oracle max=" + fmt(best_mermin) + " via " + best_rel.to_string() +
           ", steering v*=" + fmt(th.critical_v));
    return {7, "GHZ-canonical Mermin 4v, Mermin-steering threshold 1/2", c.pass,
            c.detail.str()};
}

CriterionResult criterion_lp_oracle() {
    Check c;
    const auto bb84 = is_local(family_table(FamilyId::Bb84, 1.0));
    c.require(bb84.feasible, "BB84 v=1 not feasible (distance " + fmt(bb84.distance) + ")");

    const auto chsh_in = is_local(family_table(FamilyId::Chsh, 0.707));
    c.require(chsh_in.feasible, "CHSH v=0.707 not feasible");
    const auto chsh_out = is_local(family_table(FamilyId::Chsh, 0.708));
    c.require(!chsh_out.feasible, "CHSH v=0.708 not infeasible");

    const auto svet = is_local(family_table(FamilyId::Svetlichny, 0.70));
    c.require(svet.feasible, "Svetlichny v=0.70 not feasible");
    c.note("distances: bb84=" + fmt(bb84.distance) + ", chsh707=" + fmt(chsh_in.distance) +
           ", chsh708=" + fmt(chsh_out.distance) + ", svet70=" + fmt(svet.distance));
    return {8, "LP locality oracle on BB84/CHSH/Svetlichny families", c.pass, c.detail.str()};
}

CriterionResult criterion_seesaw() {
    Check c;
    const auto chsh_run =
        seesaw_max(make_state(StateId::Singlet).state, builtin("chsh"), 20, 991);
    c.require(std::abs(chsh_run.best_value - 2.0 * kSqrt2) <= 1e-6,
              "singlet CHSH seesaw " + fmt(chsh_run.best_value));

    const auto svet_run =
        seesaw_max(make_state(StateId::Ghz).state, builtin("svetlichny"), 20, 992);
    c.require(std::abs(svet_run.best_value - 4.0 * kSqrt2) <= 1e-6,
              "GHZ Svetlichny seesaw " + fmt(svet_run.best_value));
    c.note("chsh=" + fmt(chsh_run.best_value) + ", svetlichny=" + fmt(svet_run.best_value));
    return {9, "seesaw recovery of 2sqrt2 and 4sqrt2", c.pass, c.detail.str()};
}

CriterionResult criterion_remark_ex3() {
    Check c;
    const InequalityExpr svet_steer = builtin("svetlichny_steering");

    const Scenario s06 = preset(PresetId::Ex3, 0.6);
    const bool jm06 = jointly_measurable(s06.settings.parties[2][0], s06.settings.parties[2][1]);
    const EvalResult e06 = evaluate(svet_steer, scenario_table(s06));
    c.require(jm06, "Charlie pair at eta=0.6 not jointly measurable");
    c.require(e06.margin > 0.0, "no violation at eta=0.6 (value " + fmt(e06.value) + ")");
    c.require(std::abs(e06.value - 4.0 * kSqrt2 * 0.6) <= 1e-9,
              "value at eta=0.6 is " + fmt(e06.value));

    const Scenario s045 = preset(PresetId::Ex3, 0.45);
    const EvalResult e045 = evaluate(svet_steer, scenario_table(s045));
    c.require(e045.margin <= 0.0, "unexpected violation at eta=0.45");
    c.note("eta=0.6: compatible and value=" + fmt(e06.value) + " > 2sqrt2; eta=0.45: value=" +
           fmt(e045.value) + ", no violation");
    return {10, "compatible Charlie still exhibits steering (ex3 remark)", c.pass,
            c.detail.str()};
}

CriterionResult criterion_assemblage_reconstruction() {
    Check c;
    double worst = 0.0;
    for (double eta : {0.3, 0.5, 0.7, kInvSqrt2}) {
        const std::array<DichotomicPOVM, 2> charlie{DichotomicPOVM::noisy(kXHat, eta),
                                                    DichotomicPOVM::noisy(-kYHat, eta)};
        const ParentPOVM parent = parent_povm(charlie[0], charlie[1]);
        for (double v : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const DensityMatrix rho = make_state(StateId::NoisyGhz, v).state;
            const Assemblage direct = steer(rho, charlie);
            const Assemblage rebuilt = lhs_reconstruct(rho, parent);
            for (int z = 0; z < 2; ++z)
                for (int cc : {+1, -1})
                    worst = std::max(worst,
                                     max_abs_diff(direct.entry(cc, z), rebuilt.entry(cc, z)));
        }
    }
    c.require(worst <= 1e-12, "max entry deviation " + fmt(worst));
    c.note("max |steer - lhs_reconstruct| over eta x v grid = " + fmt(worst));
    return {11, "assemblage LHS reconstruction for compatible pairs", c.pass, c.detail.str()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
    return {
        criterion_werner_ppt(),
        criterion_chsh_family(),
        criterion_bb84_family(),
        criterion_noise_transfer(),
        criterion_joint_measurability(),
        criterion_svetlichny_family(),
        criterion_mermin_ghz(),
        criterion_lp_oracle(),
        criterion_seesaw(),
        criterion_remark_ex3(),
        criterion_assemblage_reconstruction(),
    };
}

}  // namespace steerlab
