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

#include "steerlab/cli.hpp"

#include <clocale>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "steerlab/acceptance.hpp"
#include "steerlab/analysis.hpp"
#include "steerlab/assemblage.hpp"

namespace steerlab::cli {

namespace {

using nlohmann::json;

const double kPi = std::acos(-1.0);

// All numeric output carries 12 significant digits, independent of locale.
double round12(double x) {
    if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.11e", x);
    return std::strtod(buf, nullptr);
}

std::string csv_num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

json jnum(double x) { return json(round12(x)); }

std::string iso_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

double default_tolerance() {
    if (const char* env = std::getenv("STEERLAB_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0) return v;
        throw std::domain_error("STEERLAB_TOL is not a positive number");
    }
    return 1e-8;
}

json record(const std::string& command, json parameters, json output, double tol,
            std::optional<std::uint64_t> seed) {
    json rec;
    rec["command"] = command;
    rec["parameters"] = std::move(parameters);
    rec["output"] = std::move(output);
    rec["tolerances"] = json{{"default", jnum(tol)}};
    if (seed) {
        rec["seed"] = *seed;
    } else {
        rec["seed"] = nullptr;
    }
    rec["version"] = kVersion;
    rec["timestamp"] = iso_timestamp();
    return rec;
}

json bloch_json(const BlochVector& n) {
    return json{{"x", jnum(n.x)}, {"y", jnum(n.y)}, {"z", jnum(n.z)}};
}

json table_entries_json(const CorrelationTable& t) {
    json entries = json::array();
    const int n = t.n_parties();
    for (int s = 0; s < t.n_combos(); ++s) {
        for (int o = 0; o < t.n_combos(); ++o) {
            json row;
            json settings = json::array();
            json outcomes = json::array();
            for (int p = 0; p < n; ++p) {
                settings.push_back((s >> (n - 1 - p)) & 1);
                outcomes.push_back(((o >> (n - 1 - p)) & 1) ? -1 : +1);
            }
            row["settings"] = std::move(settings);
            row["outcomes"] = std::move(outcomes);
            row["p"] = jnum(t.at(s, o));
            entries.push_back(std::move(row));
        }
    }
    return entries;
}

void table_csv(const CorrelationTable& t, std::ostream& out) {
    const int n = t.n_parties();
    out << (n == 2 ? "x,y,a,b,p" : "x,y,z,a,b,c,p") << '\n';
    for (int s = 0; s < t.n_combos(); ++s) {
        for (int o = 0; o < t.n_combos(); ++o) {
            for (int p = 0; p < n; ++p) out << ((s >> (n - 1 - p)) & 1) << ',';
            for (int p = 0; p < n; ++p) out << (((o >> (n - 1 - p)) & 1) ? -1 : 1) << ',';
            out << csv_num(t.at(s, o)) << '\n';
        }
    }
}

json settings_json(const MeasurementSetting& setting) {
    json parties = json::array();
    for (const auto& party : setting.parties) {
        json povms = json::array();
        for (const auto& povm : party) {
            json entry;
            if (povm.param()) {
                entry["direction"] = bloch_json(povm.param()->direction);
                entry["eta"] = jnum(povm.param()->eta);
            } else {
                entry["direction"] = bloch_json(povm.bloch());
                entry["eta"] = nullptr;
            }
            povms.push_back(std::move(entry));
        }
        parties.push_back(std::move(povms));
    }
    return parties;
}

CorrelationTable table_for_evaluation(const std::optional<std::string>& family,
                                      const std::optional<std::string>& state,
                                      const std::optional<std::string>& preset_name, double v,
                                      double eta, json& params) {
    if (family) {
        params["family"] = *family;
        params["v"] = jnum(v);
        return family_table(parse_family_id(*family), v);
    }
    if (!preset_name) {
        throw std::invalid_argument("provide either --family or --settings <preset>");
    }
    Scenario s = preset(parse_preset_id(*preset_name), eta, v);
    if (state) s.state_id = parse_state_id(*state);
    params["state"] = to_string(s.state_id);
    params["settings"] = *preset_name;
    params["v"] = jnum(v);
    params["eta"] = jnum(eta);
    return scenario_table(s);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"steerlab: numerical certification of Bell nonlocality, EPR steering and "
                 "genuine tripartite steering"};
    app.require_subcommand(1);
    const double tol = default_tolerance();

    // families
    auto* cmd_families = app.add_subcommand("families", "print an analytic correlation family");
    std::string fam_id;
    double fam_v = 1.0;
    std::string fam_format = "json";
    cmd_families->add_option("--id", fam_id, "family id")->required();
    cmd_families->add_option("--v", fam_v, "visibility in [0,1]");
    cmd_families->add_option("--format", fam_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // evaluate
    auto* cmd_eval = app.add_subcommand("evaluate", "evaluate an inequality on a table");
    std::string eval_ineq;
    std::optional<std::string> eval_family;
    std::optional<std::string> eval_state;
    std::optional<std::string> eval_preset;
    double eval_v = 1.0;
    double eval_eta = 1.0;
    bool eval_max_equiv = false;
    cmd_eval->add_option("--ineq", eval_ineq, "inequality name")->required();
    cmd_eval->add_option("--family", eval_family, "family id");
    cmd_eval->add_option("--state", eval_state, "state id (with --settings)");
    cmd_eval->add_option("--settings", eval_preset, "preset id providing the measurements");
    cmd_eval->add_option("--v", eval_v, "visibility in [0,1]");
    cmd_eval->add_option("--eta", eval_eta, "sharpness in [0,1]");
    cmd_eval->add_flag("--max-equivalents", eval_max_equiv,
                       "maximize over the relabeling orbit of the inequality");

    // scan
    auto* cmd_scan = app.add_subcommand("scan", "CSV scan of an inequality over a family grid");
    std::string scan_family;
    std::string scan_ineq;
    int scan_grid = 11;
    bool scan_max_equiv = false;
    cmd_scan->add_option("--family", scan_family, "family id")->required();
    cmd_scan->add_option("--ineq", scan_ineq, "inequality name")->required();
    cmd_scan->add_option("--grid", scan_grid, "number of grid points")->check(CLI::Range(2, 100001));
    cmd_scan->add_flag("--max-equivalents", scan_max_equiv,
                       "maximize over the relabeling orbit of the inequality");

    // optimize
    auto* cmd_opt = app.add_subcommand("optimize", "seesaw-maximize an inequality over settings");
    std::string opt_state;
    std::string opt_ineq;
    double opt_v = 1.0;
    int opt_restarts = 20;
    std::uint64_t opt_seed = 1;
    cmd_opt->add_option("--state", opt_state, "state id")->required();
    cmd_opt->add_option("--ineq", opt_ineq, "inequality name")->required();
    cmd_opt->add_option("--v", opt_v, "visibility for noisy state ids");
    cmd_opt->add_option("--restarts", opt_restarts, "number of random restarts");
    cmd_opt->add_option("--seed", opt_seed, "random seed");

    // jm-check
    auto* cmd_jm = app.add_subcommand("jm-check", "joint measurability of an unsharp qubit pair");
    double jm_eta = 1.0;
    double jm_angle = 90.0;
    cmd_jm->add_option("--eta", jm_eta, "sharpness in [0,1]")->required();
    cmd_jm->add_option("--angle", jm_angle, "angle between the two directions, degrees");

    // local-check
    auto* cmd_local = app.add_subcommand("local-check", "LP membership in the local polytope");
    std::string local_family;
    double local_v = 1.0;
    cmd_local->add_option("--family", local_family, "family id")->required();
    cmd_local->add_option("--v", local_v, "visibility in [0,1]");

    // assemblage
    auto* cmd_asm = app.add_subcommand(
        "assemblage", "conditional states steered on Alice-Bob by Charlie's unsharp pair");
    std::string asm_state = "ghz";
    double asm_v = 1.0;
    double asm_eta = 1.0;
    cmd_asm->add_option("--state", asm_state, "three-qubit state id (ghz|noisy_ghz)");
    cmd_asm->add_option("--v", asm_v, "visibility for noisy_ghz");
    cmd_asm->add_option("--eta", asm_eta, "Charlie's sharpness")->required();

    // preset
    auto* cmd_preset = app.add_subcommand("preset", "print a worked measurement scenario");
    std::string preset_name;
    double preset_eta = 1.0;
    double preset_v = 1.0;
    cmd_preset->add_option("--id", preset_name, "preset id")->required();
    cmd_preset->add_option("--eta", preset_eta, "sharpness where the scenario uses one");
    cmd_preset->add_option("--v", preset_v, "state visibility where the scenario uses one");

    // reproduce
    auto* cmd_repro = app.add_subcommand("reproduce", "run every reproduction criterion");
    bool repro_tables = false;
    cmd_repro->add_flag("--paper-tables", repro_tables, "print the per-criterion table");

    std::vector<const char*> argv;
    argv.push_back("steerlab");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help() << '\n';
            return 0;
        }
        err << "usage error: " << e.what() << '\n' << app.help() << '\n';
        return 2;
    }

    if (cmd_families->parsed()) {
        const FamilyId id = parse_family_id(fam_id);
        const CorrelationTable t = family_table(id, fam_v);
        if (fam_format == "csv") {
            table_csv(t, out);
            return 0;
        }
        const TableReport rep = validate_table(t);
        json output;
        output["id"] = to_string(id);
        output["v"] = jnum(fam_v);
        output["n_parties"] = t.n_parties();
        output["entries"] = table_entries_json(t);
        output["validation"] = json{{"normalization_residual", jnum(rep.normalization_residual)},
                                    {"no_signaling_residual", jnum(rep.no_signaling_residual)}};
        out << record("families", json{{"id", fam_id}, {"v", jnum(fam_v)}}, output, tol,
                      std::nullopt)
                   .dump(2)
            << '\n';
        return 0;
    }

    if (cmd_eval->parsed()) {
        json params{{"ineq", eval_ineq}, {"max_equivalents", eval_max_equiv}};
        const CorrelationTable t =
            table_for_evaluation(eval_family, eval_state, eval_preset, eval_v, eval_eta, params);
        const InequalityExpr expr = builtin(eval_ineq);
        json output;
        output["inequality"] = expr.name;
        output["regime"] = to_string(expr.regime);
        output["caveat"] = regime_caveat(expr.regime);
        output["bound"] = jnum(expr.bound);
        if (eval_max_equiv) {
            const BestEquivalent best = max_over_equivalents(expr, t);
            output["value"] = jnum(best.value);
            output["margin"] = jnum(best.margin);
            output["relabeling"] = best.relabeling.to_string();
        } else {
            const EvalResult res = evaluate(expr, t);
            output["value"] = jnum(res.value);
            output["margin"] = jnum(res.margin);
            output["relabeling"] = nullptr;
        }
        out << record("evaluate", params, output, tol, std::nullopt).dump(2) << '\n';
        return 0;
    }

    if (cmd_scan->parsed()) {
        const FamilyId id = parse_family_id(scan_family);
        const InequalityExpr expr = builtin(scan_ineq);
        out << "v,value,margin\n";
        for (int k = 0; k < scan_grid; ++k) {
            const double v = static_cast<double>(k) / (scan_grid - 1);
            const CorrelationTable t = family_table(id, v);
            const double value =
                scan_max_equiv ? max_over_equivalents(expr, t).value : evaluate(expr, t).value;
            out << csv_num(v) << ',' << csv_num(value) << ',' << csv_num(value - expr.bound)
                << '\n';
        }
        return 0;
    }

    if (cmd_opt->parsed()) {
        const StateId sid = parse_state_id(opt_state);
        const MadeState made = make_state(
            sid, state_needs_visibility(sid) ? std::optional<double>(opt_v) : std::nullopt);
        const SeesawResult res = seesaw_max(made.state, builtin(opt_ineq), opt_restarts, opt_seed);
        json dirs = json::array();
        for (const auto& party : res.directions) {
            dirs.push_back(json::array({bloch_json(party[0]), bloch_json(party[1])}));
        }
        json output{{"best_value", jnum(res.best_value)},
                    {"directions", std::move(dirs)},
                    {"iterations", res.iterations},
                    {"restarts_used", res.restarts_used},
                    {"seed", res.seed}};
        out << record("optimize",
                      json{{"state", opt_state},
                           {"ineq", opt_ineq},
                           {"v", jnum(opt_v)},
                           {"restarts", opt_restarts}},
                      output, tol, opt_seed)
                   .dump(2)
            << '\n';
        return 0;
    }

    if (cmd_jm->parsed()) {
        const double rad = jm_angle * kPi / 180.0;
        const auto p0 = DichotomicPOVM::noisy({1.0, 0.0, 0.0}, jm_eta);
        const auto p1 = DichotomicPOVM::noisy({std::cos(rad), std::sin(rad), 0.0}, jm_eta);
        const BuschCheck check = busch_criterion(p0, p1);
        json output{{"compatible", check.compatible},
                    {"busch_lhs", jnum(check.lhs)},
                    {"bound", jnum(BuschCheck::bound)}};
        out << record("jm-check", json{{"eta", jnum(jm_eta)}, {"angle", jnum(jm_angle)}}, output,
                      tol, std::nullopt)
                   .dump(2)
            << '\n';
        return 0;
    }

    if (cmd_local->parsed()) {
        const CorrelationTable t = family_table(parse_family_id(local_family), local_v);
        const LPResult res = is_local(t, tol);
        json output{{"feasible", res.feasible}, {"distance", jnum(res.distance)}};
        if (res.witness) {
            json coeffs = json::array();
            for (double c : res.witness->coeffs) coeffs.push_back(jnum(c));
            output["witness"] = json{{"coeffs", std::move(coeffs)},
                                     {"lhv_bound", jnum(res.witness->lhv_bound)},
                                     {"value", jnum(res.witness->value)}};
        } else {
            output["witness"] = nullptr;
        }
        out << record("local-check", json{{"family", local_family}, {"v", jnum(local_v)}},
                      output, tol, std::nullopt)
                   .dump(2)
            << '\n';
        return 0;
    }

    if (cmd_asm->parsed()) {
        const StateId sid = parse_state_id(asm_state);
        const MadeState made = make_state(
            sid, state_needs_visibility(sid) ? std::optional<double>(asm_v) : std::nullopt);
        if (made.state.n_parties() != 3) {
            throw std::invalid_argument("assemblage requires a three-qubit state id");
        }
        // Charlie's pair along the ex3 axes x and -y.
        const std::array<DichotomicPOVM, 2> charlie{
            DichotomicPOVM::noisy({1.0, 0.0, 0.0}, asm_eta),
            DichotomicPOVM::noisy({0.0, -1.0, 0.0}, asm_eta)};
        const Assemblage a = steer(made.state, charlie);
        const AssemblageReport rep = validate_assemblage(a);
        const bool compatible = jointly_measurable(charlie[0], charlie[1]);

        json entries = json::array();
        for (int z = 0; z < 2; ++z) {
            for (int c : {+1, -1}) {
                const ComplexMatrix& sigma = a.entry(c, z);
                json re = json::array();
                json im = json::array();
                for (int i = 0; i < sigma.dim(); ++i) {
                    json re_row = json::array();
                    json im_row = json::array();
                    for (int j = 0; j < sigma.dim(); ++j) {
                        re_row.push_back(jnum(sigma(i, j).real()));
                        im_row.push_back(jnum(sigma(i, j).imag()));
                    }
                    re.push_back(std::move(re_row));
                    im.push_back(std::move(im_row));
                }
                entries.push_back(json{{"z", z}, {"c", c}, {"re", std::move(re)},
                                       {"im", std::move(im)}});
            }
        }
        json output{{"entries", std::move(entries)},
                    {"report",
                     json{{"min_eigenvalue", jnum(rep.min_eigenvalue)},
                          {"no_signaling_residual", jnum(rep.no_signaling_residual)},
                          {"trace_residual", jnum(rep.trace_residual)}}},
                    {"charlie_compatible", compatible}};
        if (compatible) {
            const ParentPOVM parent = parent_povm(charlie[0], charlie[1]);
            const Assemblage rebuilt = lhs_reconstruct(made.state, parent);
            double dev = 0.0;
            for (int z = 0; z < 2; ++z)
                for (int c : {+1, -1})
                    dev = std::max(dev, max_abs_diff(a.entry(c, z), rebuilt.entry(c, z)));
            output["lhs_reconstruction_residual"] = jnum(dev);
        } else {
            output["lhs_reconstruction_residual"] = nullptr;
        }
        out << record("assemblage",
                      json{{"state", asm_state}, {"v", jnum(asm_v)}, {"eta", jnum(asm_eta)}},
                      output, tol, std::nullopt)
                   .dump(2)
            << '\n';
        return 0;
    }

    if (cmd_preset->parsed()) {
        const Scenario s = preset(parse_preset_id(preset_name), preset_eta, preset_v);
        json output{{"name", s.name},
                    {"state", to_string(s.state_id)},
                    {"visibility", jnum(s.visibility)},
                    {"sharpness", jnum(s.sharpness)},
                    {"inequality", s.inequality},
                    {"correction_note", s.correction_note},
                    {"settings", settings_json(s.settings)}};
        out << record("preset",
                      json{{"id", preset_name}, {"eta", jnum(preset_eta)}, {"v", jnum(preset_v)}},
                      output, tol, std::nullopt)
                   .dump(2)
            << '\n';
        return 0;
    }

    if (cmd_repro->parsed()) {
        const auto results = run_acceptance();
        bool all_pass = true;
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            out << (r.pass ? "[PASS] " : "[FAIL] ") << r.index << ". " << r.name;
            if (!r.detail.empty()) out << "  (" << r.detail << ")";
            out << '\n';
        }
        out << (all_pass ? "all criteria passed\n" : "criteria FAILED\n");
        if (!all_pass) err << "reproduce: at least one criterion failed\n";
        return all_pass ? 0 : 1;
    }

    err << "no subcommand\n";
    return 2;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::setlocale(LC_NUMERIC, "C");
    try {
        return run(args, out, err);
    } catch (const std::exception& e) {
        json error{{"error", {{"message", e.what()}}}, {"version", kVersion}};
        out << error.dump(2) << '\n';
        return 1;
    }
}

}  // namespace steerlab::cli
