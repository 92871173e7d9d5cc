// Copyright 2026 The rotorqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rotorqec/commands.h"

#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <json.hpp>
#include <map>
#include <numbers>

#include "rotorqec/distance.h"
#include "rotorqec/gates.h"
#include "rotorqec/parallel.h"
#include "rotorqec/propagation.h"
#include "rotorqec/qec.h"

namespace rotorqec {

namespace {

using json = nlohmann::ordered_json;

constexpr double PI = std::numbers::pi;

std::filesystem::path prepare_out_dir(const RunConfig &cfg) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec) {
        throw ConfigError("out_dir", "cannot create " + cfg.out_dir.string() + ": " + ec.message());
    }
    return cfg.out_dir;
}

void write_json(const std::filesystem::path &path, const json &j) {
    write_file_atomic(path, j.dump(2) + "\n");
}

json code_json(const RotationCode &code) {
    return json{{"profile", code.profile.provenance},
                {"N", code.order},
                {"k0", code.offset},
                {"dim", code.dim.value()},
                {"grid_points", code.profile.values.size()}};
}

json complex_json(cplx z) {
    return json::array({z.real(), z.imag()});
}

json matrix_json(const std::vector<cplx> &m, size_t dim) {
    json rows = json::array();
    for (size_t r = 0; r < dim; r++) {
        json row = json::array();
        for (size_t c = 0; c < dim; c++) {
            row.push_back(complex_json(m[r * dim + c]));
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

int cmd_verify_propagation(const RunConfig &cfg, std::ostream &out) {
    SweepOptions o;
    if (!cfg.gate.empty()) {
        o.kinds = {parse_gate_kind(cfg.gate)};
    }
    o.orders = cfg.orders;
    o.k_max = cfg.k_max;
    o.theta_samples = cfg.theta_samples;
    if (cfg.dim) {
        o.dim = cfg.dim;
    }
    o.pad = cfg.pad;
    auto cases = build_sweep(o);
    for (const auto &c : cases) {
        for (size_t m = 0; m < c.dims.size(); m++) {
            if (c.pads[m] + (size_t)std::abs(c.labels[m].k()) >= c.dims[m]) {
                throw ConfigError(cfg.dim ? "dim" : "pad", "pad " + std::to_string(c.pads[m]) +
                                                               " leaves no safe subspace at d=" +
                                                               std::to_string(c.dims[m]));
            }
        }
    }
    auto dir = prepare_out_dir(cfg);
    auto rows = run_sweep(cases, default_thread_count());
    std::map<std::string, std::pair<size_t, double>> per_gate;
    size_t failed = 0;
    for (const auto &r : rows) {
        auto &g = per_gate[r.gate];
        g.first++;
        g.second = std::max(g.second, r.residual);
        failed += !(r.residual < cfg.tol);
    }
    write_file_atomic(dir / "propagation.csv", propagation_table(rows).str());
    for (const auto &[gate, g] : per_gate) {
        out << gate << ": " << g.first << " cases, max residual " << format_double(g.second) << "\n";
    }
    out << rows.size() << " cases, " << failed << " at or above tol " << format_double(cfg.tol) << "\n";
    return failed ? EXIT_ASSERTION : EXIT_OK;
}

int cmd_simulate(const RunConfig &cfg, std::ostream &out) {
    Scheme scheme = parse_scheme(cfg.scheme);
    ChannelPrior prior{parse_prior(cfg.prior), cfg.gamma, cfg.sigma};
    const int n = cfg.code.order;
    size_t margin = 2 * (size_t)n + 4 * (size_t)std::ceil(cfg.gamma) + 4;
    RotationCode code = build_code(cfg, scheme == Scheme::Direct ? 3 : 1, margin);
    TeleportOptions tele;
    tele.grid = cfg.phase_grid;
    auto dir = prepare_out_dir(cfg);
    MonteCarloResult r;
    try {
        r = monte_carlo(code, prior, scheme, cfg.trials, cfg.seed, default_thread_count(), tele);
    } catch (const std::invalid_argument &e) {
        throw ConfigError("code.k0", e.what());
    }
    const auto &s = r.summary;
    json j{{"schema", "rotorqec.simulate"},
           {"version", 1},
           {"code", code_json(code)},
           {"scheme", scheme_name(scheme)},
           {"prior", prior_name(prior.kind)},
           {"gamma", prior.gamma},
           {"sigma", prior.sigma},
           {"seed", cfg.seed},
           {"summary",
            {{"trials", s.trials},
             {"mean_fidelity", s.mean_fidelity},
             {"median_fidelity", s.median_fidelity},
             {"q05_fidelity", s.q05_fidelity},
             {"min_fidelity", s.min_fidelity},
             {"logical_error_rate", s.logical_error_rate},
             {"logical_threshold", s.logical_threshold},
             {"information_destroyed", s.information_destroyed}}}};
    if (scheme == Scheme::Teleport) {
        j["measurement_model"] = "destructive canonical-phase POVM, " + std::to_string(cfg.phase_grid) +
                                 " points per 2pi/N window";
    }
    write_file_atomic(dir / "trials.csv", trials_table(r.records).str());
    write_json(dir / "summary.json", j);
    out << scheme_name(scheme) << " scheme, " << s.trials << " trials: mean fidelity " << format_double(s.mean_fidelity)
        << ", logical error rate " << format_double(s.logical_error_rate) << "\n";
    return EXIT_OK;
}

int cmd_distance(const RunConfig &cfg, std::ostream &out) {
    RotationCode code = build_code(cfg, 0, (size_t)cfg.code.order);
    auto dir = prepare_out_dir(cfg);
    const int n = code.order;
    auto grid = detectability_grid(code, -n, n, theta_grid(n, cfg.per_window), 1e-8, default_thread_count());
    write_file_atomic(dir / "detectability.csv", grid_table(grid).str());

    auto rows = verify_tradeoff(cfg.orders, cfg.code.grid_points, cfg.per_window);
    size_t ideal_rows = rows.size();
    if (cfg.code.family != "ideal") {
        rows.push_back(measure_tradeoff(code, code.profile.provenance, cfg.per_window));
    }
    bool ok = true;
    json tj = json::array();
    for (size_t i = 0; i < rows.size(); i++) {
        const auto &r = rows[i];
        if (i < ideal_rows && (r.d_n != r.order || std::abs(r.product - PI) > cfg.tol)) {
            ok = false;
        }
        tj.push_back({{"code", r.code_id},
                      {"N", r.order},
                      {"d_n", r.d_n},
                      {"d_theta", r.d_theta},
                      {"product", r.product},
                      {"approximation", r.approximation}});
        out << r.code_id << " N=" << r.order << ": d_n=" << r.d_n << " d_theta=" << format_double(r.d_theta)
            << " product=" << format_double(r.product) << " approximation=" << format_double(r.approximation)
            << "\n";
    }
    write_file_atomic(dir / "tradeoff.csv", tradeoff_table(rows).str());
    json j{{"schema", "rotorqec.distance"}, {"version", 1}, {"code", code_json(code)}, {"tradeoff", tj}};

    if (cfg.contrived) {
        ContrivedReport c = contrived_code_check(n < 2 ? 2 : n);
        json pairs = json::array();
        for (size_t i = 0; i < c.shifts.size(); i++) {
            pairs.push_back({{"k", c.shifts[i]}, {"deviation", c.pair_deviation[i]}});
        }
        j["contrived"] = {{"N", c.order},
                          {"periods", c.periods},
                          {"x_overlap", complex_json(c.x_overlap)},
                          {"k_k_plus_N_pairs", pairs},
                          {"logical_x_deviation", c.logical_x_deviation}};
        out << "contrived code: |<0|X|1>| = " << format_double(std::abs(c.x_overlap))
            << ", logical X deviation = " << format_double(c.logical_x_deviation) << "\n";
    }
    if (!cfg.cat_alphas.empty()) {
        auto sweep = cat_alpha_sweep(n, cfg.cat_alphas, cfg.per_window);
        CsvTable t;
        t.schema = "cat_sweep";
        t.columns = {"alpha", "deviation", "product"};
        json sj = json::array();
        bool monotone = true;
        for (size_t i = 0; i < sweep.size(); i++) {
            t.add_row({format_double(sweep[i].alpha), format_double(sweep[i].deviation),
                       format_double(sweep[i].product)});
            sj.push_back({{"alpha", sweep[i].alpha}, {"deviation", sweep[i].deviation}, {"product", sweep[i].product}});
            if (i && sweep[i].alpha > sweep[i - 1].alpha && sweep[i].deviation >= sweep[i - 1].deviation) {
                monotone = false;
            }
        }
        write_file_atomic(dir / "cat_sweep.csv", t.str());
        j["cat_sweep"] = sj;
        j["cat_sweep_monotone"] = monotone;
        out << "cat sweep: deviation " << (monotone ? "decreases" : "does not decrease") << " monotonically in alpha\n";
    }
    write_json(dir / "tradeoff.json", j);
    return ok ? EXIT_OK : EXIT_ASSERTION;
}

int cmd_gate_check(const RunConfig &cfg, std::ostream &out) {
    GateKind kind = parse_gate_kind(cfg.gate.empty() ? "Z" : cfg.gate);
    GateSpec spec;
    spec.kind = kind;
    spec.orders.assign((size_t)gate_arity(kind), cfg.code.order);
    spec.ell = cfg.ell;
    spec.phi = cfg.phi;
    RotationCode code = build_code(cfg, 0);
    auto dir = prepare_out_dir(cfg);
    LogicalAction a = verify_logical_action(spec, code);
    json j{{"schema", "rotorqec.gate_check"},
           {"version", 1},
           {"gate", spec.str()},
           {"code", code_json(code)},
           {"matrix", matrix_json(a.matrix, a.dim)},
           {"expected", matrix_json(a.expected, a.dim)},
           {"leakage", a.leakage},
           {"isometry_defect", a.isometry_defect},
           {"deviation", a.deviation}};
    write_json(dir / "gate_check.json", j);
    bool ok = a.deviation < cfg.tol && a.leakage < cfg.tol;
    out << spec.str() << " on " << code.profile.provenance << ": deviation " << format_double(a.deviation)
        << ", leakage " << format_double(a.leakage) << ", isometry defect " << format_double(a.isometry_defect)
        << (ok ? "" : " (above tol)") << "\n";
    return ok ? EXIT_OK : EXIT_ASSERTION;
}

int cmd_appendix_b(const RunConfig &cfg, std::ostream &out) {
    const int n = cfg.code.order;
    auto dir = prepare_out_dir(cfg);
    CsvTable t;
    t.schema = "appendix_b";
    t.columns = {"ell", "k", "re", "im", "expected_re", "expected_im", "error"};
    double worst = 0;
    const int top_ell = std::max(3, cfg.ell);
    for (int l = 0; l <= top_ell; l++) {
        PolynomialSpec p = discrete_rotation_polynomial(l);
        out << "l=" << l << ": f = " << p.unit.str() << ", phase/pi = " << p.phase.str() << "\n";
        GateSpec spec = single_mode_gate(GateKind::RlPrime, n, l);
        std::vector<cplx> diag = gate_diagonal(spec, {(size_t)(8 * n + 1)});
        for (int k = 0; k < 8; k++) {
            cplx got = diag[(size_t)(k * n)];
            cplx want = k % 2 ? exp_i_pi(Rational(1, (int64_t)1 << l)) : cplx(1);
            double e = std::abs(got - want);
            worst = std::max(worst, e);
            t.add_row({std::to_string(l), std::to_string(k), format_double(got.real()), format_double(got.imag()),
                       format_double(want.real()), format_double(want.imag()), format_double(e)});
        }
    }
    write_file_atomic(dir / "appendix_b.csv", t.str());
    out << "max phase error on the grid: " << format_double(worst) << "\n";
    return worst < cfg.tol ? EXIT_OK : EXIT_ASSERTION;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Bosonic rotation code toolkit", "rotorqec"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::map<std::string, std::string> flags;
    std::vector<std::string> sets;
    app.add_option("--config", config_path, "TOML-style config file");
    const std::pair<const char *, const char *> flag_keys[] = {
        {"--seed", "seed"},   {"--dim", "dim"},     {"--pad", "pad"},       {"--tol", "tol"},
        {"--out-dir", "out_dir"}, {"--gate", "gate"}, {"--scheme", "scheme"}, {"--prior", "prior"},
        {"--trials", "trials"},
    };
    for (const auto &[flag, key] : flag_keys) {
        std::string k = key;
        app.add_option_function<std::string>(
            flag, [&flags, k](const std::string &v) { flags[k] = v; }, "overrides config key '" + k + "'");
    }
    app.add_option("--set", sets, "extra key=value overrides")->take_all();

    const char *names[][2] = {
        {"verify-propagation", "run the error propagation sweep"},
        {"simulate", "Monte Carlo error correction"},
        {"distance", "detectability grid and number/phase distance"},
        {"gate-check", "logical action of a gate on a code"},
        {"appendix-b", "discrete rotation polynomial table"},
    };
    for (const auto &nm : names) {
        app.add_subcommand(nm[0], nm[1]);
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) {
        rev.pop_back();
    }
    try {
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? EXIT_OK : EXIT_CONFIG;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) {
            cfg = load_config(config_path, cfg);
        }
        for (const auto &[k, v] : flags) {
            set_config_value(cfg, k, v);
        }
        for (const auto &s : sets) {
            size_t eq = s.find('=');
            if (eq == std::string::npos) {
                throw ConfigError("--set", "expected key=value, got '" + s + "'");
            }
            set_config_value(cfg, s.substr(0, eq), s.substr(eq + 1));
        }
        cfg.validate();
        std::string cmd = app.get_subcommands().front()->get_name();
        if (cmd == "verify-propagation") {
            return cmd_verify_propagation(cfg, out);
        }
        if (cmd == "simulate") {
            return cmd_simulate(cfg, out);
        }
        if (cmd == "distance") {
            return cmd_distance(cfg, out);
        }
        if (cmd == "gate-check") {
            return cmd_gate_check(cfg, out);
        }
        return cmd_appendix_b(cfg, out);
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << "\n";
        return EXIT_CONFIG;
    } catch (const std::invalid_argument &e) {
        err << "config error: " << e.what() << "\n";
        return EXIT_CONFIG;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_ASSERTION;
    }
}

}  // namespace rotorqec
