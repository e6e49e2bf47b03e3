#include "oscidyn/run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <limits>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "oscidyn/cumulants.hpp"
#include "oscidyn/errors.hpp"
#include "oscidyn/observables.hpp"
#include "oscidyn/oracle.hpp"
#include "oscidyn/validity.hpp"

namespace oscidyn {

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string gshort(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

// Full parameter set for provenance; one key per comment line.
std::vector<std::string> provenance(const ModelParams& m, cplx z0, double tau_max, double dt) {
    return {
        "l = " + std::to_string(m.l),
        "Gamma = " + g17(m.Gamma),
        "delta_bar = " + g17(m.delta_bar),
        "n_d = " + g17(m.n_d),
        "N = " + g17(m.N),
        "g_l = " + g17(m.g_l),
        "z0_re = " + g17(z0.real()),
        "z0_im = " + g17(z0.imag()),
        "tau_max = " + g17(tau_max),
        "dt = " + g17(dt),
    };
}

double nan_to_zero(double v) { return std::isfinite(v) ? v : 0.0; }

}  // namespace

Table simulate_table(const RunConfig& cfg, Engine engine, bool with_q) {
    IntegrateOptions opts;
    opts.dt = cfg.dt;
    opts.include_q = with_q;

    const Trajectory traj =
        engine == Engine::ode
            ? integrate_semiclassical(cfg.model, cfg.z0, cfg.tau_max, opts)
            : closed_form_trajectory(cfg.model, cfg.z0, cfg.tau_max, opts);
    const ObservableSeries obs = observable_series(traj);

    Table t;
    t.comments.push_back(std::string("engine = ") + (engine == Engine::ode ? "ode" : "closed"));
    t.comments.push_back(std::string("with_q = ") + (with_q ? "true" : "false"));
    for (std::string& line : provenance(cfg.model, cfg.z0, cfg.tau_max, cfg.dt))
        t.comments.push_back(std::move(line));
    if (engine == Engine::ode)
        t.comments.push_back("richardson_delta = " + g17(traj.richardson_delta));

    t.columns = {"tau",  "re_z",    "im_z",  "re_C", "im_C", "B",  "S",
                 "F",    "re_zcl",  "im_zcl", "abs_Q", "abs_z1", "R"};
    t.rows.reserve(traj.grid.size());
    for (std::size_t k = 0; k < traj.grid.size(); ++k) {
        const CumulantState& s = traj.states[k];
        t.rows.push_back({s.tau, s.z.real(), s.z.imag(), s.C.real(), s.C.imag(), s.B, obs.S[k],
                          obs.F[k], traj.z_cl[k].real(), traj.z_cl[k].imag(), std::abs(traj.Q[k]),
                          std::abs(traj.z1[k]), traj.R[k]});
    }
    return t;
}

void run_simulate(const RunConfig& cfg, const std::string& out_path, OutputFormat format,
                  Engine engine, bool with_q) {
    const Table t = simulate_table(cfg, engine, with_q);
    if (format == OutputFormat::csv)
        write_csv(out_path, t);
    else
        write_json(out_path, t);
}

namespace {

struct Curve {
    int panelindex;
    int l;
    double Gamma;
    double n_d;
};

// One emitted curve of a figure: closed-engine trajectory of the column
// named by `quantity` (S, abs_Q or abs_z1).
std::string emit_curve(const std::string& which, const std::string& quantity, const Curve& c,
                       double tau_max, double dt, ShiftKernel shift,
                       const std::filesystem::path& dir) {
    ModelParams m;
    m.l = c.l;
    m.Gamma = c.Gamma;
    m.n_d = c.n_d;
    m.N = 1e4;
    m.g_l = 1.0;

    IntegrateOptions opts;
    opts.dt = dt;
    opts.shift = shift;
    const Trajectory traj = closed_form_trajectory(m, {1.0, 0.0}, tau_max, opts);

    Table t;
    t.comments.push_back("figure = " + which);
    for (std::string& line : provenance(m, {1.0, 0.0}, tau_max, dt))
        t.comments.push_back(std::move(line));

    t.columns = {"tau", quantity};
    t.rows.reserve(traj.grid.size());
    for (std::size_t k = 0; k < traj.grid.size(); ++k) {
        double v = 0;
        if (quantity == "S")
            v = principal_squeezing(traj.states[k].C, traj.states[k].B);
        else if (quantity == "abs_Q")
            v = std::abs(traj.Q[k]);
        else
            v = std::abs(traj.z1[k]);
        t.rows.push_back({traj.grid[k], v});
    }

    const char panel = static_cast<char>('a' + c.panelindex);
    const std::string name = which + "_" + panel + "_l" + std::to_string(c.l) + "_G" +
                             gshort(c.Gamma) + "_n" + gshort(c.n_d) + ".csv";
    write_csv((dir / name).string(), t);
    return name;
}

}  // namespace

std::vector<std::string> run_figure(const std::string& which, const std::string& out_dir) {
    const std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory " + out_dir + ": " + ec.message());

    std::vector<Curve> curves;
    std::string quantity;
    double dt = 1e-3;
    ShiftKernel shift = ShiftKernel::damped;

    if (which == "fig1") {
        quantity = "S";
        for (int panel = 0; panel < 2; ++panel) {
            const int l = panel == 0 ? 1 : 5;
            curves.push_back({panel, l, 0.0, 0.0});
            curves.push_back({panel, l, 0.05, 0.0});
            curves.push_back({panel, l, 0.05, 1.0});
        }
    } else if (which == "fig2" || which == "fig3") {
        quantity = which == "fig2" ? "abs_Q" : "abs_z1";
        shift = ShiftKernel::bare;
        dt = 1e-2;
        const std::vector<int> orders =
            which == "fig2" ? std::vector<int>{1, 3} : std::vector<int>{1, 3, 5};
        for (int panel = 0; panel < 2; ++panel) {
            const double Gamma = panel == 0 ? 0.05 : 0.5;
            for (int l : orders) curves.push_back({panel, l, Gamma, 0.0});
        }
    } else {
        throw ConfigError("unknown figure '" + which + "' (expected fig1, fig2 or fig3)");
    }

    std::vector<std::string> names;
    for (const Curve& c : curves) {
        const double span = which == "fig1" ? 3.0 : 10.0 / c.Gamma;
        names.push_back(emit_curve(which, quantity, c, span, dt, shift, dir));
    }
    return names;
}

namespace {

struct OracleRun {
    std::vector<OracleObservables> rows;
    int n_max = 0;
};

// Runs the matching oracle on the output grid, doubling the truncation when
// the coherent tail or the top Fock level reports leakage.
OracleRun oracle_on_grid(const PhysicalParams& p, cplx beta, double t_max, double dt, int n_out) {
    int n_max = oracle_truncation(beta);
    for (int attempt = 0;; ++attempt) {
        try {
            OracleRun run;
            run.n_max = n_max;
            if (p.gamma == 0.0) {
                for (int j = 0; j <= n_out; ++j)
                    run.rows.push_back(
                        fock_evolve_lossless(p, beta, t_max * j / n_out, n_max));
            } else {
                run.rows = lindblad_evolve(p, beta, t_max, dt, n_max, n_out);
            }
            return run;
        } catch (const NumericError& e) {
            if (attempt >= 2 || std::string(e.what()).find("n_max") == std::string::npos)
                throw;
            n_max *= 2;
        }
    }
}

}  // namespace

void run_compare(const RunConfig& cfg, const std::string& out_path,
                 std::optional<double> second_n) {
    if (!cfg.physical)
        throw ConfigError("compare requires physical parameters (model.type = \"physical\")");
    const PhysicalParams& p = *cfg.physical;
    const ModelParams& m = cfg.model;

    // semiclassical side on a grid that contains the oracle output times
    const int n_out = cfg.n_out;
    std::size_t per_segment = static_cast<std::size_t>(
        std::ceil(cfg.tau_max / (n_out * cfg.dt) - 1e-9));
    if (per_segment < 1) per_segment = 1;
    IntegrateOptions opts;
    opts.dt = cfg.tau_max > 0 ? cfg.tau_max / static_cast<double>(n_out * per_segment)
                              : cfg.dt;
    const Trajectory traj = integrate_semiclassical(m, cfg.z0, cfg.tau_max, opts);
    const ObservableSeries obs = observable_series(traj);

    const double t_max = physical_time(cfg.tau_max, m);
    const cplx beta = cfg.z0 * std::sqrt(m.N);
    const OracleRun first = oracle_on_grid(p, beta, t_max, physical_time(cfg.dt, m), n_out);

    OracleRun second;
    PhysicalParams p2 = p;
    if (second_n) {
        if (!(*second_n >= 1)) throw ConfigError("--second-n must be >= 1");
        p2.N = *second_n;
        p2.lambda = m.g_l / std::pow(p2.N, p2.l);  // keeps the scaled dynamics fixed
        second = oracle_on_grid(p2, cfg.z0 * std::sqrt(p2.N), t_max,
                                physical_time(cfg.dt, m), n_out);
    }

    Table t;
    t.comments.push_back("oracle = " + std::string(p.gamma == 0.0 ? "fock" : "lindblad"));
    for (std::string& line : provenance(m, cfg.z0, cfg.tau_max, cfg.dt))
        t.comments.push_back(std::move(line));
    t.comments.push_back("lambda = " + g17(p.lambda));
    t.comments.push_back("n_max = " + std::to_string(first.n_max));

    t.columns = {"tau", "abs_z_sc", "S_sc", "F_sc", "abs_z_ex", "S_ex", "F_ex",
                 "d_abs_z", "d_S", "d_F"};
    if (second_n) {
        t.columns.insert(t.columns.end(),
                         {"abs_z_ex2", "S_ex2", "F_ex2", "d_abs_z2", "d_S2", "d_F2",
                          "err_ratio"});
    }

    std::vector<double> ratios;
    for (int j = 0; j <= n_out; ++j) {
        const std::size_t k = static_cast<std::size_t>(j) * per_segment;
        const CumulantState& s = traj.states[k];
        const OracleObservables& ex = first.rows[j];

        const double d_abs_z = std::abs(std::abs(s.z) - std::abs(ex.z));
        const double d_S = std::abs(obs.S[k] - ex.S);
        const double d_F = std::abs(obs.F[k] - ex.F);
        std::vector<double> row = {traj.grid[k], std::abs(s.z), obs.S[k], obs.F[k],
                                   std::abs(ex.z), ex.S, ex.F, d_abs_z, d_S, d_F};

        if (second_n) {
            const OracleObservables& ex2 = second.rows[j];
            const double d_abs_z2 = std::abs(std::abs(s.z) - std::abs(ex2.z));
            const double d_S2 = std::abs(obs.S[k] - ex2.S);
            const double d_F2 = std::abs(obs.F[k] - ex2.F);
            const double e1 = nan_to_zero(d_abs_z) + nan_to_zero(d_S) + nan_to_zero(d_F);
            const double e2 = nan_to_zero(d_abs_z2) + nan_to_zero(d_S2) + nan_to_zero(d_F2);
            const double ratio =
                e2 > 1e-14 ? e1 / e2 : std::numeric_limits<double>::quiet_NaN();
            row.insert(row.end(), {std::abs(ex2.z), ex2.S, ex2.F, d_abs_z2, d_S2, d_F2, ratio});
            if (std::isfinite(ratio)) ratios.push_back(ratio);
        }
        t.rows.push_back(std::move(row));
    }

    if (second_n) {
        double median = std::numeric_limits<double>::quiet_NaN();
        if (!ratios.empty()) {
            std::sort(ratios.begin(), ratios.end());
            median = ratios[ratios.size() / 2];
        }
        const double expected = *second_n / p.N;
        const bool consistent =
            std::isfinite(median) && median >= expected / 2 && median <= expected * 2;
        t.comments.push_back("second_N = " + g17(*second_n));
        t.comments.push_back("error_ratio_median = " + g17(median));
        t.comments.push_back("error_ratio_expected = " + g17(expected));
        t.comments.push_back(std::string("error_scaling_verdict = ") +
                             (consistent ? "consistent" : "inconsistent"));
    }

    write_csv(out_path, t);
}

void run_report(const RunConfig& cfg, std::ostream& out) {
    const ValidityReport rep = breaking_report(cfg.model, cfg.z0);
    nlohmann::ordered_json doc;
    auto set = [&doc](const char* key, const std::optional<double>& v) {
        if (v)
            doc[key] = *v;
        else
            doc[key] = nullptr;
    };
    set("tau1", rep.tau1);
    set("Q_max_estimate", rep.Q_max_estimate);
    doc["tau_star_hamiltonian"] = rep.tau_star_hamiltonian;
    set("tau_star_plateau", rep.tau_star_plateau);
    set("R_plateau_estimate", rep.R_plateau_estimate);
    doc["Omega_l"] = rep.Omega_l;
    out << doc.dump(2) << "\n";
}

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Cumulant dynamics of dissipative higher-order anharmonic oscillators"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "csv", engine = "ode", which;
    bool with_q = false;
    double second_n_value = 0;

    CLI::App* sim = app.add_subcommand("simulate", "Emit one trajectory table");
    sim->add_option("--config", config_path, "JSON run configuration")->required();
    sim->add_option("--out", out_path, "output file")->required();
    sim->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sim->add_option("--engine", engine, "closed or ode")
        ->check(CLI::IsMember({"closed", "ode"}));
    sim->add_flag("--with-q", with_q, "feed the quantum correction back into the mean");

    CLI::App* fig = app.add_subcommand("figure", "Emit the curve files of one figure");
    fig->add_option("which", which, "fig1, fig2 or fig3")->required();
    fig->add_option("--out", out_path, "output directory")->required();

    CLI::App* cmp = app.add_subcommand("compare", "Semiclassical vs exact-oracle table");
    cmp->add_option("--config", config_path, "JSON run configuration")->required();
    cmp->add_option("--out", out_path, "output file")->required();
    CLI::Option* second_opt =
        cmp->add_option("--second-n", second_n_value, "rerun the oracle at another N");

    CLI::App* rep = app.add_subcommand("report", "Print breaking-time estimates as JSON");
    rep->add_option("--config", config_path, "JSON run configuration")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed()) {
            const RunConfig cfg = load_config(config_path);
            run_simulate(cfg, out_path,
                         format == "csv" ? OutputFormat::csv : OutputFormat::json,
                         engine == "ode" ? Engine::ode : Engine::closed, with_q);
        } else if (fig->parsed()) {
            run_figure(which, out_path);
        } else if (cmp->parsed()) {
            const RunConfig cfg = load_config(config_path);
            std::optional<double> second;
            if (second_opt->count() > 0) second = second_n_value;
            run_compare(cfg, out_path, second);
        } else if (rep->parsed()) {
            const RunConfig cfg = load_config(config_path);
            run_report(cfg, std::cout);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace oscidyn
