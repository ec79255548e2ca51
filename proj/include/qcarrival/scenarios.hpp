#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qcarrival/arrival.hpp"
#include "qcarrival/barrier.hpp"
#include "qcarrival/classical.hpp"
#include "qcarrival/config.hpp"
#include "qcarrival/quantum.hpp"
#include "qcarrival/twobody.hpp"

// Scenario runners: each one resolves its defaults from the config, computes
// the requested tables and emits CSV files (17 significant digits by default,
// LF endings, one "# config:" comment recording the resolved parameters,
// then a header row). Emission is deterministic: same config, same bytes.

namespace qcarrival {

inline std::string fmt_g(double v, int precision) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

// Compact value tag for filenames and column labels: 2.5 -> "2p5", -5 -> "m5".
inline std::string value_label(double v) {
    std::string s = fmt_g(v, 6);
    for (char& c : s) {
        if (c == '-')
            c = 'm';
        else if (c == '.')
            c = 'p';
    }
    return s;
}

inline std::string join_values(const std::vector<double>& vals, int precision) {
    std::string out;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i)
            out += ',';
        out += fmt_g(vals[i], precision);
    }
    return out;
}

namespace detail {

inline void ensure_directory(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw config_error("cannot create output directory '" + dir + "': " + ec.message());
}

} // namespace detail

class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::string& config_line,
              const std::vector<std::string>& columns, int precision)
        : out_(path, std::ios::binary), precision_(precision) {
        if (!out_)
            throw config_error("cannot open output file '" + path + "'");
        out_ << "# config: " << config_line << "\n";
        write_cells(columns);
    }

    void row(const std::vector<double>& values) {
        std::vector<std::string> cells;
        cells.reserve(values.size());
        for (const double v : values)
            cells.push_back(fmt_g(v, precision_));
        write_cells(cells);
    }

    void text_row(const std::vector<std::string>& cells) { write_cells(cells); }

private:
    void write_cells(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out_ << ',';
            out_ << cells[i];
        }
        out_ << "\n";
    }

    std::ofstream out_;
    int precision_;
};

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw config_error("cannot open output file '" + path + "'");
    out << content;
}

inline std::vector<RunMethod> resolved_methods(RunMethod selector) {
    if (selector == RunMethod::all)
        return {RunMethod::classical, RunMethod::stationary_phase, RunMethod::exact};
    return {selector};
}

struct ArrivalStats {
    double mean = 0.0;
    double rms = 0.0;
};

// Widen the window like sample_arrival_series, but reuse one kernel per
// attempt through the vector API instead of rebuilding it per time sample.
inline ArrivalStats quantum_arrival_stats(const PacketSpec& spec, const Barrier& barrier,
                                          double mass_mev_c2, double X, Method method,
                                          double t_hint, std::size_t n_samples,
                                          const TailCriteria& criteria = {}) {
    if (!(t_hint > 0.0))
        throw domain_error("arrival window hint must be positive");
    double t_max = t_hint;
    for (int attempt = 0; attempt < 12; ++attempt) {
        ArrivalSeries series;
        series.X = X;
        series.source = method_name(method);
        series.t_grid = linspace(0.0, t_max, n_samples);
        series.j = current_series(spec, barrier, mass_mev_c2, X, series.t_grid, method);
        try {
            const ArrivalDistribution dist = arrival_distribution(series, criteria);
            return {mean_arrival_time(dist), arrival_rms(dist)};
        } catch (const truncation_error&) {
            t_max *= 1.4;
        }
    }
    throw truncation_error("transmitted current at X = " + std::to_string(X)
                           + " angstrom does not decay within any tried window");
}

inline ArrivalStats classical_arrival_stats(const ClassicalScatteringState& st, double X,
                                            double t_hint, std::size_t n_samples) {
    const ArrivalSeries series = sample_arrival_series(
        X, [&](double t) { return classical_current_at_point(st, X, t); }, t_hint, n_samples,
        "classical");
    const ArrivalDistribution dist = arrival_distribution(series);
    return {mean_arrival_time(dist), arrival_rms(dist)};
}

// ---------------------------------------------------------------------------
// fig1: transmission magnitude and unwrapped phase derivatives at the three
// kick wavenumbers, against a mass sweep, for a thin barrier.

inline std::vector<std::string> run_fig1(const ScenarioConfig& cfg, const std::string& out_dir) {
    detail::ensure_directory(out_dir);
    const Barrier barrier{cfg.V0, cfg.barrier_width(2.0)};
    const std::vector<double> masses = cfg.mass_list(logspace(0.5, 50.0, 30));
    const double dk = M_PI / (4.0 * cfg.sigma0);

    std::ostringstream meta;
    meta << "scenario=fig1 V0=" << fmt_g(barrier.V0, cfg.precision)
         << " a=" << fmt_g(barrier.a, cfg.precision)
         << " sigma0=" << fmt_g(cfg.sigma0, cfg.precision)
         << (cfg.k0 ? " k0=" + fmt_g(*cfg.k0, cfg.precision)
                    : " u=" + fmt_g(cfg.u_frac.value_or(4.52e-3), cfg.precision))
         << " masses=" << join_values(masses, cfg.precision)
         << " precision=" << cfg.precision;

    const std::vector<std::string> columns{"mass", "k0", "kplus", "kminus"};
    const std::string base = out_dir + "/";
    CsvWriter mod(base + "fig1_modT.csv", meta.str(), columns, cfg.precision);
    CsvWriter eta(base + "fig1_eta.csv", meta.str(), columns, cfg.precision);
    CsvWriter eta1(base + "fig1_eta_d1.csv", meta.str(), columns, cfg.precision);
    CsvWriter eta2(base + "fig1_eta_d2.csv", meta.str(), columns, cfg.precision);

    for (const double m : masses) {
        const double k_c = cfg.wavenumber(m);
        const double ks[3] = {k_c, k_c + dk, k_c - dk};
        if (!(ks[2] > 2e-3))
            throw domain_error("mass sweep reaches k0 - pi/4sigma0 <= 0; raise the masses or "
                               "widen the packet");
        const PhaseTable table = build_phase_table(barrier, m, 1e-3, ks[1] + 1.0, 16385);
        std::vector<double> r_mod{m}, r_eta{m}, r_e1{m}, r_e2{m};
        for (const double k : ks) {
            r_mod.push_back(std::abs(transmission_amplitude(barrier, m, k)));
            r_eta.push_back(eta_at(table, k));
            const PhaseDerivatives d = phase_derivatives(table, k);
            r_e1.push_back(d.eta1);
            r_e2.push_back(d.eta2);
        }
        mod.row(r_mod);
        eta.row(r_eta);
        eta1.row(r_e1);
        eta2.row(r_e2);
    }

    write_text_file(base + "fig1.gp",
                    "# transmission magnitude and phase derivatives against mass\n"
                    "set datafile separator comma\n"
                    "set logscale x\n"
                    "set xlabel 'mass (MeV/c^2)'\n"
                    "plot 'fig1_modT.csv' using 1:2 with lines title '|T| at k0', \\\n"
                    "     '' using 1:3 with lines title '|T| at k+', \\\n"
                    "     '' using 1:4 with lines title '|T| at k-'\n");
    return {base + "fig1_modT.csv", base + "fig1_eta.csv", base + "fig1_eta_d1.csv",
            base + "fig1_eta_d2.csv", base + "fig1.gp"};
}

// ---------------------------------------------------------------------------
// fig2/fig3: transmitted density against x at the snapshot time, and detector
// current against t, per mass and per method.

inline std::vector<std::string> run_fig2_fig3(const ScenarioConfig& cfg,
                                              const std::string& out_dir) {
    detail::ensure_directory(out_dir);
    const Barrier barrier{cfg.V0, cfg.barrier_width(8.0)};
    const std::vector<double> masses = cfg.mass_list({2.5, 5.0, 10.0});
    const std::vector<RunMethod> methods = resolved_methods(cfg.method);
    const std::string base = out_dir + "/";
    std::vector<std::string> written;

    std::vector<std::string> columns_x{"x"}, columns_t{"t"};
    for (const RunMethod m : methods) {
        columns_x.push_back(run_method_name(m));
        columns_t.push_back(run_method_name(m));
    }

    const std::vector<double> x_grid = linspace(cfg.x_min, cfg.x_max, cfg.x_samples);
    const std::vector<double> t_grid = linspace(cfg.t_min, cfg.t_max, cfg.t_samples);

    for (const double m : masses) {
        const double k_c = cfg.wavenumber(m);
        const PacketSpec spec{cfg.sigma0, k_c, cfg.x_c, cfg.alpha};

        std::ostringstream meta;
        meta << "scenario=fig23 mass=" << fmt_g(m, cfg.precision)
             << " V0=" << fmt_g(barrier.V0, cfg.precision)
             << " a=" << fmt_g(barrier.a, cfg.precision)
             << " sigma0=" << fmt_g(cfg.sigma0, cfg.precision)
             << " alpha=" << fmt_g(cfg.alpha, cfg.precision)
             << " x_c=" << fmt_g(cfg.x_c, cfg.precision) << " k0=" << fmt_g(k_c, cfg.precision)
             << " t0=" << fmt_g(cfg.t0, cfg.precision) << " X=" << fmt_g(cfg.X, cfg.precision)
             << " method=" << run_method_name(cfg.method) << " precision=" << cfg.precision;

        std::vector<std::vector<double>> densities, currents;
        for (const RunMethod rm : methods) {
            if (rm == RunMethod::classical) {
                const ClassicalScatteringState st = classical_state(spec, barrier, m);
                std::vector<double> rho, j;
                rho.reserve(x_grid.size());
                for (const double x : x_grid)
                    rho.push_back(std::norm(rosen_wave(st, x, cfg.t0)));
                j.reserve(t_grid.size());
                for (const double t : t_grid)
                    j.push_back(classical_current_at_point(st, cfg.X, t));
                densities.push_back(std::move(rho));
                currents.push_back(std::move(j));
            } else {
                const Method qm =
                    rm == RunMethod::exact ? Method::exact : Method::stationary_phase;
                const SampledWave wave =
                    qm == Method::exact
                        ? transmitted_wave_exact(spec, barrier, m, x_grid, cfg.t0)
                        : transmitted_wave_stationary_phase(spec, barrier, m, x_grid, cfg.t0);
                densities.push_back(density(wave));
                currents.push_back(current_series(spec, barrier, m, cfg.X, t_grid, qm));
            }
        }

        const std::string tag = value_label(m);
        CsvWriter dw(base + "fig2_density_m" + tag + ".csv", meta.str(), columns_x,
                     cfg.precision);
        for (std::size_t i = 0; i < x_grid.size(); ++i) {
            std::vector<double> r{x_grid[i]};
            for (const auto& rho : densities)
                r.push_back(rho[i]);
            dw.row(r);
        }
        CsvWriter cw(base + "fig3_current_m" + tag + ".csv", meta.str(), columns_t,
                     cfg.precision);
        for (std::size_t i = 0; i < t_grid.size(); ++i) {
            std::vector<double> r{t_grid[i]};
            for (const auto& j : currents)
                r.push_back(j[i]);
            cw.row(r);
        }
        written.push_back(base + "fig2_density_m" + tag + ".csv");
        written.push_back(base + "fig3_current_m" + tag + ".csv");
    }

    std::ostringstream gp;
    gp << "# transmitted density snapshots and detector currents\n"
          "set datafile separator comma\n";
    gp << "plot";
    for (std::size_t i = 0; i < masses.size(); ++i)
        gp << (i ? ", \\\n    " : " ") << "'fig2_density_m" << value_label(masses[i])
           << ".csv' using 1:2 with lines title 'm=" << fmt_g(masses[i], 6) << "'";
    gp << "\npause -1\nplot";
    for (std::size_t i = 0; i < masses.size(); ++i)
        gp << (i ? ", \\\n    " : " ") << "'fig3_current_m" << value_label(masses[i])
           << ".csv' using 1:2 with lines title 'm=" << fmt_g(masses[i], 6) << "'";
    gp << "\n";
    write_text_file(base + "fig23.gp", gp.str());
    written.push_back(base + "fig23.gp");
    return written;
}

// ---------------------------------------------------------------------------
// fig4: mean quantum and classical arrival times and their difference over a
// mass sweep, one column per envelope distortion alpha.

inline std::vector<std::string> run_fig4(const ScenarioConfig& cfg, const std::string& out_dir) {
    detail::ensure_directory(out_dir);
    const Barrier barrier{cfg.V0, cfg.barrier_width(8.0)};
    const std::vector<double> masses = cfg.mass_list(logspace(5.0, 50.0, 10));
    const std::vector<double> alphas = cfg.alpha_list({-5.0, 0.0, 2.0, 5.0});
    const Method qm = cfg.method == RunMethod::exact ? Method::exact : Method::stationary_phase;

    std::ostringstream meta;
    meta << "scenario=fig4 V0=" << fmt_g(barrier.V0, cfg.precision)
         << " a=" << fmt_g(barrier.a, cfg.precision)
         << " sigma0=" << fmt_g(cfg.sigma0, cfg.precision)
         << " x_c=" << fmt_g(cfg.x_c, cfg.precision) << " X=" << fmt_g(cfg.X, cfg.precision)
         << (cfg.k0 ? " k0=" + fmt_g(*cfg.k0, cfg.precision)
                    : " u=" + fmt_g(cfg.u_frac.value_or(4.52e-3), cfg.precision))
         << " masses=" << join_values(masses, cfg.precision)
         << " alphas=" << join_values(alphas, cfg.precision)
         << " tau_q_method=" << method_name(qm) << " samples=" << cfg.samples
         << " precision=" << cfg.precision;

    std::vector<std::string> columns{"mass"};
    for (const double al : alphas)
        columns.push_back("alpha_" + value_label(al));

    const std::string base = out_dir + "/";
    CsvWriter wq(base + "fig4_tau_q.csv", meta.str(), columns, cfg.precision);
    CsvWriter wc(base + "fig4_tau_c.csv", meta.str(), columns, cfg.precision);
    CsvWriter wd(base + "fig4_tau_diff.csv", meta.str(), columns, cfg.precision);

    for (const double m : masses) {
        const double k_c = cfg.wavenumber(m);
        std::vector<double> r_q{m}, r_c{m}, r_d{m};
        for (const double al : alphas) {
            const PacketSpec spec{cfg.sigma0, k_c, cfg.x_c, al};
            const ClassicalScatteringState st = classical_state(spec, barrier, m);
            const double tau_c = mean_arrival_time_analytic(st, cfg.X);
            const double hint = cfg.t_hint.value_or(2.0 * tau_c);
            const ArrivalStats q =
                quantum_arrival_stats(spec, barrier, m, cfg.X, qm, hint, cfg.samples);
            r_q.push_back(q.mean);
            r_c.push_back(tau_c);
            r_d.push_back(q.mean - tau_c);
        }
        wq.row(r_q);
        wc.row(r_c);
        wd.row(r_d);
    }

    write_text_file(base + "fig4.gp",
                    "# arrival-time excess of the quantum packet over the classical ensemble\n"
                    "set datafile separator comma\n"
                    "set logscale x\n"
                    "set xlabel 'mass (MeV/c^2)'\n"
                    "plot 'fig4_tau_diff.csv' using 1:2 with linespoints title columnheader\n");
    return {base + "fig4_tau_q.csv", base + "fig4_tau_c.csv", base + "fig4_tau_diff.csv",
            base + "fig4.gp"};
}

// ---------------------------------------------------------------------------
// fig5: one-body density snapshots and the one-body current at the detector
// for the configured statistics.

inline std::vector<std::string> run_fig5(const ScenarioConfig& cfg, const std::string& out_dir) {
    detail::ensure_directory(out_dir);
    const TwoBodyBlock& tb = cfg.twobody;
    const std::string base = out_dir + "/";
    std::vector<std::string> written;

    std::ostringstream meta;
    meta << "scenario=fig5 hbar=" << fmt_g(tb.hbar_u, cfg.precision)
         << " mass=" << fmt_g(tb.mass_u, cfg.precision)
         << " sigma_a=" << fmt_g(tb.a.sigma0, cfg.precision)
         << " k_a=" << fmt_g(tb.a.k, cfg.precision) << " x_a=" << fmt_g(tb.a.x_c, cfg.precision)
         << " sigma_b=" << fmt_g(tb.b.sigma0, cfg.precision)
         << " k_b=" << fmt_g(tb.b.k, cfg.precision) << " x_b=" << fmt_g(tb.b.x_c, cfg.precision)
         << " x_d=" << fmt_g(tb.x_d, cfg.precision)
         << " times=" << join_values(tb.times, cfg.precision) << " statistics=";
    for (std::size_t i = 0; i < tb.statistics.size(); ++i)
        meta << (i ? "," : "") << statistics_name(tb.statistics[i]);
    meta << " precision=" << cfg.precision;

    std::vector<std::string> columns{"x"};
    for (const Statistics s : tb.statistics) {
        if (s == Statistics::maxwell_boltzmann) {
            columns.push_back("MB_a");
            columns.push_back("MB_b");
            columns.push_back("MB_avg");
        } else {
            columns.push_back(statistics_name(s));
        }
    }

    const std::vector<double> x_grid = linspace(tb.x_min, tb.x_max, tb.x_samples);
    for (const double t : tb.times) {
        const std::string path = base + "fig5_density_t" + value_label(t) + ".csv";
        CsvWriter w(path, meta.str(), columns, cfg.precision);
        for (const double x : x_grid) {
            std::vector<double> r{x};
            for (const Statistics s : tb.statistics) {
                TwoBodySpec spec{tb.a, tb.b, s};
                if (s == Statistics::maxwell_boltzmann) {
                    const auto [ra, rb] = mb_density_pair(spec, tb.hbar_u, tb.mass_u, x, t);
                    r.push_back(ra);
                    r.push_back(rb);
                    r.push_back(0.5 * (ra + rb));
                } else {
                    r.push_back(one_body_density(spec, tb.hbar_u, tb.mass_u, x, t));
                }
            }
            w.row(r);
        }
        written.push_back(path);
    }

    columns[0] = "t";
    const std::vector<double> t_grid = linspace(tb.t_min, tb.t_max, tb.t_samples);
    {
        CsvWriter w(base + "fig5_current.csv", meta.str(), columns, cfg.precision);
        for (const double t : t_grid) {
            std::vector<double> r{t};
            for (const Statistics s : tb.statistics) {
                TwoBodySpec spec{tb.a, tb.b, s};
                if (s == Statistics::maxwell_boltzmann) {
                    const auto [ja, jb] = mb_current_pair(spec, tb.hbar_u, tb.mass_u, tb.x_d, t);
                    r.push_back(ja);
                    r.push_back(jb);
                    r.push_back(0.5 * (ja + jb));
                } else {
                    r.push_back(one_body_current(spec, tb.hbar_u, tb.mass_u, tb.x_d, t));
                }
            }
            w.row(r);
        }
        written.push_back(base + "fig5_current.csv");
    }

    write_text_file(base + "fig5.gp",
                    "# one-body density snapshots and detector current\n"
                    "set datafile separator comma\n"
                    "plot 'fig5_density_t" + value_label(tb.times.front())
                        + ".csv' using 1:2 with lines title columnheader\n"
                          "pause -1\n"
                          "plot 'fig5_current.csv' using 1:2 with lines title columnheader\n");
    written.push_back(base + "fig5.gp");
    return written;
}

// ---------------------------------------------------------------------------
// arrival: sampled arrival-time statistics per mass and method.

inline std::vector<std::string> run_arrival(const ScenarioConfig& cfg,
                                            const std::string& out_dir) {
    detail::ensure_directory(out_dir);
    const Barrier barrier{cfg.V0, cfg.barrier_width(8.0)};
    const std::vector<double> masses = cfg.mass_list({5.0});
    const std::vector<RunMethod> methods = resolved_methods(cfg.method);

    std::ostringstream meta;
    meta << "scenario=arrival V0=" << fmt_g(barrier.V0, cfg.precision)
         << " a=" << fmt_g(barrier.a, cfg.precision)
         << " sigma0=" << fmt_g(cfg.sigma0, cfg.precision)
         << " alpha=" << fmt_g(cfg.alpha, cfg.precision)
         << " x_c=" << fmt_g(cfg.x_c, cfg.precision) << " X=" << fmt_g(cfg.X, cfg.precision)
         << (cfg.k0 ? " k0=" + fmt_g(*cfg.k0, cfg.precision)
                    : " u=" + fmt_g(cfg.u_frac.value_or(4.52e-3), cfg.precision))
         << " masses=" << join_values(masses, cfg.precision)
         << " method=" << run_method_name(cfg.method) << " samples=" << cfg.samples
         << " precision=" << cfg.precision;

    const std::string path = out_dir + "/arrival.csv";
    CsvWriter w(path, meta.str(), {"mass", "method", "mean", "rms"}, cfg.precision);
    for (const double m : masses) {
        const double k_c = cfg.wavenumber(m);
        const PacketSpec spec{cfg.sigma0, k_c, cfg.x_c, cfg.alpha};
        const ClassicalScatteringState st = classical_state(spec, barrier, m);
        const double hint = cfg.t_hint.value_or(2.0 * mean_arrival_time_analytic(st, cfg.X));
        for (const RunMethod rm : methods) {
            ArrivalStats stats;
            if (rm == RunMethod::classical) {
                stats = classical_arrival_stats(st, cfg.X, hint, cfg.samples);
            } else {
                const Method qm =
                    rm == RunMethod::exact ? Method::exact : Method::stationary_phase;
                stats = quantum_arrival_stats(spec, barrier, m, cfg.X, qm, hint, cfg.samples);
            }
            w.text_row({fmt_g(m, cfg.precision), run_method_name(rm),
                        fmt_g(stats.mean, cfg.precision), fmt_g(stats.rms, cfg.precision)});
        }
    }
    return {path};
}

// ---------------------------------------------------------------------------
// sweep: arrival-time means and spreads over a mass x alpha grid.

inline std::vector<std::string> run_sweep(const ScenarioConfig& cfg, const std::string& out_dir) {
    detail::ensure_directory(out_dir);
    const Barrier barrier{cfg.V0, cfg.barrier_width(8.0)};
    const std::vector<double> masses = cfg.mass_list(logspace(5.0, 50.0, 10));
    const std::vector<double> alphas = cfg.alpha_list({cfg.alpha});
    const Method qm = cfg.method == RunMethod::exact ? Method::exact : Method::stationary_phase;

    std::ostringstream meta;
    meta << "scenario=sweep V0=" << fmt_g(barrier.V0, cfg.precision)
         << " a=" << fmt_g(barrier.a, cfg.precision)
         << " sigma0=" << fmt_g(cfg.sigma0, cfg.precision)
         << " x_c=" << fmt_g(cfg.x_c, cfg.precision) << " X=" << fmt_g(cfg.X, cfg.precision)
         << (cfg.k0 ? " k0=" + fmt_g(*cfg.k0, cfg.precision)
                    : " u=" + fmt_g(cfg.u_frac.value_or(4.52e-3), cfg.precision))
         << " masses=" << join_values(masses, cfg.precision)
         << " alphas=" << join_values(alphas, cfg.precision)
         << " tau_q_method=" << method_name(qm) << " samples=" << cfg.samples
         << " precision=" << cfg.precision;

    const std::string path = out_dir + "/sweep.csv";
    CsvWriter w(path, meta.str(),
                {"mass", "alpha", "tau_c", "dtau_c", "tau_q", "dtau_q", "diff"}, cfg.precision);
    for (const double m : masses) {
        const double k_c = cfg.wavenumber(m);
        for (const double al : alphas) {
            const PacketSpec spec{cfg.sigma0, k_c, cfg.x_c, al};
            const ClassicalScatteringState st = classical_state(spec, barrier, m);
            const double tau_c = mean_arrival_time_analytic(st, cfg.X);
            const double dtau_c = arrival_fluctuation(spec, st.u);
            const double hint = cfg.t_hint.value_or(2.0 * tau_c);
            const ArrivalStats q =
                quantum_arrival_stats(spec, barrier, m, cfg.X, qm, hint, cfg.samples);
            w.row({m, al, tau_c, dtau_c, q.mean, q.rms, q.mean - tau_c});
        }
    }
    return {path};
}

// One-line resolved summary used by the validate subcommand.
inline std::string config_summary(const ScenarioConfig& cfg) {
    std::ostringstream s;
    s << "packet: x_c=" << fmt_g(cfg.x_c, cfg.precision)
      << " sigma0=" << fmt_g(cfg.sigma0, cfg.precision)
      << " alpha=" << fmt_g(cfg.alpha, cfg.precision);
    if (cfg.k0)
        s << " k0=" << fmt_g(*cfg.k0, cfg.precision);
    else
        s << " u=" << fmt_g(cfg.u_frac.value_or(4.52e-3), cfg.precision);
    if (cfg.mass)
        s << " mass=" << fmt_g(*cfg.mass, cfg.precision);
    else if (cfg.mass_sweep)
        s << " mass_sweep=" << join_values(*cfg.mass_sweep, cfg.precision);
    else
        s << " mass=scenario-default";
    if (cfg.alphas)
        s << " alphas=" << join_values(*cfg.alphas, cfg.precision);
    s << "\nbarrier: V0=" << fmt_g(cfg.V0, cfg.precision) << " a="
      << (cfg.width ? fmt_g(*cfg.width, cfg.precision) : std::string("scenario-default"));
    s << "\ndetector: X=" << fmt_g(cfg.X, cfg.precision) << " t0=" << fmt_g(cfg.t0, cfg.precision)
      << " x_window=[" << fmt_g(cfg.x_min, cfg.precision) << ","
      << fmt_g(cfg.x_max, cfg.precision) << "]x" << cfg.x_samples << " t_window=["
      << fmt_g(cfg.t_min, cfg.precision) << "," << fmt_g(cfg.t_max, cfg.precision) << "]x"
      << cfg.t_samples << " samples=" << cfg.samples;
    if (cfg.t_hint)
        s << " t_hint=" << fmt_g(*cfg.t_hint, cfg.precision);
    s << "\nmethod: " << run_method_name(cfg.method);
    const TwoBodyBlock& tb = cfg.twobody;
    s << "\ntwobody: hbar=" << fmt_g(tb.hbar_u, cfg.precision)
      << " mass=" << fmt_g(tb.mass_u, cfg.precision) << " a=(" << fmt_g(tb.a.sigma0, cfg.precision)
      << "," << fmt_g(tb.a.k, cfg.precision) << "," << fmt_g(tb.a.x_c, cfg.precision) << ") b=("
      << fmt_g(tb.b.sigma0, cfg.precision) << "," << fmt_g(tb.b.k, cfg.precision) << ","
      << fmt_g(tb.b.x_c, cfg.precision) << ") x_d=" << fmt_g(tb.x_d, cfg.precision)
      << " times=" << join_values(tb.times, cfg.precision) << " statistics=";
    for (std::size_t i = 0; i < tb.statistics.size(); ++i)
        s << (i ? "," : "") << statistics_name(tb.statistics[i]);
    s << "\noutput: directory=" << cfg.directory << " precision=" << cfg.precision;
    return s.str();
}

} // namespace qcarrival
