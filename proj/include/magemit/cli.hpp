#pragma once

#include <cmath>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "magemit/constants.hpp"
#include "magemit/emission.hpp"
#include "magemit/errors.hpp"
#include "magemit/fields.hpp"
#include "magemit/potential.hpp"
#include "magemit/quantum.hpp"
#include "magemit/table.hpp"
#include "magemit/tunneling.hpp"
#include "magemit/version.hpp"

namespace magemit::cli {

/// Resolved invocation: which command ran, with which inputs, writing where.
struct RunConfig {
    std::string command;
    nlohmann::ordered_json parameters; ///< full input echo, flag name -> value
    OutputFormat output_format = OutputFormat::csv;
    std::optional<std::string> output_path;
    bool no_timestamp = false;
};

namespace detail {

inline std::string utc_timestamp() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline nlohmann::ordered_json make_metadata(const RunConfig& run) {
    nlohmann::ordered_json meta;
    meta["tool"] = tool_name;
    meta["version"] = tool_version;
    meta["command"] = run.command;
    meta["inputs"] = run.parameters;
    if (!run.no_timestamp) meta["timestamp"] = utc_timestamp();
    return meta;
}

inline BarrierKind kind_from_name(const std::string& name) {
    if (name == "bare") return BarrierKind::bare_triangular;
    if (name == "schottky") return BarrierKind::schottky;
    if (name == "magnetic") return BarrierKind::magnetic_parallel;
    if (name == "collinear") return BarrierKind::collinear_step;
    throw domain_error("unknown barrier kind '" + name + "'");
}

inline PotentialSpec build_spec(const std::string& kind_name, double e_field, double b_induction,
                                double alpha, double barrier_height_ev) {
    const BarrierKind kind = kind_from_name(kind_name);
    FieldConfiguration config(e_field, b_induction, alpha);
    if (kind == BarrierKind::collinear_step)
        return collinear_barrier(config, ev_to_joule(barrier_height_ev));
    return PotentialSpec{kind, config, 0.0};
}

inline const char* status_name(EmissionStatus s) {
    return s == EmissionStatus::ok ? "ok" : "beyond_critical_field";
}

} // namespace detail

/// Parse one command line (argv[0] = program name) and run it.
/// Exit codes: 0 success, 1 domain/runtime error, 2 usage error.
inline int parse_and_dispatch(const std::vector<std::string>& argv) {
    CLI::App app{std::string(tool_name) + " - field emission in crossed fields"};
    app.require_subcommand(1);

    // shared output options, registered on every subcommand
    std::string format = "csv";
    std::string output_path;
    bool no_timestamp = false;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        sub->add_option("--output", output_path, "output file (default: stdout)");
        sub->add_flag("--no-timestamp", no_timestamp,
                      "omit the timestamp from JSON metadata (for reproducible files)");
    };

    double e_field = 0.0, b_induction = 0.0, alpha = 0.0;
    double energy_ev = 0.0, phi_ev = 0.0, barrier_height_ev = 10.0;
    double p_z = 0.0, z_coord = 0.0;
    double x_min = 1e-10, x_max = 1.2e-3;
    int landau_n = 0;
    std::size_t samples = 2000;
    std::size_t wave_samples = 1001;
    std::size_t numerov_samples = 4001;
    std::string kind = "magnetic";
    std::string method = "wkb";
    std::vector<double> e_grid, b_grid;

    CLI::App* c_potential = app.add_subcommand("potential", "tabulate a surface barrier V(x)");
    c_potential->add_option("--efield", e_field, "applied field E0 (V/m)")->required();
    c_potential->add_option("--bfield", b_induction, "magnetic induction B0 (T)")
        ->capture_default_str();
    c_potential->add_option("--alpha", alpha, "field angle (rad)")->capture_default_str();
    c_potential->add_option("--kind", kind, "bare | schottky | magnetic | collinear")
        ->check(CLI::IsMember({"bare", "schottky", "magnetic", "collinear"}))
        ->capture_default_str();
    c_potential->add_option("--barrier-height", barrier_height_ev,
                            "step height C (eV), collinear kind only")
        ->capture_default_str();
    c_potential->add_option("--xmin", x_min, "first position (m)")->capture_default_str();
    c_potential->add_option("--xmax", x_max, "last position (m)")->capture_default_str();
    c_potential->add_option("--samples", samples, "number of rows")->capture_default_str();
    add_common(c_potential);

    CLI::App* c_fig2 = app.add_subcommand(
        "fig2", "side-by-side barrier profiles with and without the parallel induction");
    c_fig2->add_option("--efield", e_field, "applied field E0 (V/m)")->default_val(1e8);
    c_fig2->add_option("--bfield", b_induction, "magnetic induction B0 (T)")->default_val(1.0);
    c_fig2->add_option("--xmin", x_min, "first position (m)")->capture_default_str();
    c_fig2->add_option("--xmax", x_max, "last position (m)")->capture_default_str();
    c_fig2->add_option("--samples", samples, "number of rows (log-spaced)")
        ->capture_default_str();
    add_common(c_fig2);

    CLI::App* c_barrier = app.add_subcommand("barrier", "turning points, peak, zero crossings "
                                                        "and emission window at one energy");
    c_barrier->add_option("--efield", e_field, "applied field E0 (V/m)")->required();
    c_barrier->add_option("--bfield", b_induction, "magnetic induction B0 (T)")
        ->capture_default_str();
    c_barrier->add_option("--alpha", alpha, "field angle (rad)")->capture_default_str();
    c_barrier->add_option("--kind", kind, "bare | schottky | magnetic | collinear")
        ->check(CLI::IsMember({"bare", "schottky", "magnetic", "collinear"}))
        ->capture_default_str();
    c_barrier->add_option("--barrier-height", barrier_height_ev,
                          "step height C (eV), collinear kind only")
        ->capture_default_str();
    c_barrier->add_option("--energy", energy_ev, "electron energy (eV, on the barrier scale)")
        ->capture_default_str();
    add_common(c_barrier);

    CLI::App* c_landau = app.add_subcommand("landau", "quantized transverse level data");
    c_landau->add_option("--bfield", b_induction, "magnetic induction B0 (T)")->required();
    c_landau->add_option("--efield", e_field, "applied field E0 (V/m)")->capture_default_str();
    c_landau->add_option("--alpha", alpha, "field angle (rad)")->capture_default_str();
    c_landau->add_option("--n", landau_n, "level index")->capture_default_str();
    c_landau->add_option("--pz", p_z, "canonical momentum along z (kg m/s)")
        ->capture_default_str();
    add_common(c_landau);

    CLI::App* c_wave = app.add_subcommand("wavefunction", "transverse oscillator eigenfunction");
    c_wave->add_option("--bfield", b_induction, "magnetic induction B0 (T)")->required();
    c_wave->add_option("--efield", e_field, "applied field E0 (V/m)")->capture_default_str();
    c_wave->add_option("--alpha", alpha, "field angle (rad)")->capture_default_str();
    c_wave->add_option("--n", landau_n, "level index (<= 50)")->capture_default_str();
    c_wave->add_option("--pz", p_z, "canonical momentum along z (kg m/s)")->capture_default_str();
    c_wave->add_option("--z", z_coord, "z coordinate (m)")->capture_default_str();
    CLI::Option* wave_xmin = c_wave->add_option("--xmin", x_min, "first position (m)");
    CLI::Option* wave_xmax = c_wave->add_option("--xmax", x_max, "last position (m)");
    c_wave->add_option("--samples", wave_samples, "number of rows")->capture_default_str();
    add_common(c_wave);

    CLI::App* c_trans = app.add_subcommand("transmission", "barrier-penetration coefficient");
    c_trans->add_option("--efield", e_field, "applied field E0 (V/m)")->required();
    c_trans->add_option("--bfield", b_induction, "magnetic induction B0 (T)")
        ->capture_default_str();
    c_trans->add_option("--alpha", alpha, "field angle (rad)")->capture_default_str();
    c_trans->add_option("--kind", kind, "bare | schottky | magnetic | collinear")
        ->check(CLI::IsMember({"bare", "schottky", "magnetic", "collinear"}))
        ->capture_default_str();
    c_trans->add_option("--barrier-height", barrier_height_ev,
                        "step height C (eV), collinear kind only")
        ->capture_default_str();
    CLI::Option* trans_energy =
        c_trans->add_option("--energy", energy_ev, "electron energy (eV, on the barrier scale)");
    CLI::Option* trans_phi = c_trans->add_option(
        "--phi", phi_ev, "work function (eV); shorthand for --energy -phi when --energy is absent");
    c_trans->add_option("--method", method, "wkb | numerov")
        ->check(CLI::IsMember({"wkb", "numerov"}))
        ->capture_default_str();
    c_trans->add_option("--samples", numerov_samples, "minimum grid points (numerov)")
        ->capture_default_str();
    add_common(c_trans);

    CLI::App* c_current = app.add_subcommand("current", "cold-emission current density");
    c_current->add_option("--efield", e_field, "applied field E0 (V/m)")->required();
    c_current->add_option("--bfield", b_induction, "magnetic induction B0 (T)")
        ->capture_default_str();
    c_current->add_option("--phi", phi_ev, "work function (eV)")->required();
    add_common(c_current);

    CLI::App* c_sweep = app.add_subcommand("sweep", "current density over an (E, B) grid");
    c_sweep->add_option("--egrid", e_grid, "comma list of fields (V/m)")
        ->required()
        ->delimiter(',');
    c_sweep->add_option("--bgrid", b_grid, "comma list of inductions (T)")
        ->required()
        ->delimiter(',');
    c_sweep->add_option("--phi", phi_ev, "work function (eV)")->required();
    add_common(c_sweep);

    std::vector<const char*> cargv;
    cargv.reserve(argv.size());
    for (const auto& s : argv) cargv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }

    RunConfig run;
    run.output_format = (format == "json") ? OutputFormat::json : OutputFormat::csv;
    if (!output_path.empty()) run.output_path = output_path;
    run.no_timestamp = no_timestamp;

    try {
        OutputTable table;
        auto& par = run.parameters;
        if (app.got_subcommand(c_potential)) {
            run.command = "potential";
            par = {{"efield", e_field}, {"bfield", b_induction}, {"alpha", alpha},
                   {"kind", kind},      {"xmin", x_min},         {"xmax", x_max},
                   {"samples", samples}};
            if (kind == "collinear") par["barrier_height"] = barrier_height_ev;
            const PotentialSpec spec =
                detail::build_spec(kind, e_field, b_induction, alpha, barrier_height_ev);
            if (samples < 2) throw domain_error("potential: need at least 2 samples");
            table.columns = {"x_m", "V_J", "V_eV"};
            const double step = (x_max - x_min) / static_cast<double>(samples - 1);
            for (std::size_t i = 0; i < samples; ++i) {
                const double x = x_min + static_cast<double>(i) * step;
                const double v = evaluate_potential(spec, x);
                table.rows.push_back({x, v, joule_to_ev(v)});
            }
        } else if (app.got_subcommand(c_fig2)) {
            run.command = "fig2";
            par = {{"efield", e_field}, {"bfield", b_induction}, {"xmin", x_min},
                   {"xmax", x_max},     {"samples", samples}};
            if (samples < 2) throw domain_error("fig2: need at least 2 samples");
            if (!(x_min > 0.0) || !(x_max > x_min))
                throw domain_error("fig2: need 0 < xmin < xmax");
            const PotentialSpec flat{BarrierKind::schottky,
                                     FieldConfiguration(e_field, 0.0, 0.0)};
            const PotentialSpec mag{BarrierKind::magnetic_parallel,
                                    FieldConfiguration(e_field, b_induction, 0.0)};
            table.columns = {"x_m", "V_B0_eV", "V_B_eV"};
            const double ratio = std::log(x_max / x_min) / static_cast<double>(samples - 1);
            for (std::size_t i = 0; i < samples; ++i) {
                const double x = (i + 1 == samples)
                                     ? x_max
                                     : x_min * std::exp(static_cast<double>(i) * ratio);
                table.rows.push_back({x, joule_to_ev(evaluate_potential(flat, x)),
                                      joule_to_ev(evaluate_potential(mag, x))});
            }
        } else if (app.got_subcommand(c_barrier)) {
            run.command = "barrier";
            par = {{"efield", e_field}, {"bfield", b_induction}, {"alpha", alpha},
                   {"kind", kind},      {"energy", energy_ev}};
            if (kind == "collinear") par["barrier_height"] = barrier_height_ev;
            const PotentialSpec spec =
                detail::build_spec(kind, e_field, b_induction, alpha, barrier_height_ev);
            const BarrierAnalysis an = turning_points(spec, ev_to_joule(energy_ev));
            table.columns = {"feature", "index", "x_m", "value_eV"};
            table.rows.push_back(
                {std::string("peak"), 0LL, an.peak_position, joule_to_ev(an.peak_value)});
            long long idx = 0;
            for (double r : an.turning_points)
                table.rows.push_back({std::string("turning_point"), idx++, r, energy_ev});
            idx = 0;
            for (double r : an.zero_crossings)
                table.rows.push_back({std::string("zero_crossing"), idx++, r, 0.0});
            if (an.emission_window) {
                table.rows.push_back(
                    {std::string("window_start"), 0LL, an.emission_window->first, energy_ev});
                table.rows.push_back(
                    {std::string("window_end"), 0LL, an.emission_window->second, energy_ev});
            }
        } else if (app.got_subcommand(c_landau)) {
            run.command = "landau";
            par = {{"bfield", b_induction}, {"efield", e_field}, {"alpha", alpha},
                   {"n", landau_n},         {"pz", p_z}};
            const LandauState state(landau_n, p_z, FieldConfiguration(e_field, b_induction, alpha));
            const double energy = landau_energy(state);
            table.columns = {"n",   "pz_kg_m_per_s",  "omega_b_rad_per_s", "magnetic_length_m",
                             "v_d_m_per_s", "x0_m",   "energy_J",          "energy_eV",
                             "scaled_residual"};
            table.rows.push_back({static_cast<long long>(state.n), state.p_z,
                                  cyclotron_frequency(state.config), magnetic_length(state.config),
                                  drift_velocity(state.config),
                                  guiding_center_offset(state.config, state.p_z), energy,
                                  joule_to_ev(energy), dimensionless_energy_check(state)});
        } else if (app.got_subcommand(c_wave)) {
            run.command = "wavefunction";
            const LandauState state(landau_n, p_z, FieldConfiguration(e_field, b_induction, alpha));
            const double a = magnetic_length(state.config);
            const double x0 = guiding_center_offset(state.config, state.p_z);
            if (!*wave_xmin) x_min = x0 - 8.0 * a;
            if (!*wave_xmax) x_max = x0 + 8.0 * a;
            par = {{"bfield", b_induction}, {"efield", e_field}, {"alpha", alpha},
                   {"n", landau_n},         {"pz", p_z},         {"z", z_coord},
                   {"xmin", x_min},         {"xmax", x_max},     {"samples", wave_samples}};
            if (wave_samples < 2) throw domain_error("wavefunction: need at least 2 samples");
            table.columns = {"x_m", "xi", "psi_re", "psi_im", "abs_psi2"};
            const double step = (x_max - x_min) / static_cast<double>(wave_samples - 1);
            for (std::size_t i = 0; i < wave_samples; ++i) {
                const double x = x_min + static_cast<double>(i) * step;
                const auto psi = transverse_wavefunction(state, x, z_coord);
                table.rows.push_back(
                    {x, xi_of_x(state, x), psi.real(), psi.imag(), std::norm(psi)});
            }
        } else if (app.got_subcommand(c_trans)) {
            run.command = "transmission";
            if (!*trans_energy && *trans_phi) energy_ev = -phi_ev;
            par = {{"efield", e_field}, {"bfield", b_induction}, {"alpha", alpha},
                   {"kind", kind},      {"energy", energy_ev},   {"method", method}};
            if (kind == "collinear") par["barrier_height"] = barrier_height_ev;
            const PotentialSpec spec =
                detail::build_spec(kind, e_field, b_induction, alpha, barrier_height_ev);
            const double energy = ev_to_joule(energy_ev);
            TransmissionResult result;
            if (method == "wkb") {
                result = wkb_transmission(spec, energy);
            } else {
                const auto [xs, vs] = numerov_barrier_grid(spec, energy, numerov_samples);
                result = numerov_transmission(xs, vs, energy);
                par["samples"] = xs.size();
            }
            table.columns = {"method", "coefficient", "exponent", "ln_d", "above_barrier"};
            table.rows.push_back({std::string(method), result.coefficient, result.exponent,
                                  -result.exponent,
                                  static_cast<long long>(result.above_barrier ? 1 : 0)});
        } else if (app.got_subcommand(c_current)) {
            run.command = "current";
            par = {{"efield", e_field}, {"bfield", b_induction}, {"phi", phi_ev}};
            // A single-point call must fail loudly in the locked regime; the
            // reduced-field routine carries the critical induction in its error.
            const double e_eff =
                lorentz_reduced_field(FieldConfiguration(e_field, b_induction, 0.0));
            const CurrentDensity cd = fn_current_density(e_eff, ev_to_joule(phi_ev));
            table.columns = {"e_applied_V_per_m", "b_applied_T",  "phi_eV",
                             "e_effective_V_per_m", "j_A_per_m2", "ln_j",
                             "nordheim_y",          "nordheim_v", "nordheim_t",
                             "status"};
            table.rows.push_back({e_field, b_induction, phi_ev, e_eff, cd.j, cd.ln_j, cd.y, cd.v,
                                  cd.t, std::string("ok")});
        } else if (app.got_subcommand(c_sweep)) {
            run.command = "sweep";
            par = {{"egrid", e_grid}, {"bgrid", b_grid}, {"phi", phi_ev}};
            const SweepTable result =
                sweep(e_grid, b_grid, ev_to_joule(phi_ev),
                      run.no_timestamp ? std::string{} : detail::utc_timestamp());
            table.columns = {"e_applied_V_per_m", "b_applied_T", "e_effective_V_per_m",
                             "j_A_per_m2",        "ln_j",        "status"};
            for (const auto& point : result.rows)
                table.rows.push_back({point.e_applied, point.b_applied, point.e_effective,
                                      point.current_density, point.ln_current_density,
                                      std::string(detail::status_name(point.status))});
        }
        emit_table(table, run.output_format, run.output_path, detail::make_metadata(run));
        return 0;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace magemit::cli
