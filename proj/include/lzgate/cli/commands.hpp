// Copyright 2026 The lzgate Authors
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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lzgate/cli/config.hpp"
#include "lzgate/lzgate.hpp"

namespace lzgate::cli {

enum class Format { csv, json };

inline Format parse_format(std::string_view name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw ConfigError("unknown format '" + std::string(name) + "'");
}

/// Output of one subcommand. sidecar is empty unless the command emits one.
struct CommandResult {
    std::string output;
    std::string sidecar;
    int exit_code = kExitOk;
};

namespace detail {

// Tabular output shared by the csv and json formats.
struct Table {
    std::string units;
    std::vector<std::string> columns;
    std::vector<nlohmann::json> rows;  // each an array

    [[nodiscard]] std::string render(Format format) const {
        if (format == Format::json) {
            nlohmann::json doc;
            doc["units"] = units;
            doc["columns"] = columns;
            doc["rows"] = rows;
            return doc.dump(2) + "\n";
        }
        std::string out = "# " + units + "\n";
        for (std::size_t i = 0; i < columns.size(); ++i) {
            out += (i ? "," : "") + columns[i];
        }
        out += "\n";
        for (const auto &row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ",";
                const auto &cell = row[i];
                if (cell.is_string()) {
                    out += cell.get<std::string>();
                } else if (cell.is_boolean()) {
                    out += cell.get<bool>() ? "1" : "0";
                } else if (cell.is_number_integer()) {
                    out += std::to_string(cell.get<long long>());
                } else {
                    out += format_number(cell.get<double>());
                }
            }
            out += "\n";
        }
        return out;
    }
};

inline EvolveOptions read_evolve(ConfigReader &cfg, double default_tol) {
    EvolveOptions opts;
    opts.tol = cfg.number("tol", default_tol);
    opts.step_phase = cfg.number("step_phase", opts.step_phase);
    if (!(opts.tol >= 1e-12 && opts.tol <= 1e-6)) {
        throw ConfigError("tol must lie in [1e-12, 1e-6]");
    }
    if (!(opts.step_phase > 0.0)) throw ConfigError("step_phase must be positive");
    return opts;
}

inline std::vector<double> read_g_list(ConfigReader &cfg,
                                       const std::vector<double> &fallback) {
    std::vector<double> g = cfg.numbers("g", fallback);
    if (g.empty()) throw ConfigError("g list must not be empty");
    for (double x : g) {
        if (!(x > 0.0)) throw ConfigError("g values must be positive");
    }
    return g;
}

}  // namespace detail

/**
 * @brief Occupation of the initially empty state through one crossing, in
 * both bases, for each g.
 *
 * Config: g (list), t_range [lo, hi] in units of rate^-1/2 (default
 * [-10, 10]), rate (1), samples (401), offset (0), suppression_factor (2),
 * threshold_factor, tol (1e-9), step_phase.
 */
inline CommandResult cmd_crossing(const nlohmann::json &config, Format format) {
    ConfigReader cfg(config, "crossing");
    const auto g_list = detail::read_g_list(cfg, {1.0, 0.47, 0.33, 0.21});
    const auto t_range = cfg.numbers("t_range", {-10.0, 10.0});
    const double rate = cfg.number("rate", 1.0);
    const long samples = cfg.integer("samples", 401);
    TraceOptions opts;
    opts.offset = cfg.number("offset", 0.0);
    opts.suppression_factor =
        cfg.number("suppression_factor", opts.suppression_factor);
    const double threshold =
        cfg.number("threshold_factor", kDefaultThresholdFactor);
    opts.evolve = detail::read_evolve(cfg, 1e-9);
    cfg.finish();

    if (t_range.size() != 2 || !(t_range[0] < 0.0 && t_range[1] > 0.0)) {
        throw ConfigError("t_range must be [lo, hi] with lo < 0 < hi");
    }
    if (!(rate > 0.0)) throw ConfigError("rate must be positive");
    if (samples < 2) throw ConfigError("samples must be at least 2");

    const double root_rate = std::sqrt(rate);
    detail::Table table;
    table.units = "units: sweep rate eta = " + format_number(rate) +
                  "; t_scaled = (t - t_c) sqrt(eta); occupation of the "
                  "initially empty state";
    table.columns = {"g", "basis", "t_scaled", "occupation",
                     "flag_near_crossing"};
    for (double g : g_list) {
        // D(t) = -rate t, so t = t_scaled / sqrt(rate) maps to D = -sqrt(rate) t_scaled
        const LinearSweepPulse pulse(g * root_rate, rate,
                                     -root_rate * t_range[0],
                                     -root_rate * t_range[1], 0.0, threshold);
        const CrossingTraces traces =
            crossing_traces(pulse, static_cast<std::size_t>(samples), opts);
        for (const auto &[name, trace] :
             {std::pair{"adiabatic", &traces.adiabatic},
              std::pair{"computational", &traces.computational}}) {
            for (const auto &s : *trace) {
                table.rows.push_back(nlohmann::json::array(
                    {g, name, (s.time - pulse.crossing_time()) * root_rate,
                     s.occupation, s.near_crossing}));
            }
        }
    }
    return {table.render(format), "", kExitOk};
}

/**
 * @brief alpha(g) and Phi(g) on a uniform grid.
 *
 * Config: g_min (0.002), g_max (4.0), g_step (0.002).
 */
inline CommandResult cmd_angles(const nlohmann::json &config, Format format) {
    ConfigReader cfg(config, "angles");
    const double g_min = cfg.number("g_min", 0.002);
    const double g_max = cfg.number("g_max", 4.0);
    const double g_step = cfg.number("g_step", 0.002);
    cfg.finish();
    if (!(g_min > 0.0 && g_max >= g_min && g_step > 0.0)) {
        throw ConfigError("need 0 < g_min <= g_max and g_step > 0");
    }
    const auto count =
        static_cast<long>(std::floor((g_max - g_min) / g_step + 1e-9)) + 1;
    if (count > 10'000'000) throw ConfigError("angle grid too large");

    detail::Table table;
    table.units = "units: dimensionless coupling g; angles in radians";
    table.columns = {"g", "alpha", "phi"};
    for (long k = 0; k < count; ++k) {
        const double g = g_min + static_cast<double>(k) * g_step;
        const RotationAngles a = rotation_angles(g);
        table.rows.push_back(nlohmann::json::array({g, a.alpha, a.phi}));
    }
    return {table.render(format), "", kExitOk};
}

namespace detail {

inline nlohmann::json pulse_json(const LinearSweepPulse &p) {
    return {{"coupling", p.coupling()},
            {"g", p.g()},
            {"sweep_rate", p.sweep_rate()},
            {"delta_start", p.delta_start()},
            {"delta_end", p.delta_end()},
            {"time_start", p.time_start()},
            {"time_end", p.time_end()}};
}

inline nlohmann::json pi_json(const PiPulseSpec &spec) {
    nlohmann::json out = pulse_json(spec.pulse);
    out["near"] = spec.near();
    out["far"] = spec.far();
    out["compensation_residuals"] = spec.compensation_residuals;
    out["quantization_defect"] = spec.quantization_defect;
    return out;
}

inline nlohmann::json sequence_json(const CompositeSequence &seq) {
    return {{"delta_star", seq.working.delta_start()},
            {"working", pulse_json(seq.working)},
            {"leading", pi_json(seq.leading)},
            {"trailing", pi_json(seq.trailing)},
            {"quantization_residuals", seq.quantization_residuals()}};
}

inline CompensationMethod parse_compensation(const std::string &name) {
    if (name == "full") return CompensationMethod::full;
    if (name == "simplified") return CompensationMethod::simplified;
    throw ConfigError("unknown compensation '" + name + "'");
}

}  // namespace detail

/**
 * @brief Single-pulse and composite gate error against eps/gamma.
 *
 * Config: g (list), g_pi (3), delta_target (10), eps_over_gamma {lo, hi,
 * count} (1e-3, 1, 60), mode (exact), compensation (full),
 * leakage_budget, threshold_factor, tol (1e-9), step_phase. A "design" key
 * (as written to the sidecar) is accepted and ignored, so the sidecar can be
 * replayed as a config.
 */
inline CommandResult cmd_sweep(const nlohmann::json &config, Format format) {
    ConfigReader cfg(config, "sweep");
    const auto g_list = detail::read_g_list(cfg, {2.0, 1.2, 1.0, 0.3});
    const double g_pi = cfg.number("g_pi", 3.0);
    const double delta_target = cfg.number("delta_target", 10.0);
    ConfigReader grid = cfg.object("eps_over_gamma");
    const double lo = grid.number("lo", 1e-3);
    const double hi = grid.number("hi", 1.0);
    const long count = grid.integer("count", 60);
    grid.finish();
    const std::string mode_name = cfg.string("mode", "exact");
    DesignOptions design;
    design.compensation =
        detail::parse_compensation(cfg.string("compensation", "full"));
    design.leakage_budget = cfg.number("leakage_budget", design.leakage_budget);
    design.threshold_factor =
        cfg.number("threshold_factor", design.threshold_factor);
    const EvolveOptions evolve_opts = detail::read_evolve(cfg, 1e-9);
    cfg.skip("design");
    cfg.finish();

    if (!(lo > 0.0 && hi >= lo) || count < 1) {
        throw ConfigError("eps_over_gamma needs 0 < lo <= hi and count >= 1");
    }
    EvaluationMode mode;
    try {
        mode = parse_evaluation_mode(mode_name);
    } catch (const DomainError &e) {
        throw ConfigError(e.what());
    }
    const std::vector<double> ratios =
        log_grid(lo, hi, static_cast<std::size_t>(count));

    detail::Table table;
    table.units =
        "units: working sweep rate eta = 1; eps_over_gamma = offset / working "
        "coupling; errors are spectral norms";
    table.columns = {"g", "eps_over_gamma", "error_single", "error_composite",
                     "mode"};
    nlohmann::json designs = nlohmann::json::array();
    for (double g : g_list) {
        const CompositeSequence seq =
            design_composite(g, delta_target, g_pi, design);
        nlohmann::json d{{"g", g}};
        d.update(detail::sequence_json(seq));
        designs.push_back(d);
        std::vector<double> eps(ratios.size());
        std::transform(ratios.begin(), ratios.end(), eps.begin(),
                       [&](double r) { return r * seq.working.coupling(); });
        const auto rows = error_sweep(seq, eps, mode, evolve_opts);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            // report the requested ratio, not eps / coupling recomputed
            table.rows.push_back(nlohmann::json::array(
                {g, ratios[i], rows[i].error_single, rows[i].error_composite,
                 std::string(to_string(mode))}));
        }
    }

    nlohmann::json sidecar = config.is_object() ? config : nlohmann::json::object();
    sidecar["g"] = g_list;
    sidecar["g_pi"] = g_pi;
    sidecar["delta_target"] = delta_target;
    sidecar["eps_over_gamma"] = {{"lo", lo}, {"hi", hi}, {"count", count}};
    sidecar["mode"] = mode_name;
    sidecar["design"] = designs;

    if (format == Format::json) {
        nlohmann::json doc = nlohmann::json::parse(table.render(format));
        doc["design"] = designs;
        return {doc.dump(2) + "\n", sidecar.dump(2) + "\n", kExitOk};
    }
    return {table.render(format), sidecar.dump(2) + "\n", kExitOk};
}

namespace detail {

struct Check {
    std::string name;
    double deviation = 0.0;
    double threshold = 0.0;
    [[nodiscard]] bool pass() const { return deviation <= threshold; }
};

inline double dual_construction_deviation(std::uint64_t seed, long count) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (long k = 0; k < count; ++k) {
        const double g = 0.1 + 2.9 * unit(rng);
        const double rate = (0.5 + 1.5 * unit(rng)) * (unit(rng) < 0.5 ? -1 : 1);
        const double coupling = g * std::sqrt(std::abs(rate));
        const double floor =
            kDefaultThresholdFactor * std::max(coupling, std::sqrt(std::abs(rate)));
        const double sign = rate > 0 ? 1.0 : -1.0;
        const double d1 = sign * (floor + 1.0 + 30.0 * unit(rng));
        const double d2 = -sign * (floor + 1.0 + 30.0 * unit(rng));
        const LinearSweepPulse pulse(coupling, rate, d1, d2);
        const double offset = (unit(rng) - 0.5) * 2.0 * coupling;
        worst = std::max(worst, max_entry_deviation(
                                    scattering_matrix(pulse, offset),
                                    rotation_form(pulse, offset)));
    }
    return worst;
}

inline double analytic_numeric_deviation(const EvolveOptions &opts) {
    double worst = 0.0;
    for (double g : {0.3, 0.5, 1.0}) {
        const auto pulse = LinearSweepPulse::symmetric(g, 1.0, 10.0);
        worst = std::max(
            worst,
            max_entry_deviation(scattering_matrix(pulse),
                                pulse_matrix(pulse, 0.0, EvaluationMode::numeric,
                                             opts)));
    }
    return worst;
}

inline double metric_formula_deviation(std::uint64_t seed, long count) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (long k = 0; k < count; ++k) {
        const double d1 = (unit(rng) - 0.5) * 2.0 * kPi;
        const double d2 = (unit(rng) - 0.5) * 2.0 * kPi;
        const double alpha = kPi * unit(rng);
        const Complex2x2 s = rz(-2.0 * d2) * rx(alpha) * rz(2.0 * d1);
        worst = std::max(worst, std::abs(uncorrected_error_analytic(d1, d2, alpha) -
                                         gate_error(s, rx(alpha))));
    }
    // Pulse-level versions, single and composite.
    for (double g : {0.3, 1.0, 2.0}) {
        const CompositeSequence seq = design_composite(g, 10.0, 3.0);
        const Complex2x2 ideal = rx(rotation_angles(g).alpha);
        for (double r : {1e-2, 1e-1, 1.0}) {
            const double eps = r * seq.working.coupling();
            for (auto model : {OffsetModel::perturbative, OffsetModel::exact}) {
                worst = std::max(
                    worst,
                    std::abs(single_error_analytic(seq.working, eps, model) -
                             gate_error(rotation_form(seq.working, eps, model),
                                        ideal)));
                const auto mode = model == OffsetModel::exact
                                      ? EvaluationMode::exact
                                      : EvaluationMode::perturbative;
                worst = std::max(
                    worst, std::abs(composite_error_analytic(seq, eps, model) -
                                    gate_error(compose(seq, eps, mode), ideal,
                                               true)));
            }
        }
    }
    return worst;
}

inline double gamma_identity_deviation(double g) {
    const double y = g * g;
    const double lhs = std::exp(2.0 * log_gamma_imag(y).real());
    const double rhs = kPi / (y * std::sinh(kPi * y));
    return std::abs(lhs / rhs - 1.0);
}

inline double composite_sign_deviation(EvaluationMode mode,
                                       const EvolveOptions &opts) {
    double worst = 0.0;
    for (double g : {0.3, 1.0, 2.0}) {
        const CompositeSequence seq = design_composite(g, 10.0, 3.0);
        const Complex2x2 s = compose(seq, 0.0, mode, opts);
        worst = std::max(worst,
                         spectral_norm(s + rx(rotation_angles(g).alpha)));
    }
    return worst;
}

}  // namespace detail

/**
 * @brief Cross-pipeline self checks; exit 1 if any exceeds its threshold.
 *
 * Config: seed (20260101), random_pulses (1000), tol (1e-10), thresholds
 * {name: value} overriding the defaults listed in the report.
 */
inline CommandResult cmd_verify(const nlohmann::json &config, Format format) {
    ConfigReader cfg(config, "verify");
    const long seed = cfg.integer("seed", 20260101);
    const long count = cfg.integer("random_pulses", 1000);
    const EvolveOptions opts = detail::read_evolve(cfg, 1e-10);

    std::vector<detail::Check> checks{
        {"dual_construction", 0.0, 1e-12},
        {"analytic_numeric", 0.0, 1e-2},
        {"metric_formula", 0.0, 1e-10},
        {"gamma_identity_g0.3", 0.0, 1e-10},
        {"gamma_identity_g1", 0.0, 1e-10},
        {"gamma_identity_g3", 0.0, 1e-10},
        {"composite_sign_analytic", 0.0, 1e-9},
        {"composite_sign_numeric", 0.0, 1e-2},
    };
    ConfigReader thresholds = cfg.object("thresholds");
    for (auto &c : checks) {
        c.threshold = thresholds.number(c.name, c.threshold);
        if (!(c.threshold >= 0.0)) {
            throw ConfigError("thresholds." + c.name + " must be >= 0");
        }
    }
    thresholds.finish();
    cfg.finish();
    if (count < 1) throw ConfigError("random_pulses must be positive");

    const auto useed = static_cast<std::uint64_t>(seed);
    checks[0].deviation = detail::dual_construction_deviation(useed, count);
    checks[1].deviation = detail::analytic_numeric_deviation(opts);
    checks[2].deviation = detail::metric_formula_deviation(useed, count);
    checks[3].deviation = detail::gamma_identity_deviation(0.3);
    checks[4].deviation = detail::gamma_identity_deviation(1.0);
    checks[5].deviation = detail::gamma_identity_deviation(3.0);
    checks[6].deviation = std::max(
        detail::composite_sign_deviation(EvaluationMode::exact, opts),
        detail::composite_sign_deviation(EvaluationMode::perturbative, opts));
    checks[7].deviation =
        detail::composite_sign_deviation(EvaluationMode::numeric, opts);

    bool all = true;
    for (const auto &c : checks) all = all && c.pass();
    const int code = all ? kExitOk : kExitCheckFailed;

    if (format == Format::csv) {
        detail::Table table;
        table.units = "units: deviations in the norm of each check";
        table.columns = {"check", "deviation", "threshold", "pass"};
        for (const auto &c : checks) {
            table.rows.push_back(
                nlohmann::json::array({c.name, c.deviation, c.threshold, c.pass()}));
        }
        return {table.render(format), "", code};
    }
    nlohmann::json report;
    report["checks"] = nlohmann::json::array();
    for (const auto &c : checks) {
        report["checks"].push_back({{"name", c.name},
                                    {"deviation", c.deviation},
                                    {"threshold", c.threshold},
                                    {"pass", c.pass()}});
    }
    report["pass"] = all;
    return {report.dump(2) + "\n", "", code};
}

/// Dispatch by subcommand name. Library errors from invalid physical
/// parameters surface as ConfigError.
inline CommandResult run_command(std::string_view name,
                                 const nlohmann::json &config, Format format) {
    try {
        if (name == "crossing") return cmd_crossing(config, format);
        if (name == "angles") return cmd_angles(config, format);
        if (name == "sweep") return cmd_sweep(config, format);
        if (name == "verify") return cmd_verify(config, format);
    } catch (const DomainError &e) {
        throw ConfigError(e.what());
    } catch (const DesignError &e) {
        throw ConfigError(e.what());
    }
    throw ConfigError("unknown command '" + std::string(name) + "'");
}

}  // namespace lzgate::cli
