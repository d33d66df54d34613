#include "mirror/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "mirror/oracle.hpp"

namespace mirror {

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::Trajectory: return "trajectory";
        case Mode::Sweep: return "sweep";
        case Mode::Coefficients: return "coefficients";
        case Mode::OracleCheck: return "oracle-check";
    }
    return "?";
}

Mode parse_mode(const std::string& name) {
    if (name == "trajectory") return Mode::Trajectory;
    if (name == "sweep") return Mode::Sweep;
    if (name == "coefficients") return Mode::Coefficients;
    if (name == "oracle-check") return Mode::OracleCheck;
    throw ConfigError("mode", "unknown mode: " + name);
}

std::vector<double> GridSpec::points() const {
    std::vector<double> p;
    p.reserve(count);
    if (count == 1) {
        p.push_back(start);
        return p;
    }
    for (int i = 0; i < count; ++i) {
        const double f = static_cast<double>(i) / (count - 1);
        if (log_spacing) {
            p.push_back(start * std::pow(stop / start, f));
        } else {
            p.push_back(start + f * (stop - start));
        }
    }
    p.back() = stop;  // inclusive endpoint, exact
    return p;
}

namespace {

double require_positive(const nlohmann::json& j, const std::string& path, double v) {
    (void)j;
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ConfigError(path, "must be positive and finite");
    }
    return v;
}

}  // namespace

RunConfig parse_config(const nlohmann::json& j) {
    RunConfig cfg;
    if (!j.is_object()) throw ConfigError("", "config must be a JSON object");

    if (!j.contains("mode")) throw ConfigError("mode", "required");
    if (!j.at("mode").is_string()) throw ConfigError("mode", "must be a string");
    cfg.mode = parse_mode(j.at("mode").get<std::string>());

    const auto get_num = [&](const char* key, double fallback, bool required = false) {
        if (!j.contains(key)) {
            if (required) throw ConfigError(key, "required");
            return fallback;
        }
        if (!j.at(key).is_number()) throw ConfigError(key, "must be a number");
        return j.at(key).get<double>();
    };

    cfg.omega_y = require_positive(j, "geometry.omega_y", get_num("omega_y", cfg.omega_y, true));
    if (j.contains("omega_l") || j.contains("omega_L")) {
        const auto& v = j.contains("omega_l") ? j.at("omega_l") : j.at("omega_L");
        if (!v.is_number()) throw ConfigError("geometry.omega_L", "must be a number");
        cfg.omega_l = require_positive(j, "geometry.omega_L", v.get<double>());
    } else if (cfg.mode != Mode::Sweep) {
        throw ConfigError("geometry.omega_L", "required");
    }

    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        if (!g.is_object()) throw ConfigError("grid", "must be an object");
        GridSpec gs;
        gs.start = require_positive(j, "grid.start", g.value("start", gs.start));
        gs.stop = require_positive(j, "grid.stop", g.value("stop", gs.stop));
        gs.count = g.value("count", gs.count);
        if (gs.count < 1) throw ConfigError("grid.count", "must be >= 1");
        const std::string spacing = g.value("spacing", std::string("linear"));
        if (spacing == "log") {
            gs.log_spacing = true;
        } else if (spacing != "linear") {
            throw ConfigError("grid.spacing", "must be \"linear\" or \"log\"");
        }
        cfg.grid = gs;
    } else if (cfg.mode == Mode::Sweep && !(j.contains("omega_l") || j.contains("omega_L"))) {
        cfg.grid = GridSpec{};  // documented default sweep range
    }

    if (j.contains("initial_state")) {
        if (!j.at("initial_state").is_string()) {
            throw ConfigError("initial_state", "must be a string");
        }
        try {
            cfg.init = parse_initial_state(j.at("initial_state").get<std::string>());
        } catch (const InvalidState& e) {
            throw ConfigError("initial_state", e.what());
        }
    }

    const double default_t_max = cfg.mode == Mode::Sweep ? 50.0 : 30.0;
    cfg.t_max = require_positive(j, "t_max", get_num("t_max", default_t_max));
    cfg.dt = require_positive(j, "dt", get_num("dt", cfg.dt));
    if (cfg.dt > cfg.t_max) throw ConfigError("dt", "must not exceed t_max");
    cfg.threshold = require_positive(j, "threshold", get_num("threshold", cfg.threshold));

    if (j.contains("scenarios")) {
        if (!j.at("scenarios").is_array() || j.at("scenarios").empty()) {
            throw ConfigError("scenarios", "must be a nonempty array");
        }
        cfg.scenarios.clear();
        for (const auto& s : j.at("scenarios")) {
            if (!s.is_string()) throw ConfigError("scenarios", "entries must be strings");
            try {
                cfg.scenarios.push_back(parse_scenario(s.get<std::string>()));
            } catch (const InvalidState& e) {
                throw ConfigError("scenarios", e.what());
            }
        }
    }

    if (j.contains("out")) {
        if (!j.at("out").is_string()) throw ConfigError("out", "must be a string");
        cfg.out = j.at("out").get<std::string>();
    }
    if (j.contains("precision")) {
        if (!j.at("precision").is_number_integer()) {
            throw ConfigError("precision", "must be an integer");
        }
        cfg.precision = j.at("precision").get<int>();
        if (cfg.precision < 1 || cfg.precision > 17) {
            throw ConfigError("precision", "must be in [1, 17]");
        }
    }
    return cfg;
}

std::string format_number(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

namespace {

std::ofstream open_csv(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open output file: " + path);
    return f;
}

bool in_scenarios(const std::vector<Scenario>& list, Scenario s) {
    for (Scenario x : list) {
        if (x == s) return true;
    }
    return false;
}

void run_trajectory(const RunConfig& cfg) {
    const XState s0 = initial_state(cfg.init);
    for (Scenario sc : cfg.scenarios) {
        GeometryParams g{cfg.omega_y, cfg.omega_l, true, true};
        const Coefficients c = compute_coefficients(apply_scenario(g, sc));
        const Trajectory traj = integrate(s0, c, cfg.t_max, cfg.dt);
        auto f = open_csv(cfg.out + "_" + scenario_name(sc) + ".csv");
        f << "tau,concurrence,p_gg,p_ee,p_aa,p_ss,re_rho_as,im_rho_as,re_rho_ge,im_rho_ge\n";
        for (std::size_t k = 0; k < traj.size(); ++k) {
            const XState& s = traj.states[k];
            const double conc = concurrence(s).concurrence;
            f << format_number(traj.tau[k], cfg.precision) << ','
              << format_number(conc, cfg.precision) << ','
              << format_number(s.p_gg, cfg.precision) << ','
              << format_number(s.p_ee, cfg.precision) << ','
              << format_number(s.p_aa, cfg.precision) << ','
              << format_number(s.p_ss, cfg.precision) << ','
              << format_number(s.c_as_re, cfg.precision) << ','
              << format_number(s.c_as_im, cfg.precision) << ','
              << format_number(s.c_ge_re, cfg.precision) << ','
              << format_number(s.c_ge_im, cfg.precision) << '\n';
        }
        if (!f) throw IoError("write failure: " + cfg.out);
    }
}

void run_sweep(const RunConfig& cfg) {
    std::vector<GeometryParams> grid;
    if (cfg.grid) {
        for (double l : cfg.grid->points()) {
            grid.push_back({cfg.omega_y, l, true, true});
        }
    } else {
        grid.push_back({cfg.omega_y, cfg.omega_l, true, true});
    }
    const auto results = sweep(grid, cfg.init, cfg.t_max, cfg.dt, cfg.threshold);

    auto f = open_csv(cfg.out + ".csv");
    f << "omega_y,omega_L,scenario,max_concurrence,tau_of_max,survival_time,generated\n";
    std::string first_error;
    for (const SweepResult& r : results) {
        if (!in_scenarios(cfg.scenarios, r.scenario)) continue;
        if (!r.error.empty()) {
            if (first_error.empty()) first_error = r.error;
            continue;
        }
        f << format_number(r.geometry.omega_y, cfg.precision) << ','
          << format_number(r.geometry.omega_l, cfg.precision) << ','
          << scenario_name(r.scenario) << ','
          << format_number(r.max_concurrence, cfg.precision) << ','
          << format_number(r.tau_of_max, cfg.precision) << ','
          << (r.survival.infinite ? std::string("inf")
                                  : format_number(r.survival.time, cfg.precision))
          << ',' << (r.generated ? "1" : "0") << '\n';
    }
    if (!f) throw IoError("write failure: " + cfg.out);
    if (!first_error.empty()) {
        throw Error("sweep point failed: " + first_error);
    }
}

void run_coefficients(const RunConfig& cfg) {
    const GeometryParams g{cfg.omega_y, cfg.omega_l, true, true};
    const Coefficients c = compute_coefficients(g);
    auto f = open_csv(cfg.out + ".csv");
    f << "b1,b2,b3,d,delta\n";
    // Raw (pre-toggle) values; toggles only matter for the dynamics.
    f << format_number(c.b1, cfg.precision) << ','
      << format_number(c.b2, cfg.precision) << ','
      << format_number(c.b3, cfg.precision) << ','
      << format_number(c.d_raw, cfg.precision) << ','
      << format_number(c.delta_raw, cfg.precision) << '\n';
    if (!f) throw IoError("write failure: " + cfg.out);
}

void run_oracle_check(const RunConfig& cfg) {
    const GeometryParams g{cfg.omega_y, cfg.omega_l, true, true};
    const Coefficients c = compute_coefficients(g);
    const XState s0 = initial_state(cfg.init);
    const Trajectory traj = integrate(s0, c, cfg.t_max, cfg.dt);

    const auto liou = oracle::build_liouvillian(c);
    double max_dev = 0.0;
    // Step the exact propagator sample-by-sample alongside the ODE grid.
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const auto rho = oracle::evolve_exact(oracle::to_product_basis(s0), liou, traj.tau[k]);
        const XState xs = oracle::to_x_state(rho);
        const XState& od = traj.states[k];
        for (double dvv : {xs.p_gg - od.p_gg, xs.p_ee - od.p_ee, xs.p_aa - od.p_aa,
                           xs.p_ss - od.p_ss, xs.c_as_re - od.c_as_re,
                           xs.c_as_im - od.c_as_im, xs.c_ge_re - od.c_ge_re,
                           xs.c_ge_im - od.c_ge_im}) {
            max_dev = std::max(max_dev, std::fabs(dvv));
        }
        // Exponentials at every dt sample would dominate runtime; a coarse
        // checkpoint grid is enough for a spot check.
        k += 499;
    }
    const std::string report =
        "oracle-check omega_y=" + format_number(cfg.omega_y, cfg.precision) +
        " omega_L=" + format_number(cfg.omega_l, cfg.precision) +
        " initial_state=" + initial_state_name(cfg.init) +
        " t_max=" + format_number(cfg.t_max, cfg.precision) +
        " max_deviation=" + format_number(max_dev, 3) + "\n";
    std::cout << report;
    std::ofstream f(cfg.out + ".txt");
    if (!f) throw IoError("cannot open output file: " + cfg.out + ".txt");
    f << report;
}

}  // namespace

int run(const RunConfig& cfg) {
    switch (cfg.mode) {
        case Mode::Trajectory: run_trajectory(cfg); break;
        case Mode::Sweep: run_sweep(cfg); break;
        case Mode::Coefficients: run_coefficients(cfg); break;
        case Mode::OracleCheck: run_oracle_check(cfg); break;
    }
    return 0;
}

}  // namespace mirror
