#ifndef MIRROR_CONFIG_HPP
#define MIRROR_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mirror/analysis.hpp"
#include "mirror/dynamics.hpp"

namespace mirror {

enum class Mode { Trajectory, Sweep, Coefficients, OracleCheck };

const char* mode_name(Mode m);
Mode parse_mode(const std::string& name);

// Sweep abscissa: a grid over omega_l at fixed omega_y.
struct GridSpec {
    double start = 0.05;
    double stop = 3.0;
    int count = 120;
    bool log_spacing = false;

    std::vector<double> points() const;
};

struct RunConfig {
    Mode mode = Mode::Trajectory;
    double omega_y = 1.0;
    double omega_l = 1.0;
    std::optional<GridSpec> grid;
    InitialState init = InitialState::Product10;
    double t_max = 30.0;
    double dt = 1e-3;
    std::vector<Scenario> scenarios{all_scenarios.begin(), all_scenarios.end()};
    std::string out = "out";
    double threshold = 1e-9;
    int precision = 12;
};

// Validates a JSON document into a RunConfig, applying documented defaults.
// Throws ConfigError carrying the offending field path.
RunConfig parse_config(const nlohmann::json& j);

// Executes the configured run, writing CSV (or report) files derived from the
// `out` stem. Returns 0 on success; errors propagate as typed exceptions.
int run(const RunConfig& cfg);

// Deterministic shortest-faithful formatting at the configured significant
// digits.
std::string format_number(double v, int precision);

}  // namespace mirror

#endif
