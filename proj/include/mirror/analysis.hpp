#ifndef MIRROR_ANALYSIS_HPP
#define MIRROR_ANALYSIS_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "mirror/coefficients.hpp"
#include "mirror/dynamics.hpp"
#include "mirror/entanglement.hpp"
#include "mirror/errors.hpp"

namespace mirror {

// The four interaction-toggle combinations compared throughout.
enum class Scenario { Full, None, AtomAtomOnly, AtomPlateOnly };

inline constexpr std::array<Scenario, 4> all_scenarios{
    Scenario::Full, Scenario::None, Scenario::AtomAtomOnly, Scenario::AtomPlateOnly};

const char* scenario_name(Scenario s);
Scenario parse_scenario(const std::string& name);
GeometryParams apply_scenario(GeometryParams g, Scenario s);

struct MaxConcurrence {
    double value = 0.0;
    double tau = 0.0;
};

// Maximum concurrence over a trajectory, refined by golden-section search with
// local re-integration inside the bracketing sample interval. Earliest time
// wins ties within 1e-9.
MaxConcurrence max_concurrence(const Trajectory& traj);

struct Survival {
    bool infinite = false;
    double time = 0.0;
    // Dark intervals (concurrence at or below threshold) preceding a revival.
    std::vector<std::pair<double, double>> dark_intervals;
};

// Time of the last crossing from above threshold to below, with the
// concurrence staying below for the rest of the window. Crossings are refined
// by bisection with re-integration to 1e-6 time resolution. A trajectory never
// above threshold reports time 0. Throws WindowTooShort when the concurrence
// is still above threshold at the end of the window with non-negative slope.
Survival survival_time(const Trajectory& traj, double threshold = 1e-9);

struct SweepResult {
    GeometryParams geometry;
    Scenario scenario = Scenario::Full;
    double max_concurrence = 0.0;
    double tau_of_max = 0.0;
    Survival survival;
    bool generated = false;
    std::string error;  // empty on success
};

// Integrates every grid point under all four scenarios (order: full, none,
// atom_atom_only, atom_plate_only). A failing point is reported in its result
// slot and does not abort the sweep.
std::vector<SweepResult> sweep(const std::vector<GeometryParams>& grid,
                               InitialState s0, double t_max, double dt,
                               double threshold = 1e-9);

}  // namespace mirror

#endif
