#include "mirror/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace mirror {

const char* scenario_name(Scenario s) {
    switch (s) {
        case Scenario::Full: return "full";
        case Scenario::None: return "none";
        case Scenario::AtomAtomOnly: return "atom_atom_only";
        case Scenario::AtomPlateOnly: return "atom_plate_only";
    }
    return "?";
}

Scenario parse_scenario(const std::string& name) {
    for (Scenario s : all_scenarios) {
        if (name == scenario_name(s)) return s;
    }
    throw InvalidState("unknown scenario: " + name);
}

GeometryParams apply_scenario(GeometryParams g, Scenario s) {
    g.include_atom_atom = (s == Scenario::Full || s == Scenario::AtomAtomOnly);
    g.include_atom_plate = (s == Scenario::Full || s == Scenario::AtomPlateOnly);
    return g;
}

namespace {

// Concurrence at arbitrary tau inside the trajectory, re-integrating from the
// nearest recorded sample at or before tau.
double conc_at(const Trajectory& traj, std::size_t left, double tau) {
    const double t = tau - traj.tau[left];
    const XState s = advance(traj.states[left], traj.coeffs, t, traj.dt);
    return concurrence(s).concurrence;
}

}  // namespace

MaxConcurrence max_concurrence(const Trajectory& traj) {
    if (traj.size() == 0) throw InvalidState("max_concurrence: empty trajectory");

    std::size_t best = 0;
    double best_val = -1.0;
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const double ck = concurrence(traj.states[k]).concurrence;
        if (ck > best_val + 1e-9) {
            best_val = ck;
            best = k;
        }
    }

    // Golden-section refinement in the bracketing interval around the best
    // sample, evaluating by local re-integration.
    const std::size_t lo = best > 0 ? best - 1 : best;
    const std::size_t hi = std::min(best + 1, traj.size() - 1);
    double a = traj.tau[lo];
    double b = traj.tau[hi];
    if (b - a < 1e-12) return {best_val, traj.tau[best]};

    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1v = conc_at(traj, lo, x1);
    double f2v = conc_at(traj, lo, x2);
    while (b - a > 1e-10) {
        if (f1v >= f2v) {
            b = x2;
            x2 = x1;
            f2v = f1v;
            x1 = b - gr * (b - a);
            f1v = conc_at(traj, lo, x1);
        } else {
            a = x1;
            x1 = x2;
            f1v = f2v;
            x2 = a + gr * (b - a);
            f2v = conc_at(traj, lo, x2);
        }
    }
    const double tau_ref = 0.5 * (a + b);
    const double val_ref = conc_at(traj, lo, tau_ref);
    if (val_ref > best_val + 1e-9) return {val_ref, tau_ref};
    return {best_val, traj.tau[best]};  // earliest time attaining the max
}

namespace {

// Refine a threshold crossing inside [tau[k], tau[k+1]] to 1e-6 resolution.
// `downward` selects the sense of the crossing.
double refine_crossing(const Trajectory& traj, std::size_t k, double threshold,
                       bool downward) {
    double a = traj.tau[k];
    double b = traj.tau[k + 1];
    while (b - a > 1e-6) {
        const double mid = 0.5 * (a + b);
        const bool above = conc_at(traj, k, mid) > threshold;
        if (above == downward) {
            a = mid;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

Survival survival_time(const Trajectory& traj, double threshold) {
    if (traj.size() == 0) throw InvalidState("survival_time: empty trajectory");
    if (!(threshold > 0.0)) throw InvalidState("survival_time: threshold must be positive");

    std::vector<double> conc(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) {
        conc[k] = concurrence(traj.states[k]).concurrence;
    }

    Survival out;
    const std::size_t n = traj.size();
    const bool end_above = conc[n - 1] > threshold;

    // Crossing scan: down[k] means above at k, at-or-below at k+1.
    std::vector<double> downs, ups;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const bool a0 = conc[k] > threshold;
        const bool a1 = conc[k + 1] > threshold;
        if (a0 && !a1) downs.push_back(refine_crossing(traj, k, threshold, true));
        if (!a0 && a1) ups.push_back(refine_crossing(traj, k, threshold, false));
    }

    // Dark intervals: a down-crossing followed by a revival.
    for (double d : downs) {
        auto it = std::find_if(ups.begin(), ups.end(), [d](double u) { return u > d; });
        if (it != ups.end()) out.dark_intervals.emplace_back(d, *it);
    }

    if (end_above) {
        const double slope =
            (conc[n - 1] - conc[n - 2]) / (traj.tau[n - 1] - traj.tau[n - 2]);
        if (slope >= 0.0) {
            throw WindowTooShort("concurrence above threshold and non-decreasing at t_max");
        }
        out.infinite = true;
        return out;
    }

    if (downs.empty()) {
        out.time = 0.0;  // never entangled above threshold
        return out;
    }
    out.time = downs.back();
    return out;
}

std::vector<SweepResult> sweep(const std::vector<GeometryParams>& grid,
                               InitialState s0, double t_max, double dt,
                               double threshold) {
    if (grid.empty()) throw InvalidState("sweep: empty grid");
    std::vector<SweepResult> results;
    results.reserve(grid.size() * all_scenarios.size());
    const XState x0 = initial_state(s0);

    for (const GeometryParams& g : grid) {
        for (Scenario sc : all_scenarios) {
            SweepResult r;
            r.geometry = g;
            r.scenario = sc;
            try {
                const Coefficients c = compute_coefficients(apply_scenario(g, sc));
                Trajectory traj = integrate(x0, c, t_max, dt);
                traj.geometry = g;
                const MaxConcurrence mx = max_concurrence(traj);
                r.max_concurrence = mx.value;
                r.tau_of_max = mx.tau;
                r.survival = survival_time(traj, threshold);
                r.generated = mx.value > threshold;
            } catch (const Error& e) {
                r.error = "omega_y=" + std::to_string(g.omega_y) +
                          " omega_l=" + std::to_string(g.omega_l) + " [" +
                          scenario_name(sc) + "]: " + e.what();
            }
            results.push_back(std::move(r));
        }
    }
    return results;
}

}  // namespace mirror
