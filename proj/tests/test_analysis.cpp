#include <doctest.h>

#include <cmath>

#include "mirror/analysis.hpp"

using namespace mirror;

namespace {

Trajectory run(double y, double l, Scenario sc, InitialState init, double t_max,
               double dt = 1e-3) {
    const GeometryParams g = apply_scenario({y, l, true, true}, sc);
    Trajectory t = integrate(initial_state(init), compute_coefficients(g), t_max, dt);
    t.geometry = g;
    return t;
}

}  // namespace

TEST_CASE("scenario set covers the four distinct toggle pairs") {
    int mask = 0;
    for (Scenario s : all_scenarios) {
        const GeometryParams g = apply_scenario({1.0, 1.0, false, false}, s);
        mask |= 1 << ((g.include_atom_atom ? 1 : 0) | (g.include_atom_plate ? 2 : 0));
    }
    CHECK(mask == 0b1111);
    CHECK(parse_scenario("atom_atom_only") == Scenario::AtomAtomOnly);
}

TEST_CASE("max concurrence of a never-entangled trajectory") {
    const Trajectory t = run(1.0, 1.0, Scenario::Full, InitialState::Ground, 10.0, 1e-2);
    const MaxConcurrence m = max_concurrence(t);
    CHECK(m.value == 0.0);
    CHECK(m.tau == 0.0);
}

TEST_CASE("antisymmetric state peaks at tau = 0") {
    const Trajectory t = run(1.0, 10.0, Scenario::Full, InitialState::Antisymmetric, 10.0);
    const MaxConcurrence m = max_concurrence(t);
    CHECK(m.value == doctest::Approx(1.0));
    CHECK(m.tau == 0.0);
}

TEST_CASE("refined maximum exceeds sampled values on a coarse grid") {
    const Trajectory coarse = run(0.1, 10.0, Scenario::Full, InitialState::Product10, 10.0, 0.25);
    const Trajectory fine = run(0.1, 10.0, Scenario::Full, InitialState::Product10, 10.0, 1e-3);
    const MaxConcurrence mc = max_concurrence(coarse);
    const MaxConcurrence mf = max_concurrence(fine);
    CHECK(std::fabs(mc.value - mf.value) < 1e-5);
    CHECK(std::fabs(mc.tau - mf.tau) < 0.05);
}

TEST_CASE("interaction-on max dominates at omega_y=1, omega_L=10") {
    const MaxConcurrence full =
        max_concurrence(run(1.0, 10.0, Scenario::Full, InitialState::Product10, 30.0));
    const MaxConcurrence none =
        max_concurrence(run(1.0, 10.0, Scenario::None, InitialState::Product10, 30.0));
    CHECK(full.value > none.value + 1e-6);
}

TEST_CASE("survival: never entangled reports zero") {
    const Trajectory t = run(1.0, 1.0, Scenario::Full, InitialState::Ground, 10.0, 1e-2);
    const Survival s = survival_time(t);
    CHECK_FALSE(s.infinite);
    CHECK(s.time == 0.0);
}

TEST_CASE("excited initial state entangles transiently near the boundary") {
    // The asymmetric decay (b1 != b2) sources rho_AS from |EE>, so the doubly
    // excited state picks up transient concurrence before dying out.
    const Trajectory t = run(0.5, 2.0, Scenario::Full, InitialState::Excited, 1200.0, 1e-2);
    double peak = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
        peak = std::max(peak, concurrence(t.states[k]).concurrence);
    }
    CHECK(peak > 0.1);
    const Survival s = survival_time(t);
    CHECK_FALSE(s.infinite);
    CHECK(s.time > 0.0);
}

TEST_CASE("survival shortened by the interactions (antisymmetric, omega_y=0.1, omega_L=19)") {
    // close to the boundary atom 1 is nearly dark, so the antisymmetric state
    // is subradiant and the window has to be long
    const Survival full =
        survival_time(run(0.1, 19.0, Scenario::Full, InitialState::Antisymmetric, 2600.0, 1e-2));
    const Survival none =
        survival_time(run(0.1, 19.0, Scenario::None, InitialState::Antisymmetric, 2600.0, 1e-2));
    REQUIRE_FALSE(full.infinite);
    REQUIRE_FALSE(none.infinite);
    CHECK(full.time < none.time);
}

TEST_CASE("survival agrees under step halving") {
    const Survival a =
        survival_time(run(1.0, 19.0, Scenario::Full, InitialState::Antisymmetric, 50.0, 1e-3));
    const Survival b =
        survival_time(run(1.0, 19.0, Scenario::Full, InitialState::Antisymmetric, 50.0, 5e-4));
    REQUIRE_FALSE(a.infinite);
    CHECK(std::fabs(a.time - b.time) < 2e-6);
}

TEST_CASE("far-field scenario degeneracy") {
    const double y = 1e4, l = 2.0;
    const Trajectory full = run(y, l, Scenario::Full, InitialState::Product10, 10.0, 1e-2);
    const Trajectory aa = run(y, l, Scenario::AtomAtomOnly, InitialState::Product10, 10.0, 1e-2);
    const Trajectory none = run(y, l, Scenario::None, InitialState::Product10, 10.0, 1e-2);
    const Trajectory ap = run(y, l, Scenario::AtomPlateOnly, InitialState::Product10, 10.0, 1e-2);
    for (std::size_t k = 0; k < full.size(); ++k) {
        CHECK(std::fabs(concurrence(full.states[k]).concurrence -
                        concurrence(aa.states[k]).concurrence) < 1e-6);
        CHECK(std::fabs(concurrence(none.states[k]).concurrence -
                        concurrence(ap.states[k]).concurrence) < 1e-6);
    }
}

TEST_CASE("sweep orders results and tolerates failing points") {
    std::vector<GeometryParams> grid{
        {1.0, 1.0, true, true},
        {1.0, 1e-10, true, true},  // degenerate: f2 diverges
        {1.0, 2.0, true, true},
    };
    const auto results = sweep(grid, InitialState::Ground, 5.0, 1e-2);
    REQUIRE(results.size() == 12);
    CHECK(results[0].scenario == Scenario::Full);
    CHECK(results[1].scenario == Scenario::None);
    CHECK(results[2].scenario == Scenario::AtomAtomOnly);
    CHECK(results[3].scenario == Scenario::AtomPlateOnly);
    for (int k = 4; k < 8; ++k) CHECK_FALSE(results[k].error.empty());
    for (int k = 8; k < 12; ++k) {
        CHECK(results[k].error.empty());
        CHECK(results[k].max_concurrence == 0.0);
        CHECK_FALSE(results[k].generated);
    }
}

TEST_CASE("sweep is deterministic") {
    std::vector<GeometryParams> grid{{0.5, 1.3, true, true}};
    const auto a = sweep(grid, InitialState::Product10, 20.0, 1e-2);
    const auto b = sweep(grid, InitialState::Product10, 20.0, 1e-2);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].max_concurrence == b[k].max_concurrence);
        CHECK(a[k].tau_of_max == b[k].tau_of_max);
        CHECK(a[k].survival.time == b[k].survival.time);
    }
}
