#include <doctest.h>

#include <cmath>
#include <random>

#include "mirror/dynamics.hpp"
#include "mirror/oracle.hpp"

using namespace mirror;

namespace {

Coefficients coeffs(double y, double l, bool aa = true, bool ap = true) {
    return compute_coefficients({y, l, aa, ap});
}

XState random_x_state(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    XState s;
    double p[4];
    double sum = 0.0;
    for (double& x : p) {
        x = u01(rng);
        sum += x;
    }
    s.p_gg = p[0] / sum;
    s.p_ee = p[1] / sum;
    s.p_aa = p[2] / sum;
    s.p_ss = p[3] / sum;
    const double ras = std::sqrt(s.p_aa * s.p_ss) * u01(rng);
    const double pas = 2.0 * M_PI * u01(rng);
    s.c_as_re = ras * std::cos(pas);
    s.c_as_im = ras * std::sin(pas);
    const double rge = std::sqrt(s.p_gg * s.p_ee) * u01(rng);
    const double pge = 2.0 * M_PI * u01(rng);
    s.c_ge_re = rge * std::cos(pge);
    s.c_ge_im = rge * std::sin(pge);
    return s;
}

}  // namespace

TEST_CASE("named initial states") {
    const XState a = initial_state(InitialState::Antisymmetric);
    CHECK(a.p_aa == 1.0);
    CHECK(a.trace() == 1.0);

    const XState g = initial_state(InitialState::Ground);
    CHECK(g.p_gg == 1.0);

    const XState p = initial_state(InitialState::Product10);
    CHECK(p.p_aa == 0.5);
    CHECK(p.p_ss == 0.5);
    CHECK(p.c_as_re == 0.5);
    CHECK(p.c_as_im == 0.0);
}

TEST_CASE("Product10 matches the 4x4 basis-change oracle") {
    // |10> = atom 1 excited, atom 2 ground: index 2 of {|00>,|01>,|10>,|11>}.
    oracle::DensityMatrix4 rho = oracle::DensityMatrix4::Zero();
    rho(2, 2) = 1.0;
    const XState s = oracle::to_x_state(rho);
    const XState p = initial_state(InitialState::Product10);
    CHECK(s.p_aa == doctest::Approx(p.p_aa).epsilon(1e-14));
    CHECK(s.p_ss == doctest::Approx(p.p_ss).epsilon(1e-14));
    CHECK(s.c_as_re == doctest::Approx(p.c_as_re).epsilon(1e-14));
    CHECK(std::fabs(s.c_as_im) < 1e-14);
    CHECK(std::fabs(s.p_gg) < 1e-14);
    CHECK(std::fabs(s.p_ee) < 1e-14);
}

TEST_CASE("custom state validation") {
    XState bad;
    bad.p_gg = 0.5;  // trace 0.5
    CHECK_THROWS_AS(custom_x_state(bad), InvalidState);

    XState coh = initial_state(InitialState::Ground);
    coh.c_as_re = 0.3;  // coherence without population
    CHECK_THROWS_AS(custom_x_state(coh), InvalidState);

    CHECK_NOTHROW(custom_x_state(initial_state(InitialState::Product10)));
}

TEST_CASE("ground state is stationary") {
    const XState g = initial_state(InitialState::Ground);
    const XState d = rhs(g, coeffs(0.4, 2.0));
    CHECK(d.p_gg == 0.0);
    CHECK(d.p_ee == 0.0);
    CHECK(d.p_aa == 0.0);
    CHECK(d.p_ss == 0.0);
    CHECK(d.c_as_re == 0.0);
    CHECK(d.c_as_im == 0.0);
}

TEST_CASE("excited-state derivatives by direct substitution") {
    const Coefficients c = coeffs(0.1, 10.0);
    const XState d = rhs(initial_state(InitialState::Excited), c);
    CHECK(d.p_ee == doctest::Approx(-4.0 * (c.b1 + c.b2)).epsilon(1e-14));
    CHECK(d.p_aa == doctest::Approx(2.0 * (c.b1 + c.b2 - 2.0 * c.b3)).epsilon(1e-14));
    CHECK(d.p_ss == doctest::Approx(2.0 * (c.b1 + c.b2 + 2.0 * c.b3)).epsilon(1e-14));
    CHECK(d.c_as_re == doctest::Approx(2.0 * (c.b2 - c.b1)).epsilon(1e-14));
    CHECK(d.p_gg == 0.0);
}

TEST_CASE("antisymmetric state is subradiant at zero separation in free space") {
    // b3 -> b1 = b2 as the atoms coincide far from the mirror
    Coefficients c = coeffs(1e7, 1e-3);
    const XState d = rhs(initial_state(InitialState::Antisymmetric), c);
    CHECK(std::fabs(d.p_aa) < 1e-6);
}

TEST_CASE("population derivatives are traceless (randomized)") {
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> u(0.05, 10.0);
    for (int k = 0; k < 500; ++k) {
        const XState s = random_x_state(rng);
        const XState d = rhs(s, coeffs(u(rng), u(rng)));
        CHECK(std::fabs(d.p_gg + d.p_ee + d.p_aa + d.p_ss) < 1e-14);
    }
}

TEST_CASE("ground state integrates to a constant trajectory") {
    const Trajectory t = integrate(initial_state(InitialState::Ground), coeffs(1.0, 2.0), 10.0, 1e-2);
    for (const XState& s : t.states) {
        CHECK(s.p_gg == 1.0);
        CHECK(s.p_ee == 0.0);
    }
    CHECK(t.tau.front() == 0.0);
    CHECK(t.tau.back() == doctest::Approx(10.0));
}

TEST_CASE("excited population decays as the closed-form exponential") {
    const Coefficients c = coeffs(1.0, 1.0);
    const Trajectory t = integrate(initial_state(InitialState::Excited), c, 20.0, 1e-3);
    const double rate = 4.0 * (c.b1 + c.b2);
    for (std::size_t k = 0; k < t.size(); k += 997) {
        CHECK(std::fabs(t.states[k].p_ee - std::exp(-rate * t.tau[k])) < 1e-8);
    }
}

TEST_CASE("last step shortened to land on t_max") {
    const Trajectory t = integrate(initial_state(InitialState::Excited), coeffs(1.0, 1.0), 0.25, 0.1);
    REQUIRE(t.size() == 4);
    CHECK(t.tau[2] == doctest::Approx(0.2));
    CHECK(t.tau[3] == 0.25);
}

TEST_CASE("invalid integration window rejected") {
    const XState s = initial_state(InitialState::Ground);
    CHECK_THROWS_AS(integrate(s, coeffs(1.0, 1.0), -1.0, 1e-3), InvalidState);
    CHECK_THROWS_AS(integrate(s, coeffs(1.0, 1.0), 1.0, 2.0), InvalidState);
}

TEST_CASE("hermitian reconstruction along a trajectory") {
    const Coefficients c = coeffs(0.5, 3.0);
    const Trajectory t = integrate(initial_state(InitialState::Product10), c, 10.0, 1e-2);
    for (std::size_t k = 0; k < t.size(); k += 97) {
        const auto rho = oracle::to_product_basis(t.states[k]);
        CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("4th-order convergence against the exact propagator") {
    const Coefficients c = coeffs(0.1, 10.0);
    const XState s0 = initial_state(InitialState::Product10);
    const auto liou = oracle::build_liouvillian(c);
    const double t_end = 2.0;
    const auto exact =
        oracle::to_x_state(oracle::evolve_exact(oracle::to_product_basis(s0), liou, t_end));

    const auto max_err = [&](double dt) {
        const XState s = advance(s0, c, t_end, dt);
        double m = 0.0;
        for (double d : {s.p_gg - exact.p_gg, s.p_ee - exact.p_ee, s.p_aa - exact.p_aa,
                         s.p_ss - exact.p_ss, s.c_as_re - exact.c_as_re,
                         s.c_as_im - exact.c_as_im}) {
            m = std::max(m, std::fabs(d));
        }
        return m;
    };
    const double e1 = max_err(0.05);
    const double e2 = max_err(0.025);
    const double ratio = e1 / e2;
    CHECK(ratio > 10.0);
    CHECK(ratio < 24.0);
}

TEST_CASE("rho_EE and rho_GE do not depend on delta or d") {
    Coefficients c = coeffs(0.2, 0.7);
    XState s0 = initial_state(InitialState::Product10);
    s0.p_gg = 0.2;
    s0.p_ee = 0.2;
    s0.p_aa = 0.3;
    s0.p_ss = 0.3;
    s0.c_as_re = 0.2;
    s0.c_ge_re = 0.1;
    const Trajectory base = integrate(s0, c, 5.0, 1e-2);
    c.delta = 0.0;
    c.d = 0.0;
    const Trajectory mod = integrate(s0, c, 5.0, 1e-2);
    for (std::size_t k = 0; k < base.size(); k += 13) {
        CHECK(base.states[k].p_ee == mod.states[k].p_ee);
        CHECK(base.states[k].c_ge_re == mod.states[k].c_ge_re);
        CHECK(base.states[k].c_ge_im == mod.states[k].c_ge_im);
    }
}
