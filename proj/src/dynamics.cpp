#include "mirror/dynamics.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace mirror {

XState initial_state(InitialState which) {
    XState s;
    switch (which) {
        case InitialState::Product10:
            // |10> = (|S> + |A>)/sqrt(2): equal A/S populations, rho_AS = 1/2.
            s.p_aa = 0.5;
            s.p_ss = 0.5;
            s.c_as_re = 0.5;
            break;
        case InitialState::Antisymmetric:
            s.p_aa = 1.0;
            break;
        case InitialState::Symmetric:
            s.p_ss = 1.0;
            break;
        case InitialState::Excited:
            s.p_ee = 1.0;
            break;
        case InitialState::Ground:
            s.p_gg = 1.0;
            break;
    }
    return s;
}

XState custom_x_state(const XState& s) {
    const double tol = 1e-9;
    if (std::fabs(s.trace() - 1.0) > tol) {
        throw InvalidState("custom X state: trace differs from 1");
    }
    for (double p : {s.p_gg, s.p_ee, s.p_aa, s.p_ss}) {
        if (p < -tol) throw InvalidState("custom X state: negative population");
    }
    const double as2 = s.c_as_re * s.c_as_re + s.c_as_im * s.c_as_im;
    const double ge2 = s.c_ge_re * s.c_ge_re + s.c_ge_im * s.c_ge_im;
    if (as2 > s.p_aa * s.p_ss + tol || ge2 > s.p_gg * s.p_ee + tol) {
        throw InvalidState("custom X state: coherence exceeds population bound");
    }
    return s;
}

InitialState parse_initial_state(const std::string& name) {
    if (name == "product10") return InitialState::Product10;
    if (name == "antisymmetric") return InitialState::Antisymmetric;
    if (name == "symmetric") return InitialState::Symmetric;
    if (name == "excited") return InitialState::Excited;
    if (name == "ground") return InitialState::Ground;
    throw InvalidState("unknown initial state: " + name);
}

const char* initial_state_name(InitialState which) {
    switch (which) {
        case InitialState::Product10: return "product10";
        case InitialState::Antisymmetric: return "antisymmetric";
        case InitialState::Symmetric: return "symmetric";
        case InitialState::Excited: return "excited";
        case InitialState::Ground: return "ground";
    }
    return "?";
}

XState rhs(const XState& s, const Coefficients& c) {
    const double sm = c.b1 + c.b2 - 2.0 * c.b3;
    const double sp = c.b1 + c.b2 + 2.0 * c.b3;
    const double su = c.b1 + c.b2;
    const double df = c.b2 - c.b1;
    const double u = s.c_as_re;
    const double v = s.c_as_im;

    // rho_AS + rho_SA = 2u,  i(rho_AS - rho_SA) = -2v.
    XState d;
    d.p_gg = 2.0 * sm * s.p_aa + 2.0 * sp * s.p_ss - 4.0 * df * u;
    d.p_ee = -4.0 * su * s.p_ee;
    d.p_aa = -2.0 * sm * s.p_aa + 2.0 * sm * s.p_ee + 2.0 * df * u + 2.0 * c.delta * v;
    d.p_ss = -2.0 * sp * s.p_ss + 2.0 * sp * s.p_ee + 2.0 * df * u - 2.0 * c.delta * v;
    d.c_as_re = -2.0 * su * u + 4.0 * c.d * v + df * (2.0 * s.p_ee + s.p_ss + s.p_aa);
    d.c_as_im = -2.0 * su * v - 4.0 * c.d * u + c.delta * (s.p_ss - s.p_aa);
    d.c_ge_re = -2.0 * su * s.c_ge_re;
    d.c_ge_im = -2.0 * su * s.c_ge_im;
    return d;
}

namespace {

XState axpy(const XState& s, const XState& k, double h) {
    XState r;
    r.p_gg = s.p_gg + h * k.p_gg;
    r.p_ee = s.p_ee + h * k.p_ee;
    r.p_aa = s.p_aa + h * k.p_aa;
    r.p_ss = s.p_ss + h * k.p_ss;
    r.c_as_re = s.c_as_re + h * k.c_as_re;
    r.c_as_im = s.c_as_im + h * k.c_as_im;
    r.c_ge_re = s.c_ge_re + h * k.c_ge_re;
    r.c_ge_im = s.c_ge_im + h * k.c_ge_im;
    return r;
}

void check_sample(const XState& s, double tau) {
    if (std::fabs(s.trace() - 1.0) > 1e-9) {
        throw IntegrationDiverged("trace drift " + std::to_string(s.trace() - 1.0) +
                                  " at tau=" + std::to_string(tau));
    }
    for (double x : {s.p_gg, s.p_ee, s.p_aa, s.p_ss,
                     s.c_as_re, s.c_as_im, s.c_ge_re, s.c_ge_im}) {
        if (!(std::fabs(x) <= 10.0)) {
            throw IntegrationDiverged("state field out of bounds at tau=" + std::to_string(tau));
        }
    }
}

}  // namespace

XState rk4_step(const XState& s, const Coefficients& c, double h) {
    const XState k1 = rhs(s, c);
    const XState k2 = rhs(axpy(s, k1, 0.5 * h), c);
    const XState k3 = rhs(axpy(s, k2, 0.5 * h), c);
    const XState k4 = rhs(axpy(s, k3, h), c);
    XState r = s;
    const double w = h / 6.0;
    r.p_gg += w * (k1.p_gg + 2.0 * k2.p_gg + 2.0 * k3.p_gg + k4.p_gg);
    r.p_ee += w * (k1.p_ee + 2.0 * k2.p_ee + 2.0 * k3.p_ee + k4.p_ee);
    r.p_aa += w * (k1.p_aa + 2.0 * k2.p_aa + 2.0 * k3.p_aa + k4.p_aa);
    r.p_ss += w * (k1.p_ss + 2.0 * k2.p_ss + 2.0 * k3.p_ss + k4.p_ss);
    r.c_as_re += w * (k1.c_as_re + 2.0 * k2.c_as_re + 2.0 * k3.c_as_re + k4.c_as_re);
    r.c_as_im += w * (k1.c_as_im + 2.0 * k2.c_as_im + 2.0 * k3.c_as_im + k4.c_as_im);
    r.c_ge_re += w * (k1.c_ge_re + 2.0 * k2.c_ge_re + 2.0 * k3.c_ge_re + k4.c_ge_re);
    r.c_ge_im += w * (k1.c_ge_im + 2.0 * k2.c_ge_im + 2.0 * k3.c_ge_im + k4.c_ge_im);
    return r;
}

XState advance(XState s, const Coefficients& c, double t, double dt) {
    if (t <= 0.0) return s;
    const int n = std::max(1, static_cast<int>(std::ceil(t / dt - 1e-12)));
    const double h = t / n;
    for (int i = 0; i < n; ++i) s = rk4_step(s, c, h);
    return s;
}

Trajectory integrate(const XState& s0, const Coefficients& c, double t_max, double dt) {
    if (!(t_max > 0.0) || !(dt > 0.0) || dt > t_max) {
        throw InvalidState("integrate: require 0 < dt <= t_max");
    }
    Trajectory traj;
    traj.coeffs = c;
    traj.dt = dt;
    const auto n_full = static_cast<std::size_t>(std::floor(t_max / dt + 1e-12));
    traj.tau.reserve(n_full + 2);
    traj.states.reserve(n_full + 2);

    XState s = s0;
    double tau = 0.0;
    traj.tau.push_back(tau);
    traj.states.push_back(s);
    check_sample(s, tau);

    for (std::size_t i = 1; i <= n_full; ++i) {
        s = rk4_step(s, c, dt);
        tau = static_cast<double>(i) * dt;
        traj.tau.push_back(tau);
        traj.states.push_back(s);
        check_sample(s, tau);
    }
    if (tau < t_max - 1e-12 * std::max(1.0, t_max)) {
        // Shortened final step landing exactly on t_max.
        s = rk4_step(s, c, t_max - tau);
        tau = t_max;
        traj.tau.push_back(tau);
        traj.states.push_back(s);
        check_sample(s, tau);
    }
    return traj;
}

}  // namespace mirror
