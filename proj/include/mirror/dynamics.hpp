#ifndef MIRROR_DYNAMICS_HPP
#define MIRROR_DYNAMICS_HPP

#include <string>
#include <vector>

#include "mirror/coefficients.hpp"
#include "mirror/errors.hpp"

namespace mirror {

// X-structured two-atom density matrix in the coupled basis {G, A, S, E}.
// The 8 real degrees of freedom; rho_SA and rho_EG are the conjugates of
// rho_AS and rho_GE and are not stored.
struct XState {
    double p_gg = 0.0;
    double p_ee = 0.0;
    double p_aa = 0.0;
    double p_ss = 0.0;
    double c_as_re = 0.0;
    double c_as_im = 0.0;
    double c_ge_re = 0.0;
    double c_ge_im = 0.0;

    double trace() const { return p_gg + p_ee + p_aa + p_ss; }
};

enum class InitialState { Product10, Antisymmetric, Symmetric, Excited, Ground };

XState initial_state(InitialState which);

// Validates a caller-supplied X state against the physical invariants
// (trace 1, nonnegative populations, principal-minor positivity).
XState custom_x_state(const XState& s);

// Parses the CLI spelling ("product10", "antisymmetric", ...).
InitialState parse_initial_state(const std::string& name);
const char* initial_state_name(InitialState which);

// Right-hand side of the coupled-basis master equation in the 8 real
// coordinates. Trace of the population derivatives is identically zero.
XState rhs(const XState& s, const Coefficients& c);

struct Trajectory {
    std::vector<double> tau;
    std::vector<XState> states;
    GeometryParams geometry;
    Coefficients coeffs;

    std::size_t size() const { return tau.size(); }
    double dt = 0.0;  // nominal step used during integration
};

// One classical RK4 step of size h.
XState rk4_step(const XState& s, const Coefficients& c, double h);

// Advances s by duration t using steps of at most dt.
XState advance(XState s, const Coefficients& c, double t, double dt);

// Fixed-step RK4 from 0 to t_max; every step is recorded, the last step is
// shortened to land exactly on t_max. Throws IntegrationDiverged if the trace
// drifts beyond 1e-9 or any field leaves [-10, 10].
Trajectory integrate(const XState& s0, const Coefficients& c, double t_max, double dt);

}  // namespace mirror

#endif
