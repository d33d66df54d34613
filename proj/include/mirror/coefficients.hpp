#ifndef MIRROR_COEFFICIENTS_HPP
#define MIRROR_COEFFICIENTS_HPP

#include "mirror/errors.hpp"

namespace mirror {

// Dimensionless geometry of two atoms on a line perpendicular to the mirror.
// omega_y is the transition frequency times the nearer atom's distance to the
// boundary; omega_l is the frequency times the interatomic separation. The two
// toggles select whether the induced atom-atom coupling and the differential
// atom-plate shift enter the dynamics.
struct GeometryParams {
    double omega_y = 1.0;
    double omega_l = 1.0;
    bool include_atom_atom = true;
    bool include_atom_plate = true;
};

// The five rates/shifts of the master equation, in units of the free-space
// spontaneous emission rate (Gamma0 = 1 throughout).
//   b1, b2  self-dissipation of the nearer / farther atom
//   b3      cross-dissipation
//   d       induced atom-atom coupling (zeroed when toggled off)
//   delta   difference of the two induced energy shifts (zeroed when toggled off)
// d_raw / delta_raw keep the physical values regardless of toggles, for
// diagnostics.
struct Coefficients {
    double b1 = 0.0;
    double b2 = 0.0;
    double b3 = 0.0;
    double d = 0.0;
    double delta = 0.0;
    double d_raw = 0.0;
    double delta_raw = 0.0;
};

// sin(2x)/(2x); series evaluation near 0, total on the reals.
double f1(double x);

// cos(2x)/(2x); throws DegenerateGeometry when |x| < x_min.
double f2(double x, double x_min = 1e-8);

Coefficients compute_coefficients(const GeometryParams& g);

}  // namespace mirror

#endif
