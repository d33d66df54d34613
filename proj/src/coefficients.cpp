#include "mirror/coefficients.hpp"

#include <cmath>
#include <string>

namespace mirror {

double f1(double x) {
    const double z = 2.0 * x;
    if (std::fabs(z) < 1e-4) {
        // Taylor remainder below 1e-17 at the switch point.
        const double z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sin(z) / z;
}

double f2(double x, double x_min) {
    if (std::fabs(x) < x_min) {
        throw DegenerateGeometry("f2 argument " + std::to_string(x) +
                                 " below divergence guard " + std::to_string(x_min));
    }
    return std::cos(2.0 * x) / (2.0 * x);
}

Coefficients compute_coefficients(const GeometryParams& g) {
    if (!(g.omega_y > 0.0) || !(g.omega_l > 0.0) ||
        !std::isfinite(g.omega_y) || !std::isfinite(g.omega_l)) {
        throw DegenerateGeometry("omega_y and omega_l must be positive and finite");
    }
    const double y = g.omega_y;
    const double l = g.omega_l;

    Coefficients c;
    c.b1 = 0.25 * (1.0 - f1(y));
    c.b2 = 0.25 * (1.0 - f1(y + l));
    c.b3 = 0.25 * (f1(0.5 * l) - f1(y + 0.5 * l));
    c.d_raw = 0.25 * (f2(0.5 * l) - f2(y + 0.5 * l));
    c.delta_raw = 0.25 * (f2(y + l) - f2(y));

    // Toggles zero the dynamical values after evaluation; the raw fields stay.
    c.d = g.include_atom_atom ? c.d_raw : 0.0;
    c.delta = g.include_atom_plate ? c.delta_raw : 0.0;
    return c;
}

}  // namespace mirror
