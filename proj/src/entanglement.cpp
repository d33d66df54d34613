#include "mirror/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace mirror {

ConcurrenceSample concurrence(const XState& s) {
    const double tripwire = -1e-6;

    // (rho_AS - rho_SA)^2 = -4 c_as_im^2, so the K1 radicand is a sum of squares.
    const double dp = s.p_aa - s.p_ss;
    const double rad1 = dp * dp + 4.0 * s.c_as_im * s.c_as_im;

    const double pge = s.p_gg * s.p_ee;
    if (pge < tripwire) throw NonPhysicalState("negative p_gg*p_ee beyond tolerance");

    const double sp = s.p_aa + s.p_ss;
    const double rad2 = sp * sp - 4.0 * s.c_as_re * s.c_as_re;
    if (rad2 < tripwire) throw NonPhysicalState("K2 radicand beyond tolerance");

    ConcurrenceSample out;
    out.k1 = std::sqrt(rad1) - 2.0 * std::sqrt(std::max(0.0, pge));
    out.k2 = 2.0 * std::hypot(s.c_ge_re, s.c_ge_im) - std::sqrt(std::max(0.0, rad2));
    out.concurrence = std::max({0.0, out.k1, out.k2});
    return out;
}

double early_slope_generation(const Coefficients& c) {
    return 4.0 * std::hypot(c.b3, c.d);
}

double series_k1_product10(const Coefficients& c, double tau) {
    const double r = std::hypot(c.b3, c.d);
    const double q = 28.0 * c.b1 * c.b1 + 16.0 * c.b1 * c.b2 + 4.0 * c.b2 * c.b2 +
                     16.0 * c.b3 * c.b3 - 16.0 * c.d * c.d - c.delta * c.delta;
    return 4.0 * r * tau - 4.0 * (3.0 * c.b1 + c.b2) * r * tau * tau +
           (2.0 / 3.0) * r * q * tau * tau * tau;
}

double series_k1_antisymmetric(const Coefficients& c, double tau) {
    const double b1 = c.b1, b2 = c.b2, b3 = c.b3;
    const double m = b1 + b2 - 2.0 * b3;
    const double cubic =
        b1 * b1 * b1 + b2 * b2 * b2 + b1 * b1 * (3.0 * b2 - 8.0 * b3) -
        8.0 * b2 * b2 * b3 + 12.0 * b2 * b3 * b3 - 8.0 * b3 * b3 * b3 +
        b1 * (3.0 * b2 * b2 - 8.0 * b2 * b3 + 12.0 * b3 * b3) -
        4.0 * b2 * c.d * c.delta + 4.0 * b1 * c.d * c.delta +
        2.0 * b3 * c.delta * c.delta;
    return 1.0 - 2.0 * tau * m + 2.0 * tau * tau * m * m -
           (4.0 / 3.0) * tau * tau * tau * cubic;
}

}  // namespace mirror
