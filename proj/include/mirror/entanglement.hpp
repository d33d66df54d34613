#ifndef MIRROR_ENTANGLEMENT_HPP
#define MIRROR_ENTANGLEMENT_HPP

#include "mirror/coefficients.hpp"
#include "mirror/dynamics.hpp"
#include "mirror/errors.hpp"

namespace mirror {

// Concurrence of an X state: C = max(0, K1, K2).
struct ConcurrenceSample {
    double k1 = 0.0;
    double k2 = 0.0;
    double concurrence = 0.0;
};

// Closed-form X-state concurrence. Radicands are clamped at 0; a radicand
// below -1e-6 signals a state outside tolerance and throws NonPhysicalState.
ConcurrenceSample concurrence(const XState& s);

// Initial growth rate of K1 from |10>: 4 sqrt(b3^2 + d^2). Independent of
// delta by construction.
double early_slope_generation(const Coefficients& c);

// Cubic early-time expansion of K1 for the |10> initial state.
double series_k1_product10(const Coefficients& c, double tau);

// Cubic early-time expansion of K1 for the antisymmetric initial state.
double series_k1_antisymmetric(const Coefficients& c, double tau);

}  // namespace mirror

#endif
