#ifndef MIRROR_ORACLE_HPP
#define MIRROR_ORACLE_HPP

#include <Eigen/Dense>
#include <complex>

#include "mirror/coefficients.hpp"
#include "mirror/dynamics.hpp"
#include "mirror/errors.hpp"

namespace mirror::oracle {

// Full-space verification path: the 16-dimensional Liouvillian built from the
// general GKLS form, evolved by matrix exponential. Used to validate the
// reduced X-block ODEs and the closed-form concurrence.

using DensityMatrix4 = Eigen::Matrix4cd;           // product basis {|00>,|01>,|10>,|11>}
using Liouvillian = Eigen::Matrix<std::complex<double>, 16, 16>;

// Commutator terms (asymmetric shift plus induced atom-atom coupling; the
// common shift is dropped) plus the dissipator with the six Kossakowski blocks.
Liouvillian build_liouvillian(const Coefficients& c);

// exp(L tau) applied to vec(rho0), re-Hermitized. Throws OracleDivergence on
// trace drift beyond 1e-8.
DensityMatrix4 evolve_exact(const DensityMatrix4& rho0, const Liouvillian& liou, double tau);

// Basis conversions between the X-state coordinates (coupled basis) and the
// product-basis matrix.
DensityMatrix4 to_product_basis(const XState& s);
XState to_x_state(const DensityMatrix4& rho);

// Largest magnitude among the 8 matrix elements outside the X blocks of the
// coupled-basis representation.
double max_non_x_entry(const DensityMatrix4& rho);

double min_eigenvalue(const DensityMatrix4& rho);

// Wootters' spin-flip concurrence on a general two-qubit density matrix.
double wootters_concurrence(const DensityMatrix4& rho);

}  // namespace mirror::oracle

#endif
