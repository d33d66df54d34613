#include "mirror/oracle.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <array>
#include <cmath>
#include <string>

namespace mirror::oracle {

namespace {

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec16 = Eigen::Matrix<std::complex<double>, 16, 1>;
constexpr std::complex<double> I{0.0, 1.0};

// Pauli matrices in the single-qubit basis (|0> ground, |1> excited), with
// sigma3|1> = +|1> and (sigma1 - i sigma2)/2 = |0><1| the lowering operator.
Mat2 pauli(int i) {
    Mat2 m = Mat2::Zero();
    switch (i) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, I, -I, 0; break;
        case 3: m << -1, 0, 0, 1; break;
    }
    return m;
}

Mat4 kron2(const Mat2& a, const Mat2& b) {
    Mat4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return r;
}

// sigma_i acting on atom alpha (1-based), identity on the other.
Mat4 atom_op(int alpha, int i) {
    return alpha == 1 ? kron2(pauli(i), pauli(0)) : kron2(pauli(0), pauli(i));
}

// Column-stacking vectorization: vec(A rho B) = (B^T kron A) vec(rho).
Liouvillian super_sandwich(const Mat4& a, const Mat4& b) {
    Liouvillian r;
    const Mat4 bt = b.transpose();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r.block<4, 4>(4 * i, 4 * j) = bt(i, j) * a;
    return r;
}

Vec16 vectorize(const Mat4& m) {
    Vec16 v;
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) v(4 * j + i) = m(i, j);
    return v;
}

Mat4 unvectorize(const Vec16& v) {
    Mat4 m;
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) m(i, j) = v(4 * j + i);
    return m;
}

// Kossakowski block C_ij = b (delta_ij - i eps_ij3 - delta_3i delta_3j).
std::complex<double> kossakowski(double b, int i, int j) {
    std::complex<double> c{0.0, 0.0};
    if (i == j && i != 3) c += b;
    if (i == 1 && j == 2) c += -I * b;
    if (i == 2 && j == 1) c += I * b;
    return c;
}

// Transformation from the coupled basis (G, A, S, E) to the product basis.
Mat4 coupled_to_product() {
    const double r = 1.0 / std::sqrt(2.0);
    Mat4 u = Mat4::Zero();
    // columns: G=|00>, A=(|10>-|01>)/sqrt2, S=(|10>+|01>)/sqrt2, E=|11>
    u(0, 0) = 1.0;
    u(2, 1) = r;
    u(1, 1) = -r;
    u(2, 2) = r;
    u(1, 2) = r;
    u(3, 3) = 1.0;
    return u;
}

}  // namespace

Liouvillian build_liouvillian(const Coefficients& c) {
    const Mat4 id = kron2(pauli(0), pauli(0));

    // Effective Hamiltonian without the common shift: the differential
    // boundary shift plus the induced atom-atom coupling.
    Mat4 h = 0.5 * c.delta * (atom_op(2, 3) - atom_op(1, 3));
    h += -c.d * (kron2(pauli(1), pauli(1)) + kron2(pauli(2), pauli(2)));

    Liouvillian liou = -I * (super_sandwich(h, id) - super_sandwich(id, h));

    const auto block = [&](int alpha, int beta) {
        if (alpha == 1 && beta == 1) return c.b1;
        if (alpha == 2 && beta == 2) return c.b2;
        return c.b3;
    };
    for (int alpha = 1; alpha <= 2; ++alpha) {
        for (int beta = 1; beta <= 2; ++beta) {
            const double b = block(alpha, beta);
            for (int i = 1; i <= 3; ++i) {
                for (int j = 1; j <= 3; ++j) {
                    const auto cij = kossakowski(b, i, j);
                    if (cij == std::complex<double>(0.0, 0.0)) continue;
                    const Mat4 si = atom_op(alpha, i);
                    const Mat4 sj = atom_op(beta, j);
                    const Mat4 sisj = si * sj;
                    liou += 0.5 * cij *
                            (2.0 * super_sandwich(sj, si) -
                             super_sandwich(sisj, id) - super_sandwich(id, sisj));
                }
            }
        }
    }
    return liou;
}

DensityMatrix4 evolve_exact(const DensityMatrix4& rho0, const Liouvillian& liou, double tau) {
    if (tau < 0.0) throw OracleDivergence("negative evolution time");
    const Liouvillian e = (liou * tau).exp();
    Mat4 rho = unvectorize(e * vectorize(rho0));
    rho = 0.5 * (rho + rho.adjoint().eval());
    const double drift = std::abs(rho.trace().real() - 1.0) + std::abs(rho.trace().imag());
    if (drift > 1e-8) {
        throw OracleDivergence("trace drift " + std::to_string(drift));
    }
    return rho;
}

DensityMatrix4 to_product_basis(const XState& s) {
    Mat4 rc = Mat4::Zero();  // coupled basis order (G, A, S, E)
    rc(0, 0) = s.p_gg;
    rc(1, 1) = s.p_aa;
    rc(2, 2) = s.p_ss;
    rc(3, 3) = s.p_ee;
    rc(1, 2) = std::complex<double>(s.c_as_re, s.c_as_im);
    rc(2, 1) = std::conj(rc(1, 2));
    rc(0, 3) = std::complex<double>(s.c_ge_re, s.c_ge_im);
    rc(3, 0) = std::conj(rc(0, 3));
    const Mat4 u = coupled_to_product();
    return u * rc * u.adjoint();
}

XState to_x_state(const DensityMatrix4& rho) {
    const Mat4 u = coupled_to_product();
    const Mat4 rc = u.adjoint() * rho * u;
    XState s;
    s.p_gg = rc(0, 0).real();
    s.p_aa = rc(1, 1).real();
    s.p_ss = rc(2, 2).real();
    s.p_ee = rc(3, 3).real();
    s.c_as_re = rc(1, 2).real();
    s.c_as_im = rc(1, 2).imag();
    s.c_ge_re = rc(0, 3).real();
    s.c_ge_im = rc(0, 3).imag();
    return s;
}

double max_non_x_entry(const DensityMatrix4& rho) {
    const Mat4 u = coupled_to_product();
    const Mat4 rc = u.adjoint() * rho * u;
    double mx = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const bool ge_block = (i == 0 || i == 3) && (j == 0 || j == 3);
            const bool as_block = (i == 1 || i == 2) && (j == 1 || j == 2);
            if (ge_block || as_block) continue;
            mx = std::max(mx, std::abs(rc(i, j)));
        }
    }
    return mx;
}

double min_eigenvalue(const DensityMatrix4& rho) {
    Eigen::SelfAdjointEigenSolver<Mat4> es(rho);
    return es.eigenvalues().minCoeff();
}

double wootters_concurrence(const DensityMatrix4& rho) {
    const Mat4 yy = kron2(pauli(2), pauli(2));
    const Mat4 rho_tilde = yy * rho.conjugate() * yy;
    Eigen::ComplexEigenSolver<Mat4> es(rho * rho_tilde);
    std::array<double, 4> lam{};
    for (int i = 0; i < 4; ++i) {
        lam[i] = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
    }
    std::sort(lam.begin(), lam.end(), std::greater<double>());
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

}  // namespace mirror::oracle
