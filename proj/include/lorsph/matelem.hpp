// Matrix elements on the full six-parameter group manifold, representation
// matrices T_l, the fundamental 2x2 matrix map and its inverse (Euler-angle
// extraction used to compose group elements).
#pragma once

#include <cmath>
#include <complex>

#include "lorsph/angles.hpp"
#include "lorsph/complex_matrix.hpp"
#include "lorsph/errors.hpp"
#include "lorsph/half_int.hpp"
#include "lorsph/hypersph.hpp"
#include "lorsph/numkernel.hpp"
#include "lorsph/su11.hpp"

namespace lorsph {

namespace detail {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
}  // namespace detail

/// M^l_mn(g) = exp(-i(m phi^c + n psi^c)) Z^l_mn(cos theta^c).  The dotted
/// variant uses the conjugated angles and the opposite phase sign,
/// exp(+i(m conj(phi^c) + n conj(psi^c))) Z^l_mn(cos conj(theta^c)).
inline Complex matrix_element_findim(const WeightTriple& idx, const ComplexEulerAngles& g,
                                     bool dotted = false) {
    idx.validate();
    const Complex i(0.0, 1.0);
    if (!dotted) {
        Complex z = hyperspherical_z(idx, {g.theta, g.tau});
        return std::exp(-i * (idx.m.value() * g.phi_c() + idx.n.value() * g.psi_c())) * z;
    }
    Complex z = hyperspherical_z(idx, {g.theta, -g.tau});
    return std::exp(i * (idx.m.value() * std::conj(g.phi_c()) + idx.n.value() * std::conj(g.psi_c()))) * z;
}

/// The (2l+1) x (2l+1) representation matrix with weight-labeled entries,
/// rows and columns ordered from -l to l.
inline ComplexMatrix rep_matrix(HalfInt l, const ComplexEulerAngles& g,
                                const Tolerances& tol = default_tolerances()) {
    if (l < HalfInt::whole(0)) throw IndexError("rep_matrix: l must be non-negative");
    if (l.twice() > 2 * tol.l_cap) throw IndexError("rep_matrix: l exceeds the configured cap");
    ComplexMatrix T = ComplexMatrix::weight_labeled(l);
    for (int tm = -l.twice(); tm <= l.twice(); tm += 2)
        for (int tn = -l.twice(); tn <= l.twice(); tn += 2) {
            HalfInt m = HalfInt::from_twice(tm), n = HalfInt::from_twice(tn);
            T.at_weight(m, n) = matrix_element_findim({l, m, n}, g);
        }
    return T;
}

/// The fundamental SL(2,C) matrix of a group element (det = 1).
inline ComplexMatrix sl2c_from_angles(const ComplexEulerAngles& g) {
    return rep_matrix(HalfInt::from_twice(1), g);
}

namespace detail {

inline double wrap_phi(double phi) {
    while (phi < 0) phi += kTwoPi;
    while (phi >= kTwoPi) phi -= kTwoPi;
    return phi;
}

}  // namespace detail

/// Euler angles of the product sl2c(g1) * sl2c(g2), recovered by inverting
/// the fundamental parametrization.  Round-trips through sl2c_from_angles.
/// Throws DegenerateExtractionError when the product sits too close to the
/// theta in {0, pi} branch cuts with mixed phases.
inline ComplexEulerAngles angles_compose(const ComplexEulerAngles& g1, const ComplexEulerAngles& g2) {
    const ComplexMatrix M = sl2c_from_angles(g1) * sl2c_from_angles(g2);
    const Complex a = M(0, 0), b = M(0, 1), c = M(1, 0), d = M(1, 1);
    const Complex i(0.0, 1.0);
    const double scale = M.max_norm();

    ComplexEulerAngles out;

    // diagonal product: a z-rotation combined with a 3-axis boost; the
    // matrix only fixes phi^c + psi^c, so everything is assigned to psi^c
    if (std::abs(b) <= 1e-14 * scale && std::abs(c) <= 1e-14 * scale) {
        out.psi = 2 * std::arg(a);
        if (out.psi >= detail::kTwoPi) out.psi -= 2 * detail::kTwoPi;
        out.eps_psi = 2 * std::log(std::abs(a));
        return out;
    }
    // anti-diagonal product: theta = pi, tau = 0; only phi^c - psi^c is
    // fixed, psi^c is set to zero by convention
    if (std::abs(a) <= 1e-14 * scale && std::abs(d) <= 1e-14 * scale) {
        out.theta = detail::kPi;
        Complex eihalf = -i * b;  // e^{i phi^c / 2}
        double phi = 2 * std::arg(eihalf);
        out.eps_phi = 2 * std::log(std::abs(eihalf));
        if (phi < 0) {
            phi += detail::kTwoPi;
            out.psi = -detail::kTwoPi;  // compensates the half-angle sign flip
        }
        out.phi = phi;
        return out;
    }

    const Complex costhc = a * d + b * c;
    const Complex thc = std::acos(costhc);
    const Complex sinthc = std::sin(thc);
    if (std::abs(sinthc) < 1e-6)
        throw DegenerateExtractionError("angles_compose: product sits on a parametrization branch cut");
    out.theta = thc.real();
    out.tau = -thc.imag();

    Complex eiphi, eipsi;
    if (std::abs(a) >= std::abs(d)) {
        eiphi = -2.0 * i * a * b / sinthc;
        eipsi = -2.0 * i * a * c / sinthc;
    } else {
        eiphi = 1.0 / (-2.0 * i * d * c / sinthc);
        eipsi = 1.0 / (-2.0 * i * d * b / sinthc);
    }
    out.phi = detail::wrap_phi(std::arg(eiphi));
    out.eps_phi = std::log(std::abs(eiphi));
    out.eps_psi = std::log(std::abs(eipsi));

    // psi is defined modulo 4*pi; the half-angle anchor picks the branch
    const double psi0 = std::arg(eipsi);
    const Complex phic(out.phi, -out.eps_phi);
    double best_resid = -1.0;
    double best_psi = psi0;
    for (double shift : {0.0, detail::kTwoPi, -detail::kTwoPi}) {
        double psi = psi0 + shift;
        if (psi < -detail::kTwoPi || psi >= detail::kTwoPi) continue;
        Complex psic(psi, -out.eps_psi);
        double resid;
        if (std::abs(a) >= std::abs(d))
            resid = std::abs(std::exp(i * (phic + psic) / 2.0) * std::cos(thc / 2.0) - a);
        else
            resid = std::abs(std::exp(-i * (phic + psic) / 2.0) * std::cos(thc / 2.0) - d);
        if (best_resid < 0 || resid < best_resid) {
            best_resid = resid;
            best_psi = psi;
        }
    }
    out.psi = best_psi;
    return out;
}

/// Principal-series matrix element
/// M^(-1/2 + i rho, l0)_mn(g) = e^(-m(eps_phi + i phi) - n(eps_psi + i psi))
///                              Z^(-1/2 + i rho, l0)_mn(cos theta^c).
inline Complex matrix_element_principal(double rho, HalfInt l0, HalfInt m, HalfInt n,
                                        const ComplexEulerAngles& g,
                                        const Tolerances& tol = default_tolerances()) {
    Complex z = hyperspherical_z_principal(rho, l0, m, n, {g.theta, g.tau}, tol);
    const Complex i(0.0, 1.0);
    return std::exp(-m.value() * (g.eps_phi + i * g.phi) - n.value() * (g.eps_psi + i * g.psi)) * z;
}

/// Supplementary-series matrix element: the l0 = 0, rho = i sigma
/// specialization; no theta dependence remains.
inline Complex matrix_element_supplementary(double sigma, HalfInt m, HalfInt n,
                                            const ComplexEulerAngles& g,
                                            const Tolerances& tol = default_tolerances()) {
    Complex p = jacobi_p_supplementary({sigma, m, n}, g.tau, tol);
    const Complex i(0.0, 1.0);
    return std::exp(-m.value() * (g.eps_phi + i * g.phi) - n.value() * (g.eps_psi + i * g.psi)) * p;
}

}  // namespace lorsph
