// Hyperspherical functions Z^l_mn(cos theta^c): the theta^c-dependent core
// of every matrix element on the group, assembled from the SU(2) and SU(1,1)
// factors through the addition theorem,
//
//   Z^l_mn(cos theta^c) = sum_k P^l_mk(cos theta) P^l_kn(cosh tau),
//
// together with independent hypergeometric-product routes used for
// cross-checking.
#pragma once

#include <cmath>
#include <complex>

#include "lorsph/angles.hpp"
#include "lorsph/errors.hpp"
#include "lorsph/half_int.hpp"
#include "lorsph/numkernel.hpp"
#include "lorsph/rep_label.hpp"
#include "lorsph/su11.hpp"
#include "lorsph/su2.hpp"

namespace lorsph {

/// Addition-theorem evaluation.  This is the canonical route: every factor
/// is a finite monomial sum with no overflow anywhere on the domain.
inline Complex hyperspherical_z(const WeightTriple& idx, const ComplexAngle& angle) {
    idx.validate();
    Complex sum(0.0);
    for (int tk = -idx.l.twice(); tk <= idx.l.twice(); tk += 2) {
        HalfInt k = HalfInt::from_twice(tk);
        sum += detail::wigner_p_tan_sum({idx.l, idx.m, k}, angle.theta) *
               detail::jacobi_findim_sum({idx.l, k, idx.n}, angle.tau);
    }
    return sum;
}

namespace detail {

// k-sum of products of two hypergeometric factors, tan/tanh arguments.
inline Complex z_hyp_tan_variant(const WeightTriple& idx, const ComplexAngle& angle) {
    const double l = idx.l.value(), m = idx.m.value(), n = idx.n.value();
    const double u1 = std::tan(angle.theta / 2), u2 = std::tanh(angle.tau / 2);
    const double ch = std::cos(angle.theta / 2), chh = std::cosh(angle.tau / 2);
    const bool mirror = idx.n > idx.m;
    double pref;
    if (!mirror)
        pref = std::exp(0.5 * (std::lgamma(l + m + 1) + std::lgamma(l - n + 1) -
                               std::lgamma(l - m + 1) - std::lgamma(l + n + 1)));
    else
        pref = std::exp(0.5 * (std::lgamma(l - m + 1) + std::lgamma(l + n + 1) -
                               std::lgamma(l + m + 1) - std::lgamma(l - n + 1)));
    Complex sum(0.0);
    for (int tk = -idx.l.twice(); tk <= idx.l.twice(); tk += 2) {
        const double k = tk / 2.0;
        Complex f1, f2;
        long long ph;
        if (!mirror) {
            ph = llround(m - k);
            f1 = folded_2f1_reg(Complex(m - l), Complex(-k - l), ph, u1, -1.0);
            f2 = folded_2f1_reg(Complex(k - l), Complex(-n - l), llround(k - n), u2, 1.0);
        } else {
            ph = llround(k - m);
            f1 = folded_2f1_reg(Complex(k - l), Complex(-m - l), ph, u1, -1.0);
            f2 = folded_2f1_reg(Complex(n - l), Complex(-k - l), llround(n - k), u2, 1.0);
        }
        sum += phase_i(ph) * f1 * f2;
    }
    return pref * pow_int(ch, idx.l.twice()) * pow_int(chh, idx.l.twice()) * sum;
}

// Fallback with sin/sinh arguments; usable arbitrarily close to theta = pi.
inline Complex z_hyp_sin_variant(const WeightTriple& idx, const ComplexAngle& angle) {
    const double l = idx.l.value(), m = idx.m.value(), n = idx.n.value();
    const double u1 = std::sin(angle.theta / 2), u2 = std::sinh(angle.tau / 2);
    const double ch = std::cos(angle.theta / 2), chh = std::cosh(angle.tau / 2);
    const bool mirror = idx.n > idx.m;
    double pref;
    if (!mirror)
        pref = std::exp(0.5 * (std::lgamma(l + m + 1) + std::lgamma(l - n + 1) -
                               std::lgamma(l - m + 1) - std::lgamma(l + n + 1)));
    else
        pref = std::exp(0.5 * (std::lgamma(l - m + 1) + std::lgamma(l + n + 1) -
                               std::lgamma(l + m + 1) - std::lgamma(l - n + 1)));
    Complex sum(0.0);
    for (int tk = -idx.l.twice(); tk <= idx.l.twice(); tk += 2) {
        const double k = tk / 2.0;
        // at theta = pi only the k = -m term survives (the SU(2) factor is
        // anti-diagonal there); skipping the rest avoids 0 * inf
        if (ch == 0.0 && tk != -idx.m.twice()) continue;
        Complex f1, f2;
        long long ph;
        if (!mirror) {
            ph = llround(m - k);
            f1 = folded_2f1_reg(Complex(l + m + 1), Complex(m - l), ph, u1, 1.0);
            f2 = folded_2f1_reg(Complex(k + l + 1), Complex(k - l), llround(k - n), u2, -1.0);
        } else {
            ph = llround(k - m);
            f1 = folded_2f1_reg(Complex(l + k + 1), Complex(k - l), ph, u1, 1.0);
            f2 = folded_2f1_reg(Complex(n + l + 1), Complex(n - l), llround(n - k), u2, -1.0);
        }
        sum += phase_i(ph) * pow_int(ch, llround(m + k)) * pow_int(chh, llround(k + n)) * f1 * f2;
    }
    return pref * sum;
}

}  // namespace detail

/// Hypergeometric-product route for Z^l_mn.  Uses the tan/tanh-argument
/// form below theta = pi/2 and the sin/sinh form beyond, where powers of
/// tan(theta/2) would overflow the cos^(2l) compensation near pi.
inline Complex hyperspherical_z_hyp(const WeightTriple& idx, const ComplexAngle& angle) {
    idx.validate();
    if (angle.theta <= 1.5707963267948966) return detail::z_hyp_tan_variant(idx, angle);
    return detail::z_hyp_sin_variant(idx, angle);
}

/// Z^(-1/2 + i rho, l0)_mn: the finite t-sum of SU(2) x principal-series
/// factors.  |m| <= l0 is required; n only has to sit in the same parity
/// class (the SU(1,1) factor exists for any weight).
inline Complex hyperspherical_z_principal(double rho, HalfInt l0, HalfInt m, HalfInt n,
                                          const ComplexAngle& angle,
                                          const Tolerances& tol = default_tolerances()) {
    if (l0 < HalfInt::whole(0)) throw IndexError("hyperspherical_z_principal: l0 must be non-negative");
    if (m < -l0 || m > l0) throw IndexError("hyperspherical_z_principal: |m| must not exceed l0");
    if (!(l0 - m).is_integer())
        throw IndexError("hyperspherical_z_principal: m must be in the parity class of l0");
    if (!(m - n).is_integer()) throw IndexError("hyperspherical_z_principal: m - n must be an integer");
    Complex sum(0.0);
    for (int tt = -l0.twice(); tt <= l0.twice(); tt += 2) {
        HalfInt t = HalfInt::from_twice(tt);
        sum += detail::wigner_p_tan_sum({l0, m, t}, angle.theta) *
               detail::unitary_series_sum(Complex(0.0, rho), t, n, angle.tau, tol);
    }
    return sum;
}

/// Spherical functions of the second type, defined on the complex
/// two-sphere: the n = 0 column of the corresponding matrix elements.
inline Complex second_type_z(const RepLabel& label, HalfInt m, const ComplexAngle& angle,
                             const Tolerances& tol = default_tolerances()) {
    if (const auto* fd = std::get_if<FiniteDimLabel>(&label)) {
        fd->validate();
        return hyperspherical_z({fd->l, m, HalfInt::whole(0)}, angle);
    }
    if (const auto* pr = std::get_if<PrincipalLabel>(&label)) {
        pr->validate();
        if (m < -pr->l0 || m > pr->l0 || !(pr->l0 - m).is_integer())
            throw IndexError("second_type_z: m incompatible with the principal label");
        Complex sum(0.0);
        for (int tt = -pr->l0.twice(); tt <= pr->l0.twice(); tt += 2) {
            HalfInt t = HalfInt::from_twice(tt);
            sum += detail::wigner_p_tan_sum({pr->l0, m, t}, angle.theta) * conical(pr->rho, t, angle.tau, tol);
        }
        return sum;
    }
    const auto& su = std::get<SupplementaryLabel>(label);
    su.validate();
    return jacobi_p_supplementary({su.sigma, m, HalfInt::whole(0)}, angle.tau, tol);
}

}  // namespace lorsph
