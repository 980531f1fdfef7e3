// Generalized spherical functions P^l_mn(cos theta): matrix elements of the
// unitary irreducible representations of SU(2), with the phase convention
// fixed by the fundamental 2x2 matrix (P^l_mn carries a factor i^(m-n)).
//
// Two independent evaluation routes are provided: finite sums over
// cos/sin monomials, and hypergeometric-series forms.  They are kept
// separate on purpose; the test suites compare them against each other.
#pragma once

#include <cmath>
#include <complex>

#include "lorsph/errors.hpp"
#include "lorsph/half_int.hpp"
#include "lorsph/numkernel.hpp"

namespace lorsph {

struct WeightTriple {
    HalfInt l, m, n;

    /// |m| <= l, |n| <= l, l >= 0, and l-m, l-n integers.
    void validate() const {
        if (l < HalfInt::whole(0)) throw IndexError("WeightTriple: l must be non-negative");
        if (!(l - m).is_integer() || !(l - n).is_integer())
            throw IndexError("WeightTriple: m, n must be in the same parity class as l");
        if (m < -l || m > l || n < -l || n > l)
            throw IndexError("WeightTriple: |m| and |n| must not exceed l");
    }
};

namespace detail {

// Finite sum over sin^2(theta/2) monomials, with the half-angle power
// prefactors folded into each term so no negative trig power appears.
// Requires m+n >= 0 (callers flip (m,n) -> (-m,-n), which preserves the
// value, P^l_mn = P^l_{-m,-n}).
inline Complex wigner_p_sin_sum(const WeightTriple& idx, double theta) {
    const double l = idx.l.value(), m = idx.m.value(), n = idx.n.value();
    const int mn = integer_diff(idx.m, idx.n);
    const double pref =
        std::exp(0.5 * (std::lgamma(l - m + 1) + std::lgamma(l - n + 1) -
                        std::lgamma(l + m + 1) - std::lgamma(l + n + 1)));
    const double ch = std::cos(theta / 2), sh = std::sin(theta / 2);
    const long long tmax = llround(l - m);
    const long long mpn = llround(m + n);
    double sum = 0.0;
    for (long long t = 0; t <= tmax; ++t) {
        double ig = inv_gamma_real(double(mn + t + 1));
        if (ig == 0.0) continue;
        double coef = std::exp(std::lgamma(l + m + t + 1) - std::lgamma(double(t + 1)) -
                               std::lgamma(l - m - t + 1)) *
                      ig;
        double term = coef * pow_int(ch, mpn) * pow_int(sh, mn + 2 * t);
        sum += (t % 2 == 0) ? term : -term;
    }
    return phase_i(mn) * pref * sum;
}

// Finite sum over tan^2(theta/2) monomials; folding makes every term a
// product of non-negative powers of cos(theta/2) and sin(theta/2), so the
// route is stable on all of [0, pi].
inline Complex wigner_p_tan_sum(const WeightTriple& idx, double theta) {
    const double l = idx.l.value(), m = idx.m.value(), n = idx.n.value();
    const int mn = integer_diff(idx.m, idx.n);
    const double pref =
        std::exp(0.5 * (std::lgamma(l - m + 1) + std::lgamma(l + m + 1) +
                        std::lgamma(l - n + 1) + std::lgamma(l + n + 1)));
    const double ch = std::cos(theta / 2), sh = std::sin(theta / 2);
    const long long twol = idx.l.twice();
    const long long jlo = mn < 0 ? -mn : 0;
    const long long jhi = llround(std::fmin(l - m, l + n));
    double sum = 0.0;
    for (long long j = jlo; j <= jhi; ++j) {
        double coef = std::exp(-std::lgamma(double(j + 1)) - std::lgamma(l - m - j + 1) -
                               std::lgamma(l + n - j + 1) - std::lgamma(double(mn + j + 1)));
        double term = coef * pow_int(ch, twol - mn - 2 * j) * pow_int(sh, mn + 2 * j);
        sum += (j % 2 == 0) ? term : -term;  // i^(2j) = (-1)^j
    }
    return phase_i(mn) * pref * sum;
}

// Hypergeometric route with argument sin^2(theta/2); branch chosen by the
// sign of m-n, (m,n) flipped first when m+n < 0.
inline Complex wigner_p_hyp_sin(const WeightTriple& idx, double theta) {
    HalfInt m = idx.m, n = idx.n;
    if ((m + n) < HalfInt::whole(0)) {
        m = -idx.n;
        n = -idx.m;
    }
    const double l = idx.l.value();
    const double sh = std::sin(theta / 2), ch = std::cos(theta / 2);
    const int mn = integer_diff(m, n);
    if (mn >= 0) {
        double pref = std::exp(0.5 * (std::lgamma(l - n.value() + 1) + std::lgamma(l + m.value() + 1) -
                                      std::lgamma(l - m.value() + 1) - std::lgamma(l + n.value() + 1)));
        Complex f = folded_2f1_reg(Complex(l + m.value() + 1), Complex(m.value() - l), mn, sh, 1.0);
        return phase_i(mn) * pref * pow_int(ch, llround(m.value() + n.value())) * f;
    }
    double pref = std::exp(0.5 * (std::lgamma(l - m.value() + 1) + std::lgamma(l + n.value() + 1) -
                                  std::lgamma(l - n.value() + 1) - std::lgamma(l + m.value() + 1)));
    Complex f = folded_2f1_reg(Complex(l + n.value() + 1), Complex(n.value() - l), -mn, sh, 1.0);
    return phase_i(-mn) * pref * pow_int(ch, llround(m.value() + n.value())) * f;
}

// Hypergeometric route with argument -tan^2(theta/2).  tan overflows as
// theta -> pi; callers switch to the sin-argument form there.
inline Complex wigner_p_hyp_tan(const WeightTriple& idx, double theta) {
    const double l = idx.l.value(), m = idx.m.value(), n = idx.n.value();
    const double u = std::tan(theta / 2), ch = std::cos(theta / 2);
    const int mn = integer_diff(idx.m, idx.n);
    if (mn >= 0) {
        double pref = std::exp(0.5 * (std::lgamma(l + m + 1) + std::lgamma(l - n + 1) -
                                      std::lgamma(l - m + 1) - std::lgamma(l + n + 1)));
        Complex f = folded_2f1_reg(Complex(m - l), Complex(-n - l), mn, u, -1.0);
        return phase_i(mn) * pref * pow_int(ch, idx.l.twice()) * f;
    }
    double pref = std::exp(0.5 * (std::lgamma(l + n + 1) + std::lgamma(l - m + 1) -
                                  std::lgamma(l - n + 1) - std::lgamma(l + m + 1)));
    Complex f = folded_2f1_reg(Complex(n - l), Complex(-m - l), -mn, u, -1.0);
    return phase_i(-mn) * pref * pow_int(ch, idx.l.twice()) * f;
}

}  // namespace detail

/// P^l_mn(cos theta) by finite sums: the tan-monomial form for
/// theta <= pi/2 and the sin-monomial form beyond.  Values for theta
/// outside [0, pi] follow the literal 4*pi periodicity of the half-angle
/// formulas.
inline Complex wigner_p(const WeightTriple& idx, double theta) {
    idx.validate();
    if (theta <= 1.5707963267948966) return detail::wigner_p_tan_sum(idx, theta);
    if ((idx.m + idx.n) < HalfInt::whole(0)) {
        WeightTriple flipped{idx.l, -idx.m, -idx.n};
        return detail::wigner_p_sin_sum(flipped, theta);
    }
    return detail::wigner_p_sin_sum(idx, theta);
}

/// Same value through the hypergeometric representations.
inline Complex wigner_p_hyp(const WeightTriple& idx, double theta) {
    idx.validate();
    if (theta <= 1.5707963267948966) return detail::wigner_p_hyp_tan(idx, theta);
    return detail::wigner_p_hyp_sin(idx, theta);
}

}  // namespace lorsph
