// Jacobi-type functions on SU(1,1): matrix elements of the finite-dimensional
// representations (argument cosh tau), of the principal unitary series with
// degree -1/2 + i*rho, and of the supplementary series -1/2 - sigma obtained
// by the substitution rho -> i*sigma.  Conical functions are the (t, 0)
// elements of the principal series.
#pragma once

#include <cmath>
#include <complex>

#include "lorsph/errors.hpp"
#include "lorsph/half_int.hpp"
#include "lorsph/numkernel.hpp"
#include "lorsph/su2.hpp"
#include "lorsph/tolerances.hpp"

namespace lorsph {

struct PrincipalIndex {
    double rho = 0.0;
    HalfInt m, n;

    void validate() const {
        if (!std::isfinite(rho)) throw IndexError("PrincipalIndex: rho must be finite");
        if (!(m - n).is_integer()) throw IndexError("PrincipalIndex: m - n must be an integer");
    }
};

struct SupplementaryIndex {
    double sigma = 0.0;
    HalfInt m, n;

    void validate() const {
        if (sigma == 0.0 || !std::isfinite(sigma))
            throw IndexError("SupplementaryIndex: sigma must be nonzero and finite");
        if (!m.is_integer() || !n.is_integer())
            throw IndexError("SupplementaryIndex: the supplementary series carries integer weights only");
    }
};

namespace detail {

// Finite monomial sum for the finite-dimensional functions; valid for any
// real tau (odd sinh powers keep the sign information, which is what the
// conjugated-angle evaluations rely on).
inline Complex jacobi_findim_sum(const WeightTriple& idx, double tau) {
    const double l = idx.l.value(), m = idx.m.value(), n = idx.n.value();
    const int mn = integer_diff(idx.m, idx.n);
    const double pref =
        std::exp(0.5 * (std::lgamma(l - m + 1) + std::lgamma(l + m + 1) +
                        std::lgamma(l - n + 1) + std::lgamma(l + n + 1)));
    const double ch = std::cosh(tau / 2), sh = std::sinh(tau / 2);
    const long long jlo = mn < 0 ? -mn : 0;
    const long long jhi = llround(std::fmin(l - m, l + n));
    double sum = 0.0;
    for (long long j = jlo; j <= jhi; ++j) {
        double coef = std::exp(-std::lgamma(double(j + 1)) - std::lgamma(l - m - j + 1) -
                               std::lgamma(l + n - j + 1) - std::lgamma(double(mn + j + 1)));
        sum += coef * pow_int(ch, idx.l.twice() - mn - 2 * j) * pow_int(sh, mn + 2 * j);
    }
    return Complex(pref * sum);
}

// Hypergeometric route, argument -sinh^2(tau/2); terminating for all tau.
inline Complex jacobi_findim_hyp_sinh(const WeightTriple& idx, double tau) {
    HalfInt m = idx.m, n = idx.n;
    if ((m + n) < HalfInt::whole(0)) {
        m = -idx.n;
        n = -idx.m;
    }
    const double l = idx.l.value();
    const double sh = std::sinh(tau / 2), ch = std::cosh(tau / 2);
    const int mn = integer_diff(m, n);
    if (mn >= 0) {
        double pref = std::exp(0.5 * (std::lgamma(l - n.value() + 1) + std::lgamma(l + m.value() + 1) -
                                      std::lgamma(l - m.value() + 1) - std::lgamma(l + n.value() + 1)));
        Complex f = folded_2f1_reg(Complex(l + m.value() + 1), Complex(m.value() - l), mn, sh, -1.0);
        return pref * pow_int(ch, llround(m.value() + n.value())) * f;
    }
    double pref = std::exp(0.5 * (std::lgamma(l - m.value() + 1) + std::lgamma(l + n.value() + 1) -
                                  std::lgamma(l - n.value() + 1) - std::lgamma(l + m.value() + 1)));
    Complex f = folded_2f1_reg(Complex(l + n.value() + 1), Complex(n.value() - l), -mn, sh, -1.0);
    return pref * pow_int(ch, llround(m.value() + n.value())) * f;
}

// Hypergeometric route, argument tanh^2(tau/2).
inline Complex jacobi_findim_hyp_tanh(const WeightTriple& idx, double tau) {
    const double l = idx.l.value(), m = idx.m.value(), n = idx.n.value();
    const double u = std::tanh(tau / 2), ch = std::cosh(tau / 2);
    const int mn = integer_diff(idx.m, idx.n);
    if (mn >= 0) {
        double pref = std::exp(0.5 * (std::lgamma(l + m + 1) + std::lgamma(l - n + 1) -
                                      std::lgamma(l - m + 1) - std::lgamma(l + n + 1)));
        Complex f = folded_2f1_reg(Complex(m - l), Complex(-n - l), mn, u, 1.0);
        return pref * pow_int(ch, idx.l.twice()) * f;
    }
    double pref = std::exp(0.5 * (std::lgamma(l + n + 1) + std::lgamma(l - m + 1) -
                                  std::lgamma(l - n + 1) - std::lgamma(l + m + 1)));
    Complex f = folded_2f1_reg(Complex(n - l), Complex(-m - l), -mn, u, 1.0);
    return pref * pow_int(ch, idx.l.twice()) * f;
}

inline Complex inv_gamma_complex(const Complex& z) {
    long long r;
    if (is_nonpos_int(z, r)) return {0.0, 0.0};
    return std::exp(-ln_gamma(z));
}

// Series for the unitary-series functions with degree nu - 1/2
// (nu = i*rho: principal; nu = -sigma: supplementary).  The whole term is
// advanced by a multiplicative recurrence, so the reciprocal gammas of
// large negative argument never appear as intermediate values:
//
//   P(cosh tau) = sqrt(G(nu-n+1/2) G(nu+n+1/2) G(nu-m+1/2) G(nu+m+1/2))
//                 * cosh(tau/2)^(2 nu - 1)
//                 * sum_{s >= max(0, m-n)} tanh(tau/2)^(n-m+2s)
//                   / (s! (n-m+s)! G(nu-n+1/2-s) G(nu+m+1/2-s)).
inline Complex unitary_series_sum(Complex nu, HalfInt m, HalfInt n, double tau,
                                  const Tolerances& tol) {
    if (std::abs(tau) > tol.tau_cap)
        throw NoConvergenceError("unitary series: |tau| exceeds the rapidity cap");

    const int nm = integer_diff(n, m);  // n - m
    const long long s0 = nm < 0 ? -nm : 0;
    const double t = std::tanh(tau / 2);

    const Complex x1 = nu - Complex(n.value()) + 0.5;
    const Complex x2 = nu + Complex(m.value()) + 0.5;

    Complex pref = std::exp(0.5 * (ln_gamma(x1) + ln_gamma(nu + Complex(n.value()) + 0.5) +
                                   ln_gamma(nu - Complex(m.value()) + 0.5) + ln_gamma(x2)));
    pref *= std::exp((2.0 * nu - 1.0) * std::log(std::cosh(tau / 2)));

    Complex term = pow_int(Complex(t), nm + 2 * s0) *
                   std::exp(-std::lgamma(double(s0 + 1)) - std::lgamma(double(nm + s0 + 1))) *
                   inv_gamma_complex(x1 - Complex(double(s0))) * inv_gamma_complex(x2 - Complex(double(s0)));
    Complex sum = term;
    const double t2 = t * t;
    int quiet = 0;
    for (std::size_t it = 0; it < tol.series_max_terms; ++it) {
        double s = double(s0 + static_cast<long long>(it));
        term *= t2 * (x1 - (s + 1)) * (x2 - (s + 1)) / ((s + 1) * (nm + s + 1));
        sum += term;
        if (std::abs(term) <= tol.series_rel * std::abs(sum)) {
            if (++quiet >= 3) return pref * sum;
        } else {
            quiet = 0;
        }
    }
    throw NoConvergenceError("unitary series: truncation cap exceeded");
}

// Same sum in real arithmetic (nu real):  the supplementary-series path.
// The gamma prefactor is still assembled from complex log-gammas so the
// square-root branch matches the principal-series code exactly.
inline Complex supplementary_series_sum(double nusig, HalfInt m, HalfInt n, double tau,
                                        const Tolerances& tol) {
    if (std::abs(tau) > tol.tau_cap)
        throw NoConvergenceError("unitary series: |tau| exceeds the rapidity cap");

    const int nm = integer_diff(n, m);
    const long long s0 = nm < 0 ? -nm : 0;
    const double t = std::tanh(tau / 2);
    const double x1 = nusig - n.value() + 0.5;
    const double x2 = nusig + m.value() + 0.5;

    Complex pref = std::exp(0.5 * (ln_gamma(Complex(x1)) + ln_gamma(Complex(nusig + n.value() + 0.5)) +
                                   ln_gamma(Complex(nusig - m.value() + 0.5)) + ln_gamma(Complex(x2))));
    pref *= std::pow(std::cosh(tau / 2), 2.0 * nusig - 1.0);

    double term = pow_int(t, nm + 2 * s0) *
                  std::exp(-std::lgamma(double(s0 + 1)) - std::lgamma(double(nm + s0 + 1))) *
                  inv_gamma_real(x1 - double(s0)) * inv_gamma_real(x2 - double(s0));
    double sum = term;
    const double t2 = t * t;
    int quiet = 0;
    for (std::size_t it = 0; it < tol.series_max_terms; ++it) {
        double s = double(s0 + static_cast<long long>(it));
        term *= t2 * (x1 - (s + 1)) * (x2 - (s + 1)) / ((s + 1) * (nm + s + 1));
        sum += term;
        if (std::abs(term) <= tol.series_rel * std::abs(sum)) {
            if (++quiet >= 3) return pref * sum;
        } else {
            quiet = 0;
        }
    }
    throw NoConvergenceError("unitary series: truncation cap exceeded");
}

// (corrected) hypergeometric form of the principal-series functions.
inline Complex jacobi_principal_2f1(double rho, HalfInt m, HalfInt n, double tau,
                                    const Tolerances& tol = default_tolerances()) {
    const Complex nu(0.0, rho);
    const double u = std::tanh(tau / 2);
    const Complex chpow = std::exp((2.0 * nu - 1.0) * std::log(std::cosh(tau / 2)));
    const int mn = integer_diff(m, n);
    if (mn >= 0) {
        Complex pref = std::exp(0.5 * (ln_gamma(nu + Complex(m.value()) + 0.5) + ln_gamma(nu - Complex(n.value()) + 0.5) -
                                       ln_gamma(nu - Complex(m.value()) + 0.5) - ln_gamma(nu + Complex(n.value()) + 0.5)));
        Complex f = folded_2f1_reg(Complex(m.value() + 0.5) - nu, Complex(-n.value() + 0.5) - nu, mn, u, 1.0, tol);
        return pref * chpow * f;
    }
    Complex pref = std::exp(0.5 * (ln_gamma(nu + Complex(n.value()) + 0.5) + ln_gamma(nu - Complex(m.value()) + 0.5) -
                                   ln_gamma(nu - Complex(n.value()) + 0.5) - ln_gamma(nu + Complex(m.value()) + 0.5)));
    Complex f = folded_2f1_reg(Complex(n.value() + 0.5) - nu, Complex(-m.value() + 0.5) - nu, -mn, u, 1.0, tol);
    return pref * chpow * f;
}

}  // namespace detail

/// Finite-dimensional P^l_mn(cosh tau), by the finite monomial sum.
inline Complex jacobi_p_findim(const WeightTriple& idx, double tau) {
    idx.validate();
    return detail::jacobi_findim_sum(idx, tau);
}

/// Same value through the hypergeometric representation (sinh-argument form).
inline Complex jacobi_p_findim_hyp(const WeightTriple& idx, double tau) {
    idx.validate();
    return detail::jacobi_findim_hyp_sinh(idx, tau);
}

/// Principal-series P^(-1/2 + i rho)_mn(cosh tau).
inline Complex jacobi_p_principal(const PrincipalIndex& idx, double tau,
                                  const Tolerances& tol = default_tolerances()) {
    idx.validate();
    return detail::unitary_series_sum(Complex(0.0, idx.rho), idx.m, idx.n, tau, tol);
}

/// Supplementary-series P^(-1/2 - sigma)_mn(cosh tau): the principal-series
/// function continued to rho = i*sigma, evaluated through real series
/// arithmetic.
inline Complex jacobi_p_supplementary(const SupplementaryIndex& idx, double tau,
                                      const Tolerances& tol = default_tolerances()) {
    idx.validate();
    return detail::supplementary_series_sum(-idx.sigma, idx.m, idx.n, tau, tol);
}

/// Conical function P^t_(-1/2 + i rho)(cosh tau): the (t, 0) principal element.
inline Complex conical(double rho, HalfInt t, double tau,
                       const Tolerances& tol = default_tolerances()) {
    return jacobi_p_principal({rho, t, HalfInt::whole(0)}, tau, tol);
}

}  // namespace lorsph
