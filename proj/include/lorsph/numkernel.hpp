// Complex log-gamma, pole-safe reciprocal gamma, and the Gauss
// hypergeometric series for the argument regimes used by the
// representation-function modules.
#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>

#include "lorsph/errors.hpp"
#include "lorsph/tolerances.hpp"

namespace lorsph {

using Complex = std::complex<double>;

namespace detail {

inline bool near_int(double x, long long& out) {
    double r = std::round(x);
    if (std::abs(x - r) < 1e-12) {
        out = static_cast<long long>(r);
        return true;
    }
    return false;
}

inline bool is_nonpos_int(const Complex& z, long long& out) {
    if (std::abs(z.imag()) > 1e-12) return false;
    long long r;
    if (!near_int(z.real(), r)) return false;
    if (r > 0) return false;
    out = r;
    return true;
}

/// i^k for integer k (phase factors i^(m-n), i^(2j)).
inline Complex phase_i(long long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

/// Exact integer power by repeated squaring; pow_int(0,0) = 1.
template <typename T>
inline T pow_int(T base, long long e) {
    if (e < 0) return T(1.0) / pow_int(base, -e);
    T acc(1.0);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace detail

/// Principal-branch log-gamma via a 9-term Lanczos sum (g = 7), with the
/// reflection formula for Re z < 1/2. exp(ln_gamma(z)) == Gamma(z) to
/// working precision everywhere; on the reflected half-plane the imaginary
/// part may differ from the principal value by a multiple of 2*pi.
inline Complex ln_gamma(Complex z) {
    static const double lanczos[9] = {
        0.99999999999980993,   676.5203681218851,    -1259.1392167224028,
        771.32342877765313,    -176.61502916214059,  12.507343278686905,
        -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

    long long pole;
    if (detail::is_nonpos_int(z, pole))
        throw PoleError("ln_gamma: argument is a non-positive integer");

    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        const double pi = 3.14159265358979323846;
        Complex log_sin = std::log(std::sin(pi * z));
        return std::log(Complex(pi)) - log_sin - ln_gamma(Complex(1.0) - z);
    }
    Complex acc(lanczos[0]);
    for (int k = 1; k < 9; ++k) acc += lanczos[k] / (z + Complex(k - 1));
    Complex t = z + Complex(6.5);
    const double half_log_two_pi = 0.91893853320467274178;
    return half_log_two_pi + (z - Complex(0.5)) * std::log(t) - t + std::log(acc);
}

/// 1/Gamma(x) with the convention that the value is exactly zero at the
/// poles x = 0, -1, -2, ...  This is what makes the finite sums honour
/// their stated summation limits without explicit index bookkeeping.
inline double inv_gamma_real(double x) {
    long long r;
    if (detail::near_int(x, r) && r <= 0) return 0.0;
    return 1.0 / std::tgamma(x);
}

/// Gauss hypergeometric 2F1(a,b;c;x) for real x < 1.  Terminating
/// parameter sets (a or b a non-positive integer) are summed as the exact
/// polynomial, which also covers the x < 0 cases that arise from the
/// -tan^2 and -sinh^2 argument forms.
inline Complex gauss_2f1(Complex a, Complex b, Complex c, double x,
                         const Tolerances& tol = default_tolerances()) {
    if (x == 0.0) return {1.0, 0.0};

    long long na, nb, nc;
    bool term_a = detail::is_nonpos_int(a, na);
    bool term_b = detail::is_nonpos_int(b, nb);
    bool c_pole = detail::is_nonpos_int(c, nc);

    long long N = -1;  // polynomial degree when terminating
    if (term_a) N = -na;
    if (term_b && (N < 0 || -nb < N)) N = -nb;

    if (c_pole && (N < 0 || N - 1 >= -nc))
        throw ParameterPoleError("gauss_2f1: c hits a pole before the series terminates");

    Complex term(1.0), sum(1.0);
    if (N >= 0) {
        for (long long k = 0; k < N; ++k) {
            term *= (a + Complex(double(k))) * (b + Complex(double(k))) * x /
                    ((c + Complex(double(k))) * double(k + 1));
            sum += term;
        }
        return sum;
    }
    if (x <= -1.0 || x >= 1.0)
        throw NoConvergenceError("gauss_2f1: non-terminating series needs |x| < 1");

    int quiet = 0;
    for (std::size_t k = 0; k < tol.series_max_terms; ++k) {
        term *= (a + Complex(double(k))) * (b + Complex(double(k))) * x /
                ((c + Complex(double(k))) * double(k + 1));
        sum += term;
        if (std::abs(term) <= tol.series_rel * std::abs(sum)) {
            if (++quiet >= 3) return sum;
        } else {
            quiet = 0;
        }
    }
    throw NoConvergenceError("gauss_2f1: truncation cap exceeded");
}

namespace detail {

/// u^p * 2F1(a,b;p+1;sgn*u^2) / Gamma(p+1), with the power folded into the
/// series term by term:
///
///   sum_j (a)_j (b)_j sgn^j u^(p+2j) / (j! (p+j)!),   j >= max(0,-p).
///
/// Well defined for any integer p (the reciprocal factorial kills the
/// leading terms when p < 0), and free of 0*inf at u = 0.  This is the
/// regularized form every tan/tanh/sin/sinh-argument hypergeometric
/// representation reduces to.
inline Complex folded_2f1_reg(Complex a, Complex b, long long p, double u, double sgn,
                              const Tolerances& tol = default_tolerances()) {
    if (u == 0.0) return p == 0 ? Complex(1.0) : Complex(0.0);
    long long j0 = p < 0 ? -p : 0;
    Complex coef(1.0);
    for (long long q = 0; q < j0; ++q)
        coef *= (a + Complex(double(q))) * (b + Complex(double(q))) * sgn;
    coef /= std::exp(std::lgamma(double(j0 + 1)) + std::lgamma(double(p + j0 + 1)));

    double upow = pow_int(u, p + 2 * j0);
    const double u2 = u * u;
    Complex sum = coef * upow;
    int quiet = 0;
    for (std::size_t it = 0; it < tol.series_max_terms; ++it) {
        long long j = j0 + static_cast<long long>(it);
        coef *= (a + Complex(double(j))) * (b + Complex(double(j))) * sgn /
                (double(j + 1) * double(p + j + 1));
        if (coef == Complex(0.0)) return sum;  // terminating polynomial exhausted
        upow *= u2;
        Complex term = coef * upow;
        sum += term;
        if (std::abs(term) <= tol.series_rel * std::abs(sum)) {
            if (++quiet >= 3) return sum;
        } else {
            quiet = 0;
        }
    }
    throw NoConvergenceError("folded_2f1_reg: truncation cap exceeded");
}

}  // namespace detail
}  // namespace lorsph
