// Parameter algebra tying together the three labellings of an irreducible
// representation -- the (l0, l1) pair, the weight pair (l, ldot), and the
// unitary-series parameters (lambda, rho) and sigma -- plus the Casimir
// eigenvalues and the ladder-operator matrices.
//
// Everything here is exact: indices are half-integers and l1 lives in the
// complex rationals, so the closure identities hold with == rather than a
// tolerance.
//
// Convention note: with the eigenvalue normalizations
//   Delta  = -2 (l0^2 + l1^2 - 1),   Delta' = -4 i l0 l1,
// the Laplace-Beltrami pair realizing X^2 = -l(l+1), Y^2 = -ldot(ldot+1)
// is X^2 = (Delta - i Delta')/8, Y^2 = (Delta + i Delta')/8, and the weight
// dictionary is l = (l0 + l1 - 1)/2, ldot = (l1 - l0 - 1)/2 (equivalently
// (l0, l1) = (l - ldot, l + ldot + 1)).
#pragma once

#include <complex>
#include <utility>

#include <boost/rational.hpp>

#include "lorsph/complex_matrix.hpp"
#include "lorsph/errors.hpp"
#include "lorsph/half_int.hpp"
#include "lorsph/numkernel.hpp"
#include "lorsph/rep_label.hpp"

namespace lorsph {

using Rational = boost::rational<long long>;

struct ComplexRational {
    Rational re{0}, im{0};

    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    ComplexRational operator-() const { return {-re, -im}; }
    friend bool operator==(const ComplexRational&, const ComplexRational&) = default;

    /// multiply by i
    ComplexRational times_i() const { return {-im, re}; }

    Complex to_complex() const {
        return {boost::rational_cast<double>(re), boost::rational_cast<double>(im)};
    }

    static ComplexRational real(Rational r) { return {r, Rational(0)}; }
    static ComplexRational imaginary(Rational r) { return {Rational(0), r}; }
    static ComplexRational from_half_int(HalfInt h) { return {Rational(h.twice(), 2), Rational(0)}; }
};

struct GNPair {
    HalfInt l0;
    ComplexRational l1;

    void validate() const {
        if (l0 < HalfInt::whole(0)) throw IndexError("GNPair: l0 must be a non-negative half-integer");
    }
};

/// Weight pair (l, ldot) of a GN label:  l = (l0 + l1 - 1)/2,
/// ldot = (l1 - l0 - 1)/2.  Both are non-negative half-integers exactly
/// when the label is finite-dimensional.
inline std::pair<ComplexRational, ComplexRational> gn_to_waerden(const GNPair& p) {
    ComplexRational l0 = ComplexRational::from_half_int(p.l0);
    ComplexRational one = ComplexRational::real(Rational(1));
    ComplexRational half = ComplexRational::real(Rational(1, 2));
    ComplexRational l = (l0 + p.l1 - one) * half;
    ComplexRational ldot = (p.l1 - l0 - one) * half;
    return {l, ldot};
}

/// Inverse dictionary for finite-dimensional labels:
/// (l0, l1) = (l - ldot, l + ldot + 1).  Requires l >= ldot so that l0
/// stays non-negative (the conjugate-reflected pair covers the rest).
inline GNPair gn_from_waerden(HalfInt l, HalfInt ldot) {
    if (ldot > l) throw IndexError("gn_from_waerden: requires l >= ldot");
    return {l - ldot, ComplexRational::real(Rational((l + ldot).twice() + 2, 2))};
}

struct PrincipalGN {
    GNPair pair;
    bool sign_ambiguous = false;  ///< set when lambda = 0 (l1 = +i rho/2 chosen)
};

/// GN label of the principal-series representation with parameters
/// (lambda, rho):  l0 = |lambda/2|, l1 = -i sign(lambda) rho / 2.
inline PrincipalGN principal_to_gn(long long lambda, Rational rho) {
    PrincipalGN out;
    out.pair.l0 = HalfInt::from_twice(static_cast<int>(lambda < 0 ? -lambda : lambda));
    if (lambda > 0)
        out.pair.l1 = ComplexRational::imaginary(-rho / 2);
    else if (lambda < 0)
        out.pair.l1 = ComplexRational::imaginary(rho / 2);
    else {
        out.pair.l1 = ComplexRational::imaginary(rho / 2);
        out.sign_ambiguous = true;
    }
    return out;
}

/// GN label of the supplementary series: (0, sigma/2).  The sign of l1 is
/// immaterial (both Casimir eigenvalues are even in l1).
inline GNPair supplementary_to_gn(Rational sigma) {
    if (sigma == Rational(0)) throw IndexError("supplementary_to_gn: sigma must be nonzero");
    return {HalfInt::whole(0), ComplexRational::real(sigma / 2)};
}

/// Casimir eigenvalues Delta = -2(l0^2 + l1^2 - 1), Delta' = -4 i l0 l1.
inline std::pair<ComplexRational, ComplexRational> casimir_eigenvalues(const GNPair& p) {
    ComplexRational l0 = ComplexRational::from_half_int(p.l0);
    ComplexRational one = ComplexRational::real(Rational(1));
    ComplexRational m2 = ComplexRational::real(Rational(-2));
    ComplexRational delta = m2 * (l0 * l0 + p.l1 * p.l1 - one);
    ComplexRational delta_prime = -(ComplexRational::real(Rational(4)) * l0 * p.l1).times_i();
    return {delta, delta_prime};
}

/// Laplace-Beltrami eigenvalues (X^2, Y^2) = (-l(l+1), -ldot(ldot+1)),
/// equal to ((Delta - i Delta')/8, (Delta + i Delta')/8).
inline std::pair<ComplexRational, ComplexRational> lb_eigenvalues(const GNPair& p) {
    auto [l, ldot] = gn_to_waerden(p);
    ComplexRational one = ComplexRational::real(Rational(1));
    return {-(l * (l + one)), -(ldot * (ldot + one))};
}

struct LadderMatrices {
    ComplexMatrix x_plus, x_minus, x3;
    ComplexMatrix y_plus, y_minus, y3;
};

/// Ladder matrices on the (2l+1)(2ldot+1)-dimensional product basis
/// |l,m> x |ldot,mdot>, ordered with m ascending (outer index) and mdot
/// ascending (inner index):
///   X-|m> = sqrt((l+m)(l-m+1)) |m-1>,  X+|m> = sqrt((l-m)(l+m+1)) |m+1>,
///   X3|m> = m |m>, and the same actions on the dotted factor for Y.
inline LadderMatrices ladder_matrices(HalfInt l, HalfInt ldot) {
    if (l < HalfInt::whole(0) || ldot < HalfInt::whole(0))
        throw IndexError("ladder_matrices: l, ldot must be non-negative");
    const int du = l.twice() + 1;   // undotted dimension
    const int dd = ldot.twice() + 1;
    const std::size_t dim = std::size_t(du) * dd;
    LadderMatrices out{ComplexMatrix(dim, dim), ComplexMatrix(dim, dim), ComplexMatrix(dim, dim),
                       ComplexMatrix(dim, dim), ComplexMatrix(dim, dim), ComplexMatrix(dim, dim)};
    auto index = [dd](int iu, int id) { return std::size_t(iu) * dd + id; };
    const double lv = l.value(), ldv = ldot.value();
    for (int iu = 0; iu < du; ++iu) {
        const double m = -lv + iu;
        for (int id = 0; id < dd; ++id) {
            const double md = -ldv + id;
            const std::size_t col = index(iu, id);
            out.x3(col, col) = m;
            out.y3(col, col) = md;
            if (iu > 0) out.x_minus(index(iu - 1, id), col) = std::sqrt((lv + m) * (lv - m + 1));
            if (iu + 1 < du) out.x_plus(index(iu + 1, id), col) = std::sqrt((lv - m) * (lv + m + 1));
            if (id > 0) out.y_minus(index(iu, id - 1), col) = std::sqrt((ldv + md) * (ldv - md + 1));
            if (id + 1 < dd) out.y_plus(index(iu, id + 1), col) = std::sqrt((ldv - md) * (ldv + md + 1));
        }
    }
    return out;
}

}  // namespace lorsph
