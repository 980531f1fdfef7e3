#pragma once

#include <cstddef>

namespace lorsph {

/// Truncation and verification thresholds. All evaluation routines take these
/// by value (or use the defaults), so there is no shared mutable state.
struct Tolerances {
    // series control
    double series_rel = 1e-15;        ///< relative size under which trailing terms count as negligible
    std::size_t series_max_terms = 100000;
    double tau_cap = 50.0;            ///< boost rapidity cap for the unitary-series sums

    // representation matrices
    int l_cap = 25;                   ///< dimension cap for dense matrices (2l+1 <= 51)

    // verification engine
    double fd_step = 1e-3;            ///< central-difference step
    double tol_ode = 1e-6;
    double tol_laplace = 1e-5;
    double tol_addition = 1e-10;
    double tol_homomorphism = 1e-9;
};

inline const Tolerances& default_tolerances() {
    static const Tolerances t{};
    return t;
}

}  // namespace lorsph
