// Complexified Euler angles: the six real parameters of the group manifold
// and the (theta, tau) pair entering the hyperspherical functions.
#pragma once

#include <complex>

namespace lorsph {

/// theta^c = theta - i*tau.  theta is the rotation angle in [0, pi],
/// tau the boost rapidity (any real).
struct ComplexAngle {
    double theta = 0.0;
    double tau = 0.0;

    std::complex<double> theta_c() const { return {theta, -tau}; }
};

/// phi^c = phi - i*eps_phi, theta^c = theta - i*tau, psi^c = psi - i*eps_psi.
/// Canonical ranges: phi in [0, 2pi), theta in [0, pi], psi in [-2pi, 2pi).
struct ComplexEulerAngles {
    double phi = 0.0;
    double eps_phi = 0.0;
    double theta = 0.0;
    double tau = 0.0;
    double psi = 0.0;
    double eps_psi = 0.0;

    std::complex<double> phi_c() const { return {phi, -eps_phi}; }
    std::complex<double> theta_c() const { return {theta, -tau}; }
    std::complex<double> psi_c() const { return {psi, -eps_psi}; }
    ComplexAngle angle() const { return {theta, tau}; }

    static ComplexEulerAngles identity() { return {}; }
};

}  // namespace lorsph
