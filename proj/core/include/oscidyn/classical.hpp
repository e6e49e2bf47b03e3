#pragma once

#include "oscidyn/model.hpp"

namespace oscidyn {

// Drift data for the classical motion equation
//   dz/dtau = -i V(z, z*) - (Gamma/2) z,  V = delta_bar z + |z|^{2l} z.
struct ClassicalDrift {
    int l = 1;
    double delta_bar = 0;
    double Gamma = 0;
};

// mu_l(tau) = [1 - exp(-Gamma l tau)] / (Gamma l); equals tau at Gamma = 0.
// The removable singularity is handled by a 3-term series for |Gamma l tau| < 1e-6.
double mu(double tau, double Gamma, int l);

// Exact solution z0 exp[(-i delta_bar - Gamma/2) tau] exp[-i |z0|^{2l} mu_l(tau)].
cplx classical_state(const ModelParams& m, cplx z0, double tau);

cplx drift_value(const ClassicalDrift& d, cplx z);        // V(z, z*)
double drift_dalpha(const ClassicalDrift& d, cplx z);     // dV/dalpha, real
cplx drift_dalpha_conj(const ClassicalDrift& d, cplx z);  // dV/dalpha* = l z^{l+1} z*^{l-1}

cplx classical_rhs(const ClassicalDrift& d, cplx z);

} // namespace oscidyn
