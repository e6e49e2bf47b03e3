#pragma once

#include "oscidyn/model.hpp"

namespace oscidyn {

struct ClosedCumulants {
    cplx C{0.0, 0.0};
    double B = 0.5;
};

// Analytic cumulants for coherent initial data (C(0) = 0, B(0) = 1/2):
//   C = -mu l z0^2 |z0|^{2(l-1)} (mu l |z0|^{2l} + i) exp[(-Gamma - 2i delta_bar) tau - 2i |z0|^{2l} mu]
//   B = exp(-Gamma tau) [1/2 + l^2 |z0|^{4l} mu^2] + (n_d + 1/2) Gamma tau.
// The homogeneous part is exact; the thermal term is a first-order particular
// solution, so at Gamma > 0 the ODE engine is the internal ground truth.
ClosedCumulants cumulants_closed(const ModelParams& m, cplx z0, double tau);

// Q = l(l+1)/2 z*^l z^{l-1} C + l(l-1)/2 z*^{l-2} z^{l+1} C* + l(l+1) z*^{l-1} z^l (B - 1/2).
// For l = 1 the C* coefficient is exact zero and its term is skipped before
// any power of z* is formed.
cplx quantum_correction(const ModelParams& m, cplx z, cplx C, double B);

struct CumulantDeriv {
    cplx dz{0.0, 0.0};
    cplx dC{0.0, 0.0};
    double dB = 0;
};

// Right-hand side of the self-consistent system:
//   dz/dtau = -(Gamma/2) z - i V(z,z*) - (i/N) Q        (Q only when include_q)
//   dC/dtau = -i [2 (dV/da) C + 2 (dV/da*) B] - Gamma C
//   dB/dtau = 2 Im[(dV/da*) conj(C)] - Gamma (B - B0)
CumulantDeriv semiclassical_rhs(const ModelParams& m, const CumulantState& s, bool include_q);

// Same with an explicit thermal source level (B0 = 0 gives the homogeneous system).
CumulantDeriv semiclassical_rhs(const ModelParams& m, const CumulantState& s, bool include_q,
                                double B0);

struct IntegrateOptions {
    double dt = 1e-3;
    bool include_q = false;
    ShiftKernel shift = ShiftKernel::damped;
    bool self_check = true;  // repeat at dt/2 and record richardson_delta
};

// Fixed-step RK4 from (z0, 0, 1/2) on a uniform grid covering [0, tau_max];
// fills the z_cl, Q, z1, R companion arrays. Throws NumericError on a
// non-finite state (reports the first bad step) and ConfigError on dt <= 0
// or tau_max < 0.
Trajectory integrate_semiclassical(const ModelParams& m, cplx z0, double tau_max,
                                   const IntegrateOptions& opts = {});

// Same grid and companions but states taken from classical_state and
// cumulants_closed; include_q is ignored (the closed forms have no feedback).
Trajectory closed_form_trajectory(const ModelParams& m, cplx z0, double tau_max,
                                  const IntegrateOptions& opts = {});

// z1(tau) = -i integral_0^tau e^{-Gamma (tau - tau')/2} Q(tau') dtau'
// (damped kernel); the bare variant drops the kernel.
std::vector<cplx> first_order_shift(const std::vector<double>& grid,
                                    const std::vector<cplx>& Q, double Gamma,
                                    ShiftKernel kernel);

} // namespace oscidyn
