#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "oscidyn/errors.hpp"

namespace oscidyn {

// One classical fixed-step RK4 update. State needs operator+(State, State)
// and operator*(double, State); Rhs is f(tau, state) -> State.
template <class State, class Rhs>
State rk4_step(Rhs&& f, double tau, const State& y, double dt) {
    State k1 = f(tau, y);
    State k2 = f(tau + dt / 2, y + (dt / 2) * k1);
    State k3 = f(tau + dt / 2, y + (dt / 2) * k2);
    State k4 = f(tau + dt, y + dt * k3);
    return y + (dt / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Cumulative trapezoid of exp(-kappa (tau_k - tau')) * values(tau') on a
// uniform grid, via the stable recurrence
//   I_{k+1} = e^{-kappa h} I_k + h/2 (e^{-kappa h} v_k + v_{k+1}).
// Returns one partial integral per grid point (I_0 = 0).
std::vector<std::complex<double>> kernel_trapezoid(
    const std::vector<std::complex<double>>& values,
    const std::vector<double>& grid,
    double kappa);

inline bool finite(const std::complex<double>& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Integer power by repeated multiplication; ipow(z, 0) = 1 for any z,
// including z = 0 (needed by the l = 1 correction terms).
inline std::complex<double> ipow(std::complex<double> z, int n) {
    std::complex<double> r{1.0, 0.0};
    for (int i = 0; i < n; ++i) r *= z;
    return r;
}

} // namespace oscidyn
