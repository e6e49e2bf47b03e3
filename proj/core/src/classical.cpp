#include "oscidyn/classical.hpp"

#include <cmath>

#include "oscidyn/numerics.hpp"

namespace oscidyn {

double mu(double tau, double Gamma, int l) {
    const double x = Gamma * l * tau;
    if (std::abs(x) < 1e-6) return tau * (1.0 - x / 2 + x * x / 6);
    return -std::expm1(-x) / (Gamma * l);
}

cplx classical_state(const ModelParams& m, cplx z0, double tau) {
    const double r2l = std::pow(std::abs(z0), 2 * m.l);
    const cplx phase = cplx(0.0, -1.0) * (m.delta_bar * tau + r2l * mu(tau, m.Gamma, m.l));
    return z0 * std::exp(phase - m.Gamma / 2 * tau);
}

cplx drift_value(const ClassicalDrift& d, cplx z) {
    return d.delta_bar * z + std::pow(std::norm(z), d.l) * z;
}

double drift_dalpha(const ClassicalDrift& d, cplx z) {
    return d.delta_bar + (d.l + 1) * std::pow(std::norm(z), d.l);
}

cplx drift_dalpha_conj(const ClassicalDrift& d, cplx z) {
    return double(d.l) * ipow(z, d.l + 1) * ipow(std::conj(z), d.l - 1);
}

cplx classical_rhs(const ClassicalDrift& d, cplx z) {
    return cplx(0.0, -1.0) * drift_value(d, z) - d.Gamma / 2 * z;
}

} // namespace oscidyn
