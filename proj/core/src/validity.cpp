#include "oscidyn/validity.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "oscidyn/errors.hpp"
#include "oscidyn/numerics.hpp"

namespace oscidyn {

ValidityReport breaking_report(const ModelParams& m, cplx z0) {
    const double r = std::abs(z0);
    ValidityReport rep;
    rep.Omega_l = m.delta_bar + std::pow(std::norm(z0), m.l);
    rep.tau_star_hamiltonian = std::sqrt(m.N) * std::sqrt(std::abs(rep.Omega_l)) /
                               (std::pow(static_cast<double>(m.l), 1.5) *
                                std::pow(r, 3 * m.l - 1));
    if (m.Gamma > 0) {
        rep.tau1 = 1.0 / (m.Gamma * m.l);
        rep.Q_max_estimate = m.l / (m.Gamma * m.Gamma);
        rep.tau_star_plateau = std::log(m.N) / m.Gamma;
        rep.R_plateau_estimate = m.l / (m.N * m.Gamma * m.Gamma);
    }
    return rep;
}

std::vector<double> validity_ratio(const Trajectory& traj) {
    std::vector<double> R(traj.grid.size(), 0.0);
    for (std::size_t k = 0; k < R.size(); ++k) {
        const double num = std::abs(traj.z1[k]);
        if (num == 0.0) continue;
        const double den = std::abs(traj.z_cl[k]);
        if (den < 1e-300)
            throw NumericError("validity ratio overflow guard at tau = " +
                               std::to_string(traj.grid[k]) +
                               ": classical amplitude underflowed (overdamped tail)");
        R[k] = num / (traj.params.N * den);
    }
    return R;
}

cplx asymptotic_Q_lossless(const ModelParams& m, cplx z0, double tau) {
    const double Omega = m.delta_bar + std::pow(std::norm(z0), m.l);
    const double l3 = static_cast<double>(m.l) * m.l * m.l;
    const double r_pow = std::pow(std::abs(z0), 2 * (3 * m.l - 1));
    return z0 * r_pow * l3 * tau * tau * std::exp(cplx(0.0, -Omega * tau));
}

double saturation_level(const std::vector<double>& grid, const std::vector<cplx>& z1) {
    if (grid.empty() || grid.size() != z1.size())
        throw NumericError("saturation_level: grid and shift must be non-empty and equal-sized");
    const double cutoff = 0.8 * grid.back();
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (grid[k] >= cutoff) {
            sum += std::abs(z1[k]);
            ++count;
        }
    }
    return sum / static_cast<double>(count);
}

}  // namespace oscidyn
