#pragma once

#include <optional>
#include <vector>

#include "oscidyn/model.hpp"

namespace oscidyn {

// Breaking-time estimates; dissipative entries are empty at Gamma = 0.
struct ValidityReport {
    std::optional<double> tau1;                // Q-maximum time, (Gamma l)^-1
    std::optional<double> Q_max_estimate;      // l / Gamma^2
    double tau_star_hamiltonian = 0;           // sqrt(N) |Omega_l|^{1/2} / (l^{3/2} |z0|^{3l-1})
    std::optional<double> tau_star_plateau;    // Gamma^-1 ln N
    std::optional<double> R_plateau_estimate;  // l / (N Gamma^2)
    double Omega_l = 0;                        // delta_bar + |z0|^{2l}
};

ValidityReport breaking_report(const ModelParams& m, cplx z0);

// R(tau) = (1/N) |z1(tau) / z_cl(tau)|, R(0) = 0. Throws NumericError when
// |z_cl| underflows (overdamped tail).
std::vector<double> validity_ratio(const Trajectory& traj);

// Leading large-time form of Q at Gamma = 0:
//   Q ~ z0 |z0|^{2(3l-1)} l^3 tau^2 exp(-i Omega_l tau).
cplx asymptotic_Q_lossless(const ModelParams& m, cplx z0, double tau);

// Mean of |z1| over the last 20% of the grid; the plateau summary statistic.
double saturation_level(const std::vector<double>& grid, const std::vector<cplx>& z1);

} // namespace oscidyn
