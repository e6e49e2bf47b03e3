#pragma once

#include <optional>
#include <vector>

#include "oscidyn/model.hpp"

namespace oscidyn {

// S = 2(B - |C|); squeezed iff S < 1.
double principal_squeezing(cplx C, double B);

// S(tau) = e^{-Gamma tau} [1 + phi_l] + (n_d + 1/2) 2 Gamma tau with
// phi_l = 2a[a - sqrt(1 + a^2)], a = l x0^{2l} mu_l(tau). Real x0 > 0 only;
// complex initial data goes through principal_squeezing(cumulants_closed(...)).
// Negative tau is allowed (analytic continuation used by slope tests).
double squeezing_closed(const ModelParams& m, double x0, double tau);

enum class Regime { exact, weak_dissipation, short_time, lossless, asymptotic };

// Limit forms of the squeezing law:
//   weak_dissipation: S = 1 + (1 - Gamma tau) phi_l + 2 n_d Gamma tau, a = l x0^{2l} tau
//   short_time:       S = 1 - 2 tau [l x0^{2l} - Gamma n_d]
//   lossless:         S = 1 + phi_l with mu = tau
//   asymptotic:       S = 1 / (l x0^{2l} tau)
//   exact:            squeezing_closed
double squeezing_limit(const ModelParams& m, double x0, double tau, Regime regime);

// The smallness (or largeness) parameter the regime relies on:
// Gamma tau (weak_dissipation), tau (short_time), a (asymptotic), 0 otherwise.
double regime_indicator(const ModelParams& m, double x0, double tau, Regime regime);

// n_d^(cr) = l x0^{2l} / Gamma; above it the short-time slope of S is >= 0.
// Empty at Gamma = 0 (no threshold).
std::optional<double> critical_phonons(const ModelParams& m, double x0);

// F = 2B + 2 Re[(z*/z) C]. Throws NumericError for |z| < 1e-12.
double fano_from_cumulants(cplx z, cplx C, double B);

// F = e^{-Gamma tau} + (n_d + 1/2) 2 Gamma tau; independent of l, delta_bar, z0.
double fano_closed(const ModelParams& m, double tau);

struct ObservableSeries {
    std::vector<double> grid;
    std::vector<double> S;
    std::vector<double> F;  // NaN where |z| < 1e-12
};

ObservableSeries observable_series(const Trajectory& traj);

} // namespace oscidyn
