#include "oscidyn/observables.hpp"

#include <cmath>
#include <limits>

#include "oscidyn/classical.hpp"
#include "oscidyn/errors.hpp"

namespace oscidyn {

double principal_squeezing(cplx C, double B) { return 2.0 * (B - std::abs(C)); }

namespace {

// phi_l = 2a[a - sqrt(1 + a^2)], the lossless squeezing excess.
double phi_of(double a) { return 2.0 * a * (a - std::sqrt(1.0 + a * a)); }

double amplitude_parameter(const ModelParams& m, double x0, double mu_l) {
    return m.l * std::pow(x0, 2 * m.l) * mu_l;
}

}  // namespace

double squeezing_closed(const ModelParams& m, double x0, double tau) {
    if (!(x0 > 0)) throw ConfigError("x0 must be > 0");
    const double a = amplitude_parameter(m, x0, mu(tau, m.Gamma, m.l));
    return std::exp(-m.Gamma * tau) * (1.0 + phi_of(a)) + m.B0() * 2.0 * m.Gamma * tau;
}

double squeezing_limit(const ModelParams& m, double x0, double tau, Regime regime) {
    if (!(x0 > 0)) throw ConfigError("x0 must be > 0");
    const double rate = m.l * std::pow(x0, 2 * m.l);
    switch (regime) {
        case Regime::exact:
            return squeezing_closed(m, x0, tau);
        case Regime::weak_dissipation:
            return 1.0 + (1.0 - m.Gamma * tau) * phi_of(rate * tau) +
                   2.0 * m.n_d * m.Gamma * tau;
        case Regime::short_time:
            return 1.0 - 2.0 * tau * (rate - m.Gamma * m.n_d);
        case Regime::lossless:
            return 1.0 + phi_of(rate * tau);
        case Regime::asymptotic:
            return 1.0 / (rate * tau);
    }
    throw ConfigError("unknown squeezing regime");
}

double regime_indicator(const ModelParams& m, double x0, double tau, Regime regime) {
    switch (regime) {
        case Regime::weak_dissipation:
            return m.Gamma * tau;
        case Regime::short_time:
            return tau;
        case Regime::asymptotic:
            return amplitude_parameter(m, x0, mu(tau, m.Gamma, m.l));
        default:
            return 0.0;
    }
}

std::optional<double> critical_phonons(const ModelParams& m, double x0) {
    if (m.Gamma <= 0) return std::nullopt;
    return m.l * std::pow(x0, 2 * m.l) / m.Gamma;
}

double fano_from_cumulants(cplx z, cplx C, double B) {
    if (std::abs(z) < 1e-12)
        throw NumericError("Fano factor undefined: |z| below 1e-12");
    return 2.0 * B + 2.0 * std::real(std::conj(z) / z * C);
}

double fano_closed(const ModelParams& m, double tau) {
    return std::exp(-m.Gamma * tau) + m.B0() * 2.0 * m.Gamma * tau;
}

ObservableSeries observable_series(const Trajectory& traj) {
    ObservableSeries out;
    out.grid = traj.grid;
    out.S.reserve(traj.states.size());
    out.F.reserve(traj.states.size());
    for (const CumulantState& s : traj.states) {
        out.S.push_back(principal_squeezing(s.C, s.B));
        if (std::abs(s.z) < 1e-12)
            out.F.push_back(std::numeric_limits<double>::quiet_NaN());
        else
            out.F.push_back(fano_from_cumulants(s.z, s.C, s.B));
    }
    return out;
}

}  // namespace oscidyn
