#include "oscidyn/cumulants.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "oscidyn/classical.hpp"
#include "oscidyn/errors.hpp"
#include "oscidyn/numerics.hpp"
#include "oscidyn/validity.hpp"

namespace oscidyn {

ClosedCumulants cumulants_closed(const ModelParams& m, cplx z0, double tau) {
    const double r2l = std::pow(std::norm(z0), m.l);  // |z0|^{2l}
    const double mu_l = mu(tau, m.Gamma, m.l);
    const double a = m.l * mu_l * r2l;
    const cplx envelope =
        std::exp(cplx(-m.Gamma * tau, -2.0 * (m.delta_bar * tau + r2l * mu_l)));
    const cplx z0sq = z0 * z0 * std::pow(std::norm(z0), m.l - 1);  // z0^2 |z0|^{2(l-1)}

    ClosedCumulants out;
    out.C = -mu_l * static_cast<double>(m.l) * z0sq * cplx(a, 1.0) * envelope;
    out.B = std::exp(-m.Gamma * tau) * (0.5 + a * a) + m.B0() * m.Gamma * tau;
    return out;
}

cplx quantum_correction(const ModelParams& m, cplx z, cplx C, double B) {
    const int l = m.l;
    const cplx zc = std::conj(z);
    const double c_direct = 0.5 * l * (l + 1);
    const double c_mean = static_cast<double>(l) * (l + 1);

    cplx q = c_direct * ipow(zc, l) * ipow(z, l - 1) * C +
             c_mean * ipow(zc, l - 1) * ipow(z, l) * (B - 0.5);
    if (l >= 2) {
        const double c_conj = 0.5 * l * (l - 1);
        q += c_conj * ipow(zc, l - 2) * ipow(z, l + 1) * std::conj(C);
    }
    return q;
}

CumulantDeriv semiclassical_rhs(const ModelParams& m, const CumulantState& s, bool include_q,
                                double B0) {
    const ClassicalDrift d{m.l, m.delta_bar, m.Gamma};
    const cplx V = drift_value(d, s.z);
    const double p = drift_dalpha(d, s.z);
    const cplx D = drift_dalpha_conj(d, s.z);
    const cplx i{0.0, 1.0};

    CumulantDeriv out;
    out.dz = -(m.Gamma / 2) * s.z - i * V;
    if (include_q) out.dz -= (i / m.N) * quantum_correction(m, s.z, s.C, s.B);
    out.dC = -i * (2.0 * p * s.C + 2.0 * D * s.B) - m.Gamma * s.C;
    out.dB = 2.0 * std::imag(D * std::conj(s.C)) - m.Gamma * (s.B - B0);
    return out;
}

CumulantDeriv semiclassical_rhs(const ModelParams& m, const CumulantState& s, bool include_q) {
    return semiclassical_rhs(m, s, include_q, m.B0());
}

namespace {

// RK4 state triple with the vector-space operations rk4_step needs.
struct Cvec {
    cplx z;
    cplx C;
    double B;
};

inline Cvec operator+(const Cvec& a, const Cvec& b) { return {a.z + b.z, a.C + b.C, a.B + b.B}; }
inline Cvec operator*(double s, const Cvec& a) { return {s * a.z, s * a.C, s * a.B}; }

std::vector<double> uniform_grid(double tau_max, double dt) {
    if (tau_max <= 0) return {0.0};
    auto n = static_cast<std::size_t>(std::ceil(tau_max / dt - 1e-9));
    if (n < 1) n = 1;
    const double h = tau_max / static_cast<double>(n);
    std::vector<double> grid(n + 1);
    for (std::size_t k = 0; k <= n; ++k) grid[k] = static_cast<double>(k) * h;
    grid.back() = tau_max;
    return grid;
}

void check_run_arguments(const ModelParams& m, double tau_max, const IntegrateOptions& opts) {
    validate(m);
    if (!(opts.dt > 0)) throw ConfigError("dt must be > 0");
    if (!(tau_max >= 0)) throw ConfigError("tau_max must be >= 0");
}

// Classical reference, correction along the run, first-order shift and
// validity ratio, all derived from the already-filled grid and states.
void fill_companions(Trajectory& t) {
    const std::size_t n = t.grid.size();
    t.z_cl.resize(n);
    t.Q.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        t.z_cl[k] = classical_state(t.params, t.z0, t.grid[k]);
        const CumulantState& s = t.states[k];
        t.Q[k] = quantum_correction(t.params, s.z, s.C, s.B);
    }
    if (n >= 2)
        t.z1 = first_order_shift(t.grid, t.Q, t.params.Gamma, t.shift);
    else
        t.z1.assign(n, cplx{0.0, 0.0});
    t.R = validity_ratio(t);
}

}  // namespace

Trajectory integrate_semiclassical(const ModelParams& m, cplx z0, double tau_max,
                                   const IntegrateOptions& opts) {
    check_run_arguments(m, tau_max, opts);

    Trajectory t;
    t.params = m;
    t.z0 = z0;
    t.engine = Engine::ode;
    t.include_q = opts.include_q;
    t.shift = opts.shift;
    t.grid = uniform_grid(tau_max, opts.dt);

    auto rhs = [&](double, const Cvec& y) -> Cvec {
        const CumulantState s{0.0, y.z, y.C, y.B};
        const CumulantDeriv d = semiclassical_rhs(m, s, opts.include_q);
        return {d.dz, d.dC, d.dB};
    };

    auto advance = [&](double h, std::size_t count, std::vector<CumulantState>* record) -> Cvec {
        Cvec y{z0, {0.0, 0.0}, 0.5};
        if (record) record->push_back({0.0, y.z, y.C, y.B});
        for (std::size_t k = 0; k < count; ++k) {
            const double tau = static_cast<double>(k) * h;
            y = rk4_step(rhs, tau, y, h);
            if (!finite(y.z) || !finite(y.C) || !std::isfinite(y.B))
                throw NumericError("cumulant integration diverged at step " +
                                   std::to_string(k + 1) + " (tau = " +
                                   std::to_string(tau + h) + ")");
            if (record) record->push_back({0.0, y.z, y.C, y.B});
        }
        return y;
    };

    const std::size_t n_steps = t.grid.size() - 1;
    const double h = n_steps > 0 ? t.grid[1] - t.grid[0] : 0.0;

    t.states.reserve(t.grid.size());
    const Cvec y_final = advance(h, n_steps, &t.states);
    for (std::size_t k = 0; k < t.grid.size(); ++k) t.states[k].tau = t.grid[k];

    if (opts.self_check && n_steps > 0) {
        const Cvec y_half = advance(h / 2, 2 * n_steps, nullptr);
        t.richardson_delta = std::abs(y_final.z - y_half.z) + std::abs(y_final.C - y_half.C) +
                             std::abs(y_final.B - y_half.B);
    }

    fill_companions(t);
    return t;
}

Trajectory closed_form_trajectory(const ModelParams& m, cplx z0, double tau_max,
                                  const IntegrateOptions& opts) {
    check_run_arguments(m, tau_max, opts);

    Trajectory t;
    t.params = m;
    t.z0 = z0;
    t.engine = Engine::closed;
    t.include_q = opts.include_q;
    t.shift = opts.shift;
    t.grid = uniform_grid(tau_max, opts.dt);

    t.states.reserve(t.grid.size());
    for (double tau : t.grid) {
        const cplx z = classical_state(m, z0, tau);
        const ClosedCumulants cb = cumulants_closed(m, z0, tau);
        t.states.push_back({tau, z, cb.C, cb.B});
    }

    fill_companions(t);
    return t;
}

std::vector<cplx> first_order_shift(const std::vector<double>& grid, const std::vector<cplx>& Q,
                                    double Gamma, ShiftKernel kernel) {
    const double kappa = kernel == ShiftKernel::damped ? Gamma / 2 : 0.0;
    std::vector<cplx> z1 = kernel_trapezoid(Q, grid, kappa);
    for (cplx& v : z1) v *= cplx{0.0, -1.0};
    return z1;
}

}  // namespace oscidyn
