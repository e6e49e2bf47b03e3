#include "oscidyn/oracle.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "oscidyn/errors.hpp"

namespace oscidyn {

namespace {

// ladder energy E_n = Delta n + lambda/(l+1) n^{l+1}
std::vector<double> ladder_energies(const PhysicalParams& p, int dim) {
    std::vector<double> E(dim);
    for (int n = 0; n < dim; ++n)
        E[n] = p.Delta * n + p.lambda / (p.l + 1) * std::pow(static_cast<double>(n), p.l + 1);
    return E;
}

// c_n = e^{-|beta|^2/2} beta^n / sqrt(n!), assembled in the log domain so
// large |beta| cannot overflow the factorial.
std::vector<cplx> coherent_amplitudes(cplx beta, int dim) {
    std::vector<cplx> c(dim, cplx{0.0, 0.0});
    const double r = std::abs(beta);
    if (r == 0.0) {
        c[0] = 1.0;
        return c;
    }
    const double log_r = std::log(r);
    const double theta = std::arg(beta);
    for (int n = 0; n < dim; ++n) {
        const double log_mag = -0.5 * r * r + n * log_r - 0.5 * std::lgamma(n + 1.0);
        c[n] = std::polar(std::exp(log_mag), n * theta);
    }
    return c;
}

struct RawMoments {
    cplx b;    // <b>
    cplx b2;   // <b^2>
    double n;      // <b'b>
    double n2;     // <b'^2 b^2>
    double trace;  // should stay at 1
};

OracleObservables to_observables(const RawMoments& mom, double N, double t) {
    OracleObservables o;
    o.t = t;
    o.z = mom.b / std::sqrt(N);
    o.C = mom.b2 - mom.b * mom.b;
    o.B = mom.n - std::norm(mom.b) + 0.5;
    o.S = 2.0 * (o.B - std::abs(o.C));
    o.F = mom.n > 0 ? (mom.n2 + mom.n - mom.n * mom.n) / mom.n
                    : std::numeric_limits<double>::quiet_NaN();
    return o;
}

}  // namespace

int oracle_truncation(cplx beta) {
    const double r = std::abs(beta);
    return static_cast<int>(std::ceil(r * r + 10.0 * r + 20.0));
}

OracleObservables fock_evolve_lossless(const PhysicalParams& p, cplx beta, double t, int n_max) {
    validate(p);
    if (p.gamma != 0.0)
        throw ConfigError("lossless oracle requires gamma = 0");
    if (n_max < 2) throw ConfigError("n_max must be >= 2");

    const int dim = n_max + 1;
    const std::vector<double> E = ladder_energies(p, dim);
    std::vector<cplx> psi = coherent_amplitudes(beta, dim);

    double norm_sq = 0.0;
    for (const cplx& a : psi) norm_sq += std::norm(a);
    if (1.0 - norm_sq > 1e-12)
        throw NumericError("coherent tail truncated: leak = " + std::to_string(1.0 - norm_sq) +
                           " at n_max = " + std::to_string(n_max));

    for (int n = 0; n < dim; ++n) psi[n] *= std::polar(1.0, -E[n] * t);

    RawMoments mom{};
    mom.trace = norm_sq;
    for (int n = 0; n + 1 < dim; ++n)
        mom.b += std::sqrt(n + 1.0) * std::conj(psi[n]) * psi[n + 1];
    for (int n = 0; n + 2 < dim; ++n)
        mom.b2 += std::sqrt((n + 1.0) * (n + 2.0)) * std::conj(psi[n]) * psi[n + 2];
    for (int n = 0; n < dim; ++n) {
        mom.n += n * std::norm(psi[n]);
        mom.n2 += n * (n - 1.0) * std::norm(psi[n]);
    }
    return to_observables(mom, p.N, t);
}

std::vector<OracleObservables> lindblad_evolve(const PhysicalParams& p, cplx beta, double t_max,
                                               double dt, int n_max, int n_out) {
    validate(p);
    if (!(dt > 0)) throw ConfigError("dt must be > 0");
    if (!(t_max >= 0)) throw ConfigError("t_max must be >= 0");
    if (n_max < 2) throw ConfigError("n_max must be >= 2");
    if (n_out < 1) throw ConfigError("n_out must be >= 1");

    const int dim = n_max + 1;
    const std::vector<double> E = ladder_energies(p, dim);
    std::vector<double> sq(dim + 1);
    for (int n = 0; n <= dim; ++n) sq[n] = std::sqrt(static_cast<double>(n));

    const double down = p.gamma * (p.n_d + 1.0);  // emission rate into the bath
    const double up = p.gamma * p.n_d;            // absorption rate from the bath

    auto at = [dim](std::vector<cplx>& v, int m, int n) -> cplx& { return v[m * dim + n]; };
    auto cat = [dim](const std::vector<cplx>& v, int m, int n) -> const cplx& {
        return v[m * dim + n];
    };

    auto rhs = [&](const std::vector<cplx>& rho, std::vector<cplx>& out) {
        for (int m = 0; m < dim; ++m) {
            for (int n = 0; n < dim; ++n) {
                cplx v = cplx(0.0, -(E[m] - E[n])) * cat(rho, m, n);
                v -= 0.5 * down * (m + n) * cat(rho, m, n);
                v -= 0.5 * up * (m + n + 2.0) * cat(rho, m, n);
                if (m + 1 < dim && n + 1 < dim)
                    v += down * sq[m + 1] * sq[n + 1] * cat(rho, m + 1, n + 1);
                if (m > 0 && n > 0) v += up * sq[m] * sq[n] * cat(rho, m - 1, n - 1);
                at(out, m, n) = v;
            }
        }
    };

    const std::size_t size = static_cast<std::size_t>(dim) * dim;
    std::vector<cplx> rho(size), k1(size), k2(size), k3(size), k4(size), work(size);

    const std::vector<cplx> amps = coherent_amplitudes(beta, dim);
    double norm_sq = 0.0;
    for (const cplx& a : amps) norm_sq += std::norm(a);
    if (1.0 - norm_sq > 1e-12)
        throw NumericError("coherent tail truncated: leak = " + std::to_string(1.0 - norm_sq) +
                           " at n_max = " + std::to_string(n_max));
    for (int m = 0; m < dim; ++m)
        for (int n = 0; n < dim; ++n) at(rho, m, n) = amps[m] * std::conj(amps[n]);

    auto measure = [&](double t) -> OracleObservables {
        RawMoments mom{};
        for (int m = 0; m + 1 < dim; ++m) mom.b += sq[m + 1] * cat(rho, m + 1, m);
        for (int m = 0; m + 2 < dim; ++m) mom.b2 += sq[m + 1] * sq[m + 2] * cat(rho, m + 2, m);
        for (int m = 0; m < dim; ++m) {
            const double pop = cat(rho, m, m).real();
            mom.trace += pop;
            mom.n += m * pop;
            mom.n2 += m * (m - 1.0) * pop;
        }
        return to_observables(mom, p.N, t);
    };

    auto check_health = [&](double t) {
        double trace = 0.0;
        for (int m = 0; m < dim; ++m) trace += cat(rho, m, m).real();
        if (std::abs(trace - 1.0) > 1e-6)
            throw NumericError("density matrix trace drifted to " + std::to_string(trace) +
                               " at t = " + std::to_string(t) + "; reduce dt");
        const double top = cat(rho, n_max, n_max).real();
        if (top > 1e-10)
            throw NumericError("top Fock level populated (" + std::to_string(top) + ") at t = " +
                               std::to_string(t) + "; increase n_max");
        double herm = 0.0;
        for (int m = 0; m < dim; ++m)
            for (int n = m; n < dim; ++n)
                herm = std::max(herm, std::abs(cat(rho, m, n) - std::conj(cat(rho, n, m))));
        if (herm > 1e-8 * std::max(1.0, t))
            throw NumericError("density matrix lost Hermiticity (deviation " +
                               std::to_string(herm) + ") at t = " + std::to_string(t));
    };

    auto step = [&](double h) {
        rhs(rho, k1);
        for (std::size_t i = 0; i < size; ++i) work[i] = rho[i] + (h / 2) * k1[i];
        rhs(work, k2);
        for (std::size_t i = 0; i < size; ++i) work[i] = rho[i] + (h / 2) * k2[i];
        rhs(work, k3);
        for (std::size_t i = 0; i < size; ++i) work[i] = rho[i] + h * k3[i];
        rhs(work, k4);
        for (std::size_t i = 0; i < size; ++i)
            rho[i] += (h / 6) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    };

    std::vector<OracleObservables> out;
    out.reserve(n_out + 1);
    check_health(0.0);
    out.push_back(measure(0.0));

    const double segment = t_max / n_out;
    for (int j = 0; j < n_out; ++j) {
        if (segment > 0) {
            auto steps = static_cast<std::size_t>(std::ceil(segment / dt - 1e-9));
            if (steps < 1) steps = 1;
            const double h = segment / static_cast<double>(steps);
            for (std::size_t k = 0; k < steps; ++k) step(h);
        }
        const double t = (j + 1) * segment;
        check_health(t);
        out.push_back(measure(t));
    }
    return out;
}

}  // namespace oscidyn
