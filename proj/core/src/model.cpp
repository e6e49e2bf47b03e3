#include "oscidyn/model.hpp"

#include <cmath>
#include <string>

#include "oscidyn/errors.hpp"

namespace oscidyn {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) throw ConfigError(std::string(name) + " must be finite");
}

} // namespace

void validate(const PhysicalParams& p) {
    if (p.l < 1) throw ConfigError("l must be a positive integer");
    require_finite(p.lambda, "lambda");
    require_finite(p.N, "N");
    require_finite(p.Delta, "Delta");
    require_finite(p.gamma, "gamma");
    require_finite(p.n_d, "n_d");
    // lambda = 0 is the linear (harmonic) limit: legal for the quantum
    // oracle, rejected by scale_parameters where g_l > 0 is required.
    if (p.lambda < 0) throw ConfigError("lambda must be >= 0");
    if (p.N < 1) throw ConfigError("N must be >= 1");
    if (p.gamma < 0) throw ConfigError("gamma must be >= 0");
    if (p.n_d < 0) throw ConfigError("n_d must be >= 0");
}

void validate(const ModelParams& m) {
    if (m.l < 1) throw ConfigError("l must be a positive integer");
    require_finite(m.Gamma, "Gamma");
    require_finite(m.delta_bar, "delta_bar");
    require_finite(m.n_d, "n_d");
    require_finite(m.N, "N");
    require_finite(m.g_l, "g_l");
    if (m.Gamma < 0) throw ConfigError("Gamma must be >= 0");
    if (m.n_d < 0) throw ConfigError("n_d must be >= 0");
    if (m.N < 1) throw ConfigError("N must be >= 1");
    if (m.g_l <= 0) throw ConfigError("g_l must be > 0");
}

ModelParams scale_parameters(const PhysicalParams& p) {
    validate(p);
    if (p.lambda <= 0) throw ConfigError("lambda must be > 0 to form g_l");
    ModelParams m;
    m.l = p.l;
    m.g_l = p.lambda * std::pow(p.N, p.l);
    m.Gamma = p.gamma / m.g_l;
    m.delta_bar = p.Delta / m.g_l;
    m.n_d = p.n_d;
    m.N = p.N;
    validate(m);
    return m;
}

PhysicalParams unscale_parameters(const ModelParams& m) {
    validate(m);
    PhysicalParams p;
    p.l = m.l;
    p.N = m.N;
    p.lambda = m.g_l / std::pow(m.N, m.l);
    p.Delta = m.delta_bar * m.g_l;
    p.gamma = m.Gamma * m.g_l;
    p.n_d = m.n_d;
    return p;
}

double physical_time(double tau, const ModelParams& m) {
    return tau / m.g_l;
}

} // namespace oscidyn
