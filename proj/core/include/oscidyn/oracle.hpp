#pragma once

#include <vector>

#include "oscidyn/model.hpp"

namespace oscidyn {

// Exact-quantum observables converted to the scaled convention:
// z = <b>/sqrt(N), C = <b^2> - <b>^2, B = <b'b> - |<b>|^2 + 1/2,
// S = 2(B - |C|), F = (<b'^2 b^2> + <n> - <n>^2) / <n>.
struct OracleObservables {
    double t = 0;  // physical time
    cplx z{0.0, 0.0};
    cplx C{0.0, 0.0};
    double B = 0.5;
    double S = 1;
    double F = 1;
};

// Coherent-tail heuristic: ceil(|beta|^2 + 10|beta| + 20). Callers double it
// when a run reports truncation leakage.
int oracle_truncation(cplx beta);

// Number-diagonal evolution of a coherent state, gamma = 0 only.
// Amplitudes are formed in the log domain; tail probability > 1e-12 throws
// NumericError, gamma != 0 throws ConfigError.
OracleObservables fock_evolve_lossless(const PhysicalParams& p, cplx beta, double t, int n_max);

// Density-matrix RK4 for
//   drho/dt = -i[H, rho] + gamma (n_d+1) D[b] rho + gamma n_d D[b'] rho
// with H = Delta n + lambda/(l+1) n^{l+1} diagonal. Emits n_out+1 rows on a
// uniform output grid. Trace drift > 1e-6 or top-level population > 1e-10
// throws NumericError with diagnostics.
std::vector<OracleObservables> lindblad_evolve(const PhysicalParams& p, cplx beta, double t_max,
                                               double dt, int n_max, int n_out = 40);

} // namespace oscidyn
