#pragma once

#include <complex>
#include <vector>

namespace oscidyn {

using cplx = std::complex<double>;

// Oscillator + reservoir parameters in physical frequency units.
struct PhysicalParams {
    int l = 1;          // nonlinearity order
    double lambda = 1;  // anharmonic coupling
    double N = 1;       // semiclassical photon-number scale
    double Delta = 0;   // detuning
    double gamma = 0;   // damping rate
    double n_d = 0;     // mean thermal occupation of the reservoir
};

// Dimensionless parameters of the scaled dynamics (tau = g_l t).
struct ModelParams {
    int l = 1;
    double Gamma = 0;      // gamma / g_l
    double delta_bar = 0;  // Delta / g_l
    double n_d = 0;
    double N = 1;
    double g_l = 1;        // lambda N^l, kept for unit conversion

    double B0() const { return n_d + 0.5; }  // equilibrium cumulant
};

// Dynamical triple at one scaled time.
// B is stored real: its equation of motion is manifestly real, so the
// reality invariant is structural rather than asserted.
struct CumulantState {
    double tau = 0;
    cplx z{1.0, 0.0};  // mean amplitude
    cplx C{0.0, 0.0};  // second-order cumulant <(d alpha)^2>
    double B = 0.5;    // <|d alpha|^2> + 1/2
};

enum class Engine { ode, closed };

// Kernel used when accumulating the first-order shift z1 from Q:
// damped keeps the exp(-Gamma (tau-tau')/2) factor of the exact formal
// solution, bare drops it (used for figure replication).
enum class ShiftKernel { damped, bare };

struct Trajectory {
    ModelParams params;
    cplx z0{1.0, 0.0};
    Engine engine = Engine::ode;
    bool include_q = false;
    ShiftKernel shift = ShiftKernel::damped;

    std::vector<double> grid;           // tau values, grid[0] = 0
    std::vector<CumulantState> states;
    std::vector<cplx> z_cl;             // classical reference
    std::vector<cplx> Q;                // quantum correction along the run
    std::vector<cplx> z1;               // first-order shift
    std::vector<double> R;              // validity ratio, R[0] = 0

    // |final(dt) - final(dt/2)| over state components; 0 when the check is off
    // or the engine is closed-form.
    double richardson_delta = 0;
};

// Validates and converts physical to scaled parameters.
ModelParams scale_parameters(const PhysicalParams& p);

// Inverse of scale_parameters (lambda = g_l / N^l and so on).
PhysicalParams unscale_parameters(const ModelParams& m);

double physical_time(double tau, const ModelParams& m);

// Throws ConfigError on invariant violations; used by config loading too.
void validate(const PhysicalParams& p);
void validate(const ModelParams& m);

} // namespace oscidyn
