#include "oscidyn/numerics.hpp"

#include <cmath>
#include <cstddef>

namespace oscidyn {

std::vector<std::complex<double>> kernel_trapezoid(
    const std::vector<std::complex<double>>& values,
    const std::vector<double>& grid,
    double kappa) {
    if (grid.size() != values.size()) throw NumericError("kernel_trapezoid: size mismatch");
    if (grid.size() < 2) throw NumericError("kernel_trapezoid: need at least 2 grid points");
    if (kappa < 0) throw NumericError("kernel_trapezoid: kappa must be >= 0");

    const double h = grid[1] - grid[0];
    for (std::size_t k = 1; k + 1 < grid.size(); ++k) {
        const double hk = grid[k + 1] - grid[k];
        if (std::abs(hk - h) > 1e-12 * std::max(1.0, std::abs(h)))
            throw NumericError("kernel_trapezoid: non-uniform grid");
    }

    const double decay = std::exp(-kappa * h);
    std::vector<std::complex<double>> out(grid.size());
    out[0] = {0.0, 0.0};
    for (std::size_t k = 0; k + 1 < grid.size(); ++k)
        out[k + 1] = decay * out[k] + (h / 2) * (decay * values[k] + values[k + 1]);
    return out;
}

} // namespace oscidyn
