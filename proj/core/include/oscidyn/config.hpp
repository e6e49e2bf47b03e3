#pragma once

#include <optional>
#include <string>

#include "oscidyn/model.hpp"

namespace oscidyn {

// Parsed run configuration. model always holds the scaled parameters;
// physical is present when the file supplied them (required by compare).
struct RunConfig {
    ModelParams model;
    std::optional<PhysicalParams> physical;
    cplx z0{1.0, 0.0};
    double tau_max = 0;
    double dt = 1e-3;
    int n_out = 40;  // output rows for compare
};

// Loads a JSON config:
//   {
//     "model": {"type": "scaled", "l": 1, "Gamma": 0.05, "delta_bar": 0,
//               "n_d": 0, "N": 1e4, "g_l": 1},
//     "z0": 1.0 or [re, im],
//     "tau_max": 2.0, "dt": 1e-3, "n_out": 40
//   }
// "type": "physical" takes {l, lambda, N, Delta, gamma, n_d} instead.
// Field-level ConfigError on anything malformed or unreadable.
RunConfig load_config(const std::string& path);

} // namespace oscidyn
