#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "oscidyn/config.hpp"
#include "oscidyn/io.hpp"

namespace oscidyn {

enum class OutputFormat { csv, json };

// Builds the simulate table: one row per grid point with columns
// tau, re_z, im_z, re_C, im_C, B, S, F, re_zcl, im_zcl, abs_Q, abs_z1, R.
Table simulate_table(const RunConfig& cfg, Engine engine, bool with_q);

void run_simulate(const RunConfig& cfg, const std::string& out_path, OutputFormat format,
                  Engine engine, bool with_q);

// Emits one CSV per curve into out_dir; returns the file names written.
// fig1: S(tau), l in {1,5} x (Gamma, n_d) in {(0,0), (0.05,0), (0.05,1)}
// fig2: |Q|(tau), Gamma in {0.05, 0.5} x l in {1,3}
// fig3: |z1|(tau), Gamma in {0.05, 0.5} x l in {1,3,5}
std::vector<std::string> run_figure(const std::string& which, const std::string& out_dir);

// Side-by-side semiclassical vs exact-oracle observables on a shared grid;
// needs physical parameters. second_n reruns the oracle at another N and
// appends a 1/N error-scaling verdict.
void run_compare(const RunConfig& cfg, const std::string& out_path,
                 std::optional<double> second_n);

// Prints the breaking-time report as JSON (null for undefined entries).
void run_report(const RunConfig& cfg, std::ostream& out);

// Full command-line front end; maps ConfigError/NumericError/IoError to
// exit codes 2/3/4.
int cli_main(int argc, const char* const* argv);

} // namespace oscidyn
