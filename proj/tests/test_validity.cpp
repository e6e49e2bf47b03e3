#include <cmath>
#include <complex>

#include "doctest.h"
#include "oscidyn/cumulants.hpp"
#include "oscidyn/errors.hpp"
#include "oscidyn/validity.hpp"

using namespace oscidyn;

namespace {

ModelParams make(int l, double Gamma, double N) {
    ModelParams m;
    m.l = l;
    m.Gamma = Gamma;
    m.N = N;
    return m;
}

}  // namespace

TEST_SUITE("validity") {

TEST_CASE("breaking report evaluates the four estimates") {
    ValidityReport r = breaking_report(make(1, 0.5, 1e4), {1.0, 0.0});
    REQUIRE(r.tau1.has_value());
    CHECK(*r.tau1 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(*r.Q_max_estimate == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(*r.tau_star_plateau == doctest::Approx(18.420680743952367).epsilon(1e-13));
    CHECK(*r.R_plateau_estimate == doctest::Approx(4e-4).epsilon(1e-13));
    CHECK(r.tau_star_hamiltonian == doctest::Approx(100.0).epsilon(1e-13));
    CHECK(r.Omega_l == doctest::Approx(1.0).epsilon(1e-14));

    r = breaking_report(make(3, 0.05, 1e4), {1.0, 0.0});
    CHECK(*r.tau1 == doctest::Approx(1.0 / 0.15).epsilon(1e-13));
    CHECK(*r.Q_max_estimate == doctest::Approx(1200.0).epsilon(1e-13));
}

TEST_CASE("lossless reports leave the dissipative entries empty") {
    const ValidityReport r = breaking_report(make(1, 0.0, 1e4), {1.0, 0.0});
    CHECK_FALSE(r.tau1.has_value());
    CHECK_FALSE(r.Q_max_estimate.has_value());
    CHECK_FALSE(r.tau_star_plateau.has_value());
    CHECK_FALSE(r.R_plateau_estimate.has_value());
    CHECK(r.tau_star_hamiltonian == doctest::Approx(100.0).epsilon(1e-13));
}

TEST_CASE("validity ratio starts at zero and follows the quadratic law") {
    const ModelParams m = make(1, 0.0, 1e4);
    const Trajectory t = integrate_semiclassical(m, {1.0, 0.0}, 20.0, {});
    CHECK(t.R[0] == 0.0);

    const std::size_t at10 = t.grid.size() / 2;
    CHECK(t.grid[at10] == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(t.R[at10] * 1e4 / 100.0 == doctest::Approx(1.0).epsilon(0.05));

    // R(2 tau) / R(tau) approaches 4 in the lossless regime
    CHECK(t.R.back() / t.R[at10] == doctest::Approx(4.0).epsilon(0.05));

    // short-time bound: R stays below 1/N for tau <= 0.1
    for (std::size_t k = 0; k < t.grid.size() && t.grid[k] <= 0.1; ++k)
        CHECK(t.R[k] * m.N <= 1.0);
}

TEST_CASE("zero initial amplitude keeps the ratio defined and zero") {
    const ModelParams m = make(1, 0.0, 1e4);
    const Trajectory t = integrate_semiclassical(m, {0.0, 0.0}, 1.0, {});
    for (double r : t.R) CHECK(r == 0.0);
}

TEST_CASE("asymptotic correction reference and late-time agreement") {
    const ModelParams m = make(1, 0.0, 1.0);
    const cplx q = asymptotic_Q_lossless(m, {1.0, 0.0}, 10.0);
    CHECK(q.real() == doctest::Approx(-83.907152907645245).epsilon(1e-13));
    CHECK(q.imag() == doctest::Approx(54.402111088936981).epsilon(1e-13));
    CHECK(std::abs(q) == doctest::Approx(100.0).epsilon(1e-14));
    CHECK(asymptotic_Q_lossless(m, {0.0, 0.0}, 5.0) == cplx{0.0, 0.0});

    // documented regime gap at tau = 1: exact sqrt(2) vs asymptotic 1
    CHECK(std::abs(asymptotic_Q_lossless(m, {1.0, 0.0}, 1.0)) == doctest::Approx(1.0));

    const Trajectory t = closed_form_trajectory(m, {1.0, 0.0}, 30.0, {});
    const double exact = std::abs(t.Q.back());
    const double asym = std::abs(asymptotic_Q_lossless(m, {1.0, 0.0}, 30.0));
    CHECK(exact / asym == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("correction peak sits an order of magnitude under its estimate") {
    const ModelParams m = make(1, 0.5, 1e4);
    IntegrateOptions opts;
    opts.dt = 1e-2;
    opts.self_check = false;
    const Trajectory t = integrate_semiclassical(m, {1.0, 0.0}, 20.0, opts);
    double peak = 0.0;
    for (const cplx& q : t.Q) peak = std::max(peak, std::abs(q));
    const double estimate = *breaking_report(m, {1.0, 0.0}).Q_max_estimate;
    CHECK(peak / estimate >= 1.0 / 15.0);
    CHECK(peak / estimate <= 3.0);
}

TEST_CASE("saturation level summarizes the plateau tail") {
    std::vector<double> grid;
    std::vector<cplx> z1;
    for (int k = 0; k <= 100; ++k) {
        grid.push_back(0.1 * k);
        z1.push_back({grid.back() >= 8.0 ? 2.0 : 1.0, 0.0});
    }
    CHECK(saturation_level(grid, z1) == 2.0);
    CHECK_THROWS_AS(saturation_level({}, {}), NumericError);
    CHECK_THROWS_AS(saturation_level({0.0, 1.0}, {{1.0, 0.0}}), NumericError);
}

}  // TEST_SUITE
