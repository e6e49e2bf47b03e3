#include <cmath>
#include <limits>

#include "doctest.h"
#include "oscidyn/errors.hpp"
#include "oscidyn/model.hpp"

using namespace oscidyn;

TEST_SUITE("model") {

TEST_CASE("scaling produces g_l = lambda N^l and divides the rates") {
    PhysicalParams p;
    p.l = 1;
    p.lambda = 1e-6;
    p.N = 1e6;
    p.Delta = 0;
    p.gamma = 0.05;
    ModelParams m = scale_parameters(p);
    CHECK(m.g_l == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.Gamma == doctest::Approx(0.05).epsilon(1e-14));
    CHECK(m.delta_bar == 0.0);
    CHECK(m.N == 1e6);

    p = PhysicalParams{2, 1.0, 1.0, 3.0, 0.0, 0.0};
    m = scale_parameters(p);
    CHECK(m.g_l == 1.0);
    CHECK(m.Gamma == 0.0);
    CHECK(m.delta_bar == 3.0);

    p = PhysicalParams{1, 2e-8, 1e4, 2e-4, 1e-5, 1.0};
    m = scale_parameters(p);
    CHECK(m.g_l == doctest::Approx(2e-4).epsilon(1e-14));
    CHECK(m.Gamma == doctest::Approx(0.05).epsilon(1e-14));
    CHECK(m.delta_bar == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.n_d == 1.0);
}

TEST_CASE("scale then unscale round trips within ulp scale") {
    const PhysicalParams p{3, 0.05, 7.5, -0.6, 0.12, 0.8};
    const PhysicalParams q = unscale_parameters(scale_parameters(p));
    CHECK(q.l == p.l);
    CHECK(q.lambda == doctest::Approx(p.lambda).epsilon(1e-15));
    CHECK(q.N == p.N);
    CHECK(q.Delta == doctest::Approx(p.Delta).epsilon(1e-15));
    CHECK(q.gamma == doctest::Approx(p.gamma).epsilon(1e-15));
    CHECK(q.n_d == p.n_d);
}

TEST_CASE("equal g_l pairs give bit-identical scaled dynamics") {
    PhysicalParams a{1, 0.2, 5.0, 0.35, 0.05, 0.5};
    PhysicalParams b{1, 0.5, 2.0, 0.35, 0.05, 0.5};  // same g_l = 1
    const ModelParams ma = scale_parameters(a);
    const ModelParams mb = scale_parameters(b);
    CHECK(ma.g_l == mb.g_l);
    CHECK(ma.Gamma == mb.Gamma);
    CHECK(ma.delta_bar == mb.delta_bar);
    CHECK(ma.n_d == mb.n_d);
    CHECK(ma.N != mb.N);
}

TEST_CASE("physical_time inverts the tau scaling") {
    ModelParams m;
    m.g_l = 0.45;
    CHECK(physical_time(2.0, m) == doctest::Approx(2.0 / 0.45).epsilon(1e-15));
}

TEST_CASE("equilibrium cumulant is n_d + 1/2") {
    ModelParams m;
    m.n_d = 1.0;
    CHECK(m.B0() == 1.5);
    m.n_d = 0.0;
    CHECK(m.B0() == 0.5);
}

TEST_CASE("validation rejects out-of-domain parameters") {
    PhysicalParams p;
    p.l = 0;
    CHECK_THROWS_AS(validate(p), ConfigError);
    p = PhysicalParams{};
    p.lambda = -1.0;
    CHECK_THROWS_AS(validate(p), ConfigError);
    p = PhysicalParams{};
    p.N = 0.5;
    CHECK_THROWS_AS(validate(p), ConfigError);
    p = PhysicalParams{};
    p.gamma = -0.1;
    CHECK_THROWS_AS(validate(p), ConfigError);
    p = PhysicalParams{};
    p.n_d = -0.1;
    CHECK_THROWS_AS(validate(p), ConfigError);
    p = PhysicalParams{};
    p.Delta = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(validate(p), ConfigError);

    ModelParams m;
    m.Gamma = -1e-9;
    CHECK_THROWS_AS(validate(m), ConfigError);
    m = ModelParams{};
    m.g_l = 0.0;
    CHECK_THROWS_AS(validate(m), ConfigError);
    m = ModelParams{};
    m.N = std::nan("");
    CHECK_THROWS_AS(validate(m), ConfigError);
}

TEST_CASE("lambda = 0 is valid physics but cannot be scaled") {
    PhysicalParams p;
    p.lambda = 0.0;
    CHECK_NOTHROW(validate(p));
    CHECK_THROWS_AS(scale_parameters(p), ConfigError);
}

}  // TEST_SUITE
