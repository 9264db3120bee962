#include <doctest.h>

#include <cmath>
#include <random>

#include "twinslit/amplitude.hpp"
#include "twinslit/grid.hpp"

using namespace twinslit;

namespace {

ExperimentConfig config_for(double k_theta_d) {
    ExperimentConfig cfg;
    cfg.k = 1.0e7;
    cfg.h = 5.0e-4; // k*theta = 1e4
    cfg.l = 1.0;
    cfg.m = 1.0;
    cfg.d = k_theta_d / 1.0e4;
    return cfg;
}

// Independent oracle: midpoint Riemann sum of the averaged integrand.
double riemann_average(double k_theta, double d, double y, double z, int points) {
    double total = 0.0;
    const double width = d / points;
    for (int i = 0; i < points; ++i) {
        const double x = -0.5 * d + (i + 0.5) * width;
        total += std::cos(0.5 * k_theta * (x + y)) *
                 std::cos(0.5 * k_theta * (x + z));
    }
    return total / points;
}

// 1/pi + 1/2, the closed-form value at k*theta*d = pi, y = z = 0.
constexpr double kQuarterWaveValue = 0.8183098861837907;

} // namespace

TEST_CASE("envelope: removable singularity, quarter-wave value, tail bound") {
    CHECK(envelope(0.0) == 1.0);
    CHECK(envelope(M_PI) == doctest::Approx(2.0 / M_PI).epsilon(1e-15));
    CHECK(std::abs(envelope(1e6)) <= 2e-6);
    for (double s = 0.0; s < 40.0; s += 0.37) CHECK(std::abs(envelope(s)) <= 1.0);
    CHECK(envelope(7.0) < 0.0); // signed past 2*pi
}

TEST_CASE("closed form at k*theta*d = pi, y = z = 0 is 1/pi + 1/2") {
    const ExperimentConfig cfg = config_for(M_PI);
    CHECK(amplitude_closed(cfg, 0.0, 0.0) ==
          doctest::Approx(kQuarterWaveValue).epsilon(1e-14));
}

TEST_CASE("closed form at d = 0 degenerates to the CI product") {
    ExperimentConfig cfg = config_for(0.0);
    cfg.d = 0.0;
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> coord(-2e-3, 2e-3);
    for (int i = 0; i < 200; ++i) {
        const double y = coord(rng);
        const double z = coord(rng);
        CHECK(amplitude_closed(cfg, y, z) ==
              doctest::Approx(amplitude_ci(cfg, y, z)).epsilon(1e-14));
    }
}

TEST_CASE("closed form at k*theta*d = 1e6 collapses onto the QI term") {
    const ExperimentConfig cfg = config_for(1e6);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> coord(-2e-3, 2e-3);
    for (int i = 0; i < 100; ++i) {
        const double y = coord(rng);
        CHECK(std::abs(amplitude_closed(cfg, y, y) - 0.5) <= 1e-6);
        const double z = coord(rng);
        CHECK(std::abs(amplitude_closed(cfg, y, z) - amplitude_qi(cfg, y, z)) <=
              1e-6);
    }
}

TEST_CASE("ci formula: center peak and node line") {
    const ExperimentConfig cfg = config_for(0.01);
    CHECK(amplitude_ci(cfg, 0.0, 0.0) == 1.0);
    // k*theta*y = pi puts y on a node regardless of z
    const double node_y = M_PI / cfg.k_theta();
    for (double z : {0.0, 1e-4, -3e-4})
        CHECK(std::abs(amplitude_ci(cfg, node_y, z)) <= 1e-12);
}

TEST_CASE("qi formula: diagonal value and 4*pi periodicity in k*theta*(y-z)") {
    const ExperimentConfig cfg = config_for(1000.0);
    const double kt = cfg.k_theta();
    for (double y : {0.0, 1e-4, 7e-4}) CHECK(amplitude_qi(cfg, y, y) == 0.5);
    // cos(k*theta*(y-z)/2) has period 4*pi in the product k*theta*(y-z)
    CHECK(amplitude_qi(cfg, 4.0 * M_PI / kt, 0.0) ==
          doctest::Approx(0.5).epsilon(1e-12));
    // at k*theta*(y-z) = 2*pi the cosine argument is pi: a trough
    CHECK(amplitude_qi(cfg, 2.0 * M_PI / kt, 0.0) ==
          doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("qi depends only on y - z") {
    const ExperimentConfig cfg = config_for(1000.0);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coord(-2e-3, 2e-3);
    std::uniform_real_distribution<double> shift(-0.5, 0.5);
    for (int i = 0; i < 200; ++i) {
        const double y = coord(rng);
        const double z = coord(rng);
        const double c = shift(rng);
        CHECK(amplitude_qi(cfg, y + c, z + c) ==
              doctest::Approx(amplitude_qi(cfg, y, z)).epsilon(1e-9));
    }
}

TEST_CASE("quadrature reproduces 1/pi + 1/2 and the Riemann oracle") {
    // k*theta = 1, d = pi so k*theta*d = pi
    ExperimentConfig cfg;
    cfg.k = 1.0;
    cfg.h = 0.5;
    cfg.l = 1.0;
    cfg.m = 1.0;
    cfg.d = M_PI;
    const double got = amplitude_quadrature(cfg, 0.0, 0.0);
    CHECK(got == doctest::Approx(kQuarterWaveValue).epsilon(1e-12));
    CHECK(got ==
          doctest::Approx(riemann_average(1.0, M_PI, 0.0, 0.0, 2'000'000))
              .epsilon(1e-9));
}

TEST_CASE("quadrature tends to 1 at the origin as k*theta*d -> 0") {
    const ExperimentConfig cfg = config_for(1e-8);
    CHECK(std::abs(amplitude_quadrature(cfg, 0.0, 0.0) - 1.0) <= 1e-12);
}

TEST_CASE("quadrature agrees with the closed form to 1e-8 across regimes") {
    for (double s : {0.01, 1.0, 100.0}) {
        const ExperimentConfig cfg = config_for(s);
        const double period = 4.0 * M_PI / cfg.k_theta();
        double worst = 0.0;
        for (double y : linspace(-period, period, 20))
            for (double z : linspace(-period, period, 20))
                worst = std::max(worst, std::abs(amplitude_quadrature(cfg, y, z) -
                                                 amplitude_closed(cfg, y, z)));
        CHECK(worst <= 1e-8);
    }
}

TEST_CASE("quadrature rejects d = 0 and reports non-convergence at tiny caps") {
    ExperimentConfig cfg = config_for(1.0);
    cfg.d = 0.0;
    CHECK_THROWS_AS(amplitude_quadrature(cfg, 0.0, 0.0), std::invalid_argument);

    AmplitudeQuadOptions strangled;
    strangled.abs_tol = 1e-16;
    strangled.max_depth = 1;
    CHECK_THROWS_AS(
        amplitude_quadrature(config_for(100.0), 0.0, 0.0, strangled),
        NonConvergence);
}

TEST_CASE("exact-path integrand stays bounded and near 1 at the center") {
    ExperimentConfig cfg = config_for(0.01); // d = 1e-6
    AmplitudeQuadOptions opts;
    opts.exact_paths = true;
    const double center = amplitude_quadrature(cfg, 0.0, 0.0, opts);
    CHECK(std::abs(center) <= 1.0 + 1e-12);
    CHECK(center == doctest::Approx(1.0).epsilon(1e-4));

    // a horizontal source interval barely moves the result (u is second order)
    cfg.u1 = -1e-4;
    cfg.u2 = 1e-4;
    const double with_u = amplitude_quadrature(cfg, 0.0, 0.0, opts);
    CHECK(with_u == doctest::Approx(center).epsilon(1e-6));
}

TEST_CASE("closed form symmetries: argument swap and joint negation") {
    const ExperimentConfig cfg = config_for(M_PI);
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> coord(-2e-3, 2e-3);
    for (int i = 0; i < 200; ++i) {
        const double y = coord(rng);
        const double z = coord(rng);
        CHECK(amplitude_closed(cfg, y, z) ==
              doctest::Approx(amplitude_closed(cfg, z, y)).epsilon(1e-15));
        CHECK(amplitude_closed(cfg, y, z) ==
              doctest::Approx(amplitude_closed(cfg, -y, -z)).epsilon(1e-15));
    }
}

TEST_CASE("every amplitude stays within [-1, 1]") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> log_s(-3.0, 4.0);
    std::uniform_real_distribution<double> coord(-5e-3, 5e-3);
    for (int i = 0; i < 200; ++i) {
        const ExperimentConfig cfg = config_for(std::pow(10.0, log_s(rng)));
        const double y = coord(rng);
        const double z = coord(rng);
        CHECK(std::abs(amplitude_closed(cfg, y, z)) <= 1.0 + 1e-12);
        CHECK(std::abs(amplitude_ci(cfg, y, z)) <= 1.0 + 1e-12);
        CHECK(std::abs(amplitude_qi(cfg, y, z)) <= 0.5 + 1e-12);
        CHECK(std::abs(amplitude_quadrature(cfg, y, z)) <= 1.0 + 1e-12);
    }
}

TEST_CASE("limit-formula error bounds from the closed form") {
    { // |closed - ci| <= |envelope - 1|/2 at k*theta*d = 0.01
        const ExperimentConfig cfg = config_for(0.01);
        const double bound =
            0.5 * std::abs(envelope(cfg.k_theta_d()) - 1.0) + 1e-14;
        const double period = 4.0 * M_PI / cfg.k_theta();
        for (double y : linspace(-period, period, 15))
            for (double z : linspace(-period, period, 15))
                CHECK(std::abs(amplitude_closed(cfg, y, z) -
                               amplitude_ci(cfg, y, z)) <= bound);
    }
    { // |closed - qi| <= 1/(k*theta*d) at k*theta*d = 1000
        const ExperimentConfig cfg = config_for(1000.0);
        const double bound = 1.0 / cfg.k_theta_d() + 1e-14;
        const double period = 4.0 * M_PI / cfg.k_theta();
        for (double y : linspace(-period, period, 15))
            for (double z : linspace(-period, period, 15))
                CHECK(std::abs(amplitude_closed(cfg, y, z) -
                               amplitude_qi(cfg, y, z)) <= bound);
    }
}

TEST_CASE("regime classification and the momentum ratio") {
    {
        const RegimeReport report = classify_regime(config_for(0.01));
        CHECK(report.regime == Regime::CI);
        CHECK(report.momentum_ratio == doctest::Approx(100.0).epsilon(1e-12));
    }
    {
        const RegimeReport report = classify_regime(config_for(100.0));
        CHECK(report.regime == Regime::QI);
        CHECK(report.momentum_ratio == doctest::Approx(0.01).epsilon(1e-12));
    }
    CHECK(classify_regime(config_for(1.0)).regime == Regime::Intermediate);
    CHECK(classify_regime(config_for(0.0999)).regime == Regime::CI);
    CHECK(classify_regime(config_for(0.1001)).regime == Regime::Intermediate);
    CHECK(classify_regime(config_for(9.999)).regime == Regime::Intermediate);
    CHECK(classify_regime(config_for(10.001)).regime == Regime::QI);

    { // d = 0: CI with the ratio flagged infinite
        ExperimentConfig cfg = config_for(1.0);
        cfg.d = 0.0;
        const RegimeReport report = classify_regime(cfg);
        CHECK(report.regime == Regime::CI);
        CHECK(std::isinf(report.momentum_ratio));
        CHECK(report.envelope == 1.0);
    }

    // identity momentum_ratio * k_theta_d = 1 for d > 0
    for (double s : {1e-3, 0.7, 42.0, 1e4}) {
        const RegimeReport report = classify_regime(config_for(s));
        CHECK(std::abs(report.momentum_ratio * report.k_theta_d - 1.0) <= 1e-12);
    }
}
