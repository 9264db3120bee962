#include <doctest.h>

#include <cmath>
#include <sstream>

#include "twinslit/config.hpp"
#include "twinslit/grid.hpp"
#include "twinslit/serialize.hpp"

using namespace twinslit;

namespace {

ExperimentConfig config_for(double k_theta_d) {
    ExperimentConfig cfg;
    cfg.k = 1.0e7;
    cfg.h = 5.0e-4;
    cfg.l = 1.0;
    cfg.m = 1.0;
    cfg.d = k_theta_d / 1.0e4;
    return cfg;
}

GridSpec square_grid(double half_width, int steps) {
    return GridSpec{-half_width, half_width, steps, -half_width, half_width, steps};
}

} // namespace

TEST_CASE("method names round-trip and reject junk") {
    for (const char* name : {"quadrature", "closed", "ci", "qi", "exact"}) {
        const Method m = method_from_name(name);
        CHECK(method_from_name(name) == m);
    }
    CHECK(std::string(method_tag(Method::Quadrature)) == "approx-quadrature");
    CHECK(std::string(method_tag(Method::Closed)) == "closed-form");
    CHECK(std::string(method_tag(Method::Ci)) == "ci-limit");
    CHECK(std::string(method_tag(Method::Qi)) == "qi-limit");
    CHECK(std::string(method_tag(Method::Exact)) == "exact");
    CHECK_THROWS_AS(method_from_name("fourier"), std::invalid_argument);
}

TEST_CASE("linspace covers both endpoints") {
    const auto samples = linspace(-1.0, 1.0, 5);
    REQUIRE(samples.size() == 5);
    CHECK(samples.front() == -1.0);
    CHECK(samples.back() == 1.0);
    CHECK(samples[2] == doctest::Approx(0.0));
    CHECK(linspace(3.0, 9.0, 1) == std::vector<double>{3.0});
}

TEST_CASE("grid values match the direct evaluator") {
    const ExperimentConfig cfg = config_for(1.0);
    const AmplitudeGrid grid =
        compute_grid(cfg, square_grid(1e-3, 7), Method::Closed);
    REQUIRE(grid.rows() == 7);
    REQUIRE(grid.cols() == 7);
    for (std::size_t i = 0; i < grid.rows(); ++i)
        for (std::size_t j = 0; j < grid.cols(); ++j)
            CHECK(grid.at(i, j) == amplitude_closed(cfg, grid.y[i], grid.z[j]));
}

TEST_CASE("separability defect: product grids factor, joint grids do not") {
    const ExperimentConfig cfg = config_for(0.01);
    const GridSpec spec = square_grid(4.0 * M_PI / cfg.k_theta(), 12);
    CHECK(separability_defect(compute_grid(cfg, spec, Method::Ci)) <= 1e-12);
    CHECK(separability_defect(compute_grid(cfg, spec, Method::Closed)) <= 1e-3);

    const ExperimentConfig joint = config_for(100.0);
    const GridSpec joint_spec = square_grid(4.0 * M_PI / joint.k_theta(), 12);
    CHECK(separability_defect(compute_grid(joint, joint_spec, Method::Closed)) >=
          0.1);
}

TEST_CASE("qi defect on the coarse pi lattice is exactly 1/4") {
    // k*theta = 1 so psi = cos((y-z)/2)/2 on y,z in {0, pi, 2pi, 3pi}
    ExperimentConfig cfg;
    cfg.k = 1.0;
    cfg.h = 0.5;
    cfg.l = 1.0;
    cfg.m = 1.0;
    cfg.d = 1.0;
    const GridSpec spec{0.0, 3.0 * M_PI, 4, 0.0, 3.0 * M_PI, 4};
    const AmplitudeGrid grid = compute_grid(cfg, spec, Method::Qi);
    const double defect = separability_defect(grid);
    CHECK(defect >= 0.2);
    CHECK(defect == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("separability defect needs a 2x2 grid") {
    AmplitudeGrid grid;
    grid.y = {0.0};
    grid.z = {0.0, 1.0};
    grid.values = {1.0, 2.0};
    CHECK_THROWS_AS(separability_defect(grid), GridTooSmall);
}

TEST_CASE("csv output: header, row count, 12 significant digits, determinism") {
    const ExperimentConfig cfg = config_for(1.0);
    const AmplitudeGrid grid =
        compute_grid(cfg, square_grid(1e-3, 5), Method::Closed);
    const std::string text = csv_string(grid);
    CHECK(text.rfind("y,z,psi\n", 0) == 0);

    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line); // header
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        double y = 0.0, z = 0.0, psi = 0.0;
        char c1 = 0, c2 = 0;
        std::istringstream row(line);
        row >> y >> c1 >> z >> c2 >> psi;
        CHECK(c1 == ',');
        CHECK(c2 == ',');
        const std::size_t i = static_cast<std::size_t>((rows - 1) / 5);
        const std::size_t j = static_cast<std::size_t>((rows - 1) % 5);
        CHECK(psi == doctest::Approx(grid.at(i, j)).epsilon(1e-11));
    }
    CHECK(rows == 25);
    CHECK(csv_string(grid) == text); // byte-identical on repeat

    CHECK(format_significant(0.8183098861837907) == "0.818309886184");
}

TEST_CASE("config file parsing: happy path with comments and defaults") {
    const RunConfig run = parse_run_config(
        "# geometry\n"
        "k = 1.0e7\n"
        "h = 5e-4   # slit separation\n"
        "l = 1.0\n"
        "m = 1.0\n"
        "d = 1e-6\n"
        "\n"
        "y_min = -1e-3\n y_max = 1e-3\n y_steps = 11\n"
        "z_min = -2e-3\n z_max = 2e-3\n z_steps = 21\n"
        "method = closed\n");
    CHECK(run.experiment.k == 1.0e7);
    CHECK(run.experiment.u1 == 0.0); // default
    CHECK(run.experiment.u2 == 0.0);
    REQUIRE(run.grid.has_value());
    CHECK(run.grid->y_steps == 11);
    CHECK(run.grid->z_steps == 21);
    REQUIRE(run.method.has_value());
    CHECK(*run.method == "closed");
    CHECK(run.experiment.approximation_valid());
}

TEST_CASE("config file parsing: error paths") {
    CHECK_THROWS_AS(parse_run_config("k = 1\nh = 1e-3\nl = 1\nm = 1\n"),
                    ConfigParseError); // missing d
    CHECK_THROWS_AS(
        parse_run_config("k = 1\nh = 1e-3\nl = 1\nm = 1\nd = 0\nslits = 4\n"),
        ConfigParseError); // unknown key
    CHECK_THROWS_AS(
        parse_run_config("k = 1\nh = 1e-3\nl = 1\nm = 1\nd = banana\n"),
        ConfigParseError); // bad number
    CHECK_THROWS_AS(
        parse_run_config("k = -1\nh = 1e-3\nl = 1\nm = 1\nd = 0\n"),
        ConfigParseError); // k <= 0
    CHECK_THROWS_AS(
        parse_run_config("k = 1\nk = 2\nh = 1e-3\nl = 1\nm = 1\nd = 0\n"),
        ConfigParseError); // duplicate
    CHECK_THROWS_AS(
        parse_run_config("k = 1\nh = 1e-3\nl = 1\nm = 1\nd = 0\ny_min = 0\n"),
        ConfigParseError); // incomplete grid block
    CHECK_THROWS_AS(parse_run_config("k 1\n"), ConfigParseError); // no '='
    CHECK_THROWS_AS(load_run_config("/nonexistent/twinslit.cfg"),
                    ConfigParseError);
}

TEST_CASE("approximation validity flag") {
    ExperimentConfig cfg = config_for(0.01); // h/l = 5e-4, d/2 = 5e-7 <= 5e-6
    CHECK(cfg.approximation_valid());
    cfg.d = 2e-5; // d/2 = 1e-5 > 0.01*h = 5e-6
    CHECK_FALSE(cfg.approximation_valid());
    cfg.d = 0.0;
    cfg.h = 0.02; // h/l > 0.01
    CHECK_FALSE(cfg.approximation_valid());
}

TEST_CASE("grid JSON carries the method tag and the regime report") {
    const ExperimentConfig cfg = config_for(0.01);
    const AmplitudeGrid grid =
        compute_grid(cfg, square_grid(1e-3, 3), Method::Qi);
    const std::string json = grid_json(grid, classify_regime(cfg), -1);
    CHECK(json.find("\"method_tag\":\"qi-limit\"") != std::string::npos);
    CHECK(json.find("\"regime\":\"CI\"") != std::string::npos);
    CHECK(json.find("\"psi\"") != std::string::npos);
}
