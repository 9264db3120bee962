#ifndef TWINSLIT_CONFIG_HPP
#define TWINSLIT_CONFIG_HPP

#include <optional>
#include <string>
#include <string_view>

#include "twinslit/errors.hpp"

namespace twinslit {

// Source, slit and screen geometry plus the emission uncertainties.
// All lengths in meters, k in 1/m.
struct ExperimentConfig {
    double k = 0.0;   // wavenumber 2*pi/lambda
    double h = 0.0;   // slit separation within each double slit; openings sit at +/- h/2
    double l = 0.0;   // source plane to slit plane
    double m = 0.0;   // slit plane to screen
    double d = 0.0;   // vertical emission uncertainty, x in [-d/2, d/2]
    double u1 = 0.0;  // horizontal emission interval [u1, u2]
    double u2 = 0.0;

    double theta() const { return 2.0 * h / l; }
    double k_theta() const { return k * theta(); }
    double k_theta_d() const { return k * theta() * d; }

    // h << l and d/2 << h, with "<<" read as ratio <= 1/100.
    bool approximation_valid() const;

    // Throws std::invalid_argument when k, h, l or m is not positive,
    // d is negative, or u2 < u1.
    void validate() const;
};

// Sample layout for a screen-E x screen-W amplitude grid.
struct GridSpec {
    double y_min = 0.0;
    double y_max = 0.0;
    int y_steps = 0;
    double z_min = 0.0;
    double z_max = 0.0;
    int z_steps = 0;

    void validate() const;
};

// One parsed config file: geometry, optional grid block, optional method.
struct RunConfig {
    ExperimentConfig experiment;
    std::optional<GridSpec> grid;
    std::optional<std::string> method;
};

// Flat `key = value` file, one pair per line, '#' comments.
// Keys: k h l m d u1 u2 y_min y_max y_steps z_min z_max z_steps method.
RunConfig parse_run_config(std::string_view text);
RunConfig load_run_config(const std::string& path);

} // namespace twinslit

#endif // TWINSLIT_CONFIG_HPP
