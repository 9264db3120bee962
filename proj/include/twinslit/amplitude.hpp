#ifndef TWINSLIT_AMPLITUDE_HPP
#define TWINSLIT_AMPLITUDE_HPP

#include <string_view>

#include "twinslit/config.hpp"

namespace twinslit {

// Regime thresholds on s = k*theta*d: CI for s <= 0.1, QI for s >= 10.
inline constexpr double kCiThreshold = 0.1;
inline constexpr double kQiThreshold = 10.0;

enum class Regime { CI, QI, Intermediate };

const char* regime_name(Regime r);
Regime regime_from_name(std::string_view name); // throws std::invalid_argument

// Fringe-visibility factor (2/s)*sin(s/2); the s = 0 singularity is
// removable and the value is defined as 1 there. Signed: negative lobes
// appear past s = 2*pi.
double envelope(double k_theta_d);

// Joint amplitude, closed form:
//   envelope * (1/2) cos(k*theta*(y+z)/2) + (1/2) cos(k*theta*(y-z)/2)
double amplitude_closed(const ExperimentConfig& cfg, double y, double z);

// Small-uncertainty limit: cos(k*theta*y/2) * cos(k*theta*z/2).
double amplitude_ci(const ExperimentConfig& cfg, double y, double z);

// Large-uncertainty limit: (1/2) cos(k*theta*(y-z)/2).
double amplitude_qi(const ExperimentConfig& cfg, double y, double z);

struct AmplitudeQuadOptions {
    double abs_tol = 1e-10;
    int max_depth = 20;
    // Integrate cos(k*L_E/2)*cos(k*L_W/2) with exact two-segment path
    // differences over both u and x instead of the small-angle integrand.
    bool exact_paths = false;
};

// Average of cos(k*theta*(x+y)/2)*cos(k*theta*(x+z)/2) over x in [-d/2, d/2]
// by composite Gauss-Legendre quadrature (the u integral is a constant factor
// in the small-angle form and is folded out). Requires d > 0; throws
// NonConvergence when the refinement cap is hit.
double amplitude_quadrature(const ExperimentConfig& cfg, double y, double z,
                            const AmplitudeQuadOptions& opts = {});

struct RegimeReport {
    double k_theta_d = 0.0;
    Regime regime = Regime::Intermediate;
    double momentum_ratio = 0.0; // 1/(k*d*theta); +inf when d == 0
    double envelope = 0.0;
};

RegimeReport classify_regime(const ExperimentConfig& cfg);

} // namespace twinslit

#endif // TWINSLIT_AMPLITUDE_HPP
