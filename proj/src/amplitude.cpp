#include "twinslit/amplitude.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "twinslit/geometry.hpp"
#include "twinslit/quadrature.hpp"

namespace twinslit {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::CI: return "CI";
        case Regime::QI: return "QI";
        case Regime::Intermediate: return "intermediate";
    }
    return "?";
}

Regime regime_from_name(std::string_view name) {
    if (name == "CI" || name == "ci") return Regime::CI;
    if (name == "QI" || name == "qi") return Regime::QI;
    if (name == "intermediate") return Regime::Intermediate;
    throw std::invalid_argument("unknown regime: " + std::string(name));
}

double envelope(double k_theta_d) {
    if (k_theta_d == 0.0) return 1.0;
    return (2.0 / k_theta_d) * std::sin(0.5 * k_theta_d);
}

double amplitude_closed(const ExperimentConfig& cfg, double y, double z) {
    const double kt = cfg.k_theta();
    const double env = envelope(cfg.k_theta_d());
    return env * 0.5 * std::cos(0.5 * kt * (y + z)) +
           0.5 * std::cos(0.5 * kt * (y - z));
}

double amplitude_ci(const ExperimentConfig& cfg, double y, double z) {
    const double kt = cfg.k_theta();
    return std::cos(0.5 * kt * y) * std::cos(0.5 * kt * z);
}

double amplitude_qi(const ExperimentConfig& cfg, double y, double z) {
    return 0.5 * std::cos(0.5 * cfg.k_theta() * (y - z));
}

double amplitude_quadrature(const ExperimentConfig& cfg, double y, double z,
                            const AmplitudeQuadOptions& opts) {
    if (!(cfg.d > 0.0))
        throw std::invalid_argument("amplitude_quadrature requires d > 0");

    const double a = -0.5 * cfg.d;
    const double b = 0.5 * cfg.d;

    if (!opts.exact_paths) {
        const double kt = cfg.k_theta();
        auto integrand = [&](double x) {
            return std::cos(0.5 * kt * (x + y)) * std::cos(0.5 * kt * (x + z));
        };
        // The sum-frequency component of the product sweeps kt*d radians.
        const double integral = integrate(integrand, a, b, opts.abs_tol,
                                          opts.max_depth, std::abs(kt) * cfg.d);
        return integral / cfg.d;
    }

    auto integrand = [&](double u, double x) {
        const double le =
            path_difference_exact(cfg, Side::East, SourcePoint{u, x}, y);
        const double lw =
            path_difference_exact(cfg, Side::West, SourcePoint{u, x}, z);
        return std::cos(0.5 * cfg.k * le) * std::cos(0.5 * cfg.k * lw);
    };
    // d(k*L/2)/dx ~ (k/2)(h/l) per side; the sum component spans k*h/l*d.
    const double phase_x = cfg.k * cfg.h / cfg.l * cfg.d;

    if (cfg.u2 > cfg.u1) {
        const double integral = integrate2d(
            [&](double u, double x) { return integrand(u, x); }, cfg.u1, cfg.u2,
            a, b, opts.abs_tol, opts.max_depth, 0.0, phase_x);
        return integral / ((cfg.u2 - cfg.u1) * cfg.d);
    }
    const double u = cfg.u1;
    const double integral =
        integrate([&](double x) { return integrand(u, x); }, a, b, opts.abs_tol,
                  opts.max_depth, phase_x);
    return integral / cfg.d;
}

RegimeReport classify_regime(const ExperimentConfig& cfg) {
    RegimeReport report;
    report.k_theta_d = cfg.k_theta_d();
    report.envelope = envelope(report.k_theta_d);
    report.momentum_ratio = cfg.d > 0.0
                                ? 1.0 / report.k_theta_d
                                : std::numeric_limits<double>::infinity();
    if (report.k_theta_d <= kCiThreshold)
        report.regime = Regime::CI;
    else if (report.k_theta_d >= kQiThreshold)
        report.regime = Regime::QI;
    else
        report.regime = Regime::Intermediate;
    return report;
}

} // namespace twinslit
