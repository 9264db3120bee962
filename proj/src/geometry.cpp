#include "twinslit/geometry.hpp"

#include <cmath>

namespace twinslit {

namespace {

double leg(double x0, double y0, double x1, double y1) {
    return std::hypot(x1 - x0, y1 - y0);
}

} // namespace

double path_difference_exact(const ExperimentConfig& cfg, Side side,
                             SourcePoint source, double screen_coord) {
    const double sign = side == Side::East ? 1.0 : -1.0;
    const double slit_x = sign * cfg.l;
    const double screen_x = sign * (cfg.l + cfg.m);
    const double offset = 0.5 * cfg.h;

    const double through_lower = leg(source.u, source.x, slit_x, -offset) +
                                 leg(slit_x, -offset, screen_x, screen_coord);
    const double through_upper = leg(source.u, source.x, slit_x, offset) +
                                 leg(slit_x, offset, screen_x, screen_coord);
    return through_lower - through_upper;
}

double path_difference_approx(const ExperimentConfig& cfg, double x,
                              double screen_coord) {
    return cfg.h * x / cfg.l + cfg.h * screen_coord / cfg.m;
}

} // namespace twinslit
