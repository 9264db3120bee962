#ifndef TWINSLIT_GEOMETRY_HPP
#define TWINSLIT_GEOMETRY_HPP

#include "twinslit/config.hpp"

namespace twinslit {

// Which double slit / screen pair: East sits at +l, West at -l.
enum class Side { East, West };

// Emission point (u horizontal, x vertical) near the origin.
struct SourcePoint {
    double u = 0.0;
    double x = 0.0;
};

// Difference of the two Euclidean two-segment paths from the source through
// the lower and the upper slit of the given side to the screen coordinate
// (lower minus upper).
double path_difference_exact(const ExperimentConfig& cfg, Side side,
                             SourcePoint source, double screen_coord);

// First-order form h*x/l + h*screen_coord/m.
// Accurate to ~1% relative when cfg.approximation_valid() and the inputs stay
// inside |x| <= 0.01*h, |screen_coord| <= 0.01*m.
double path_difference_approx(const ExperimentConfig& cfg, double x,
                              double screen_coord);

} // namespace twinslit

#endif // TWINSLIT_GEOMETRY_HPP
