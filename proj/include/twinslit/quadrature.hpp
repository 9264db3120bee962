#ifndef TWINSLIT_QUADRATURE_HPP
#define TWINSLIT_QUADRATURE_HPP

#include <functional>

#include "twinslit/errors.hpp"

namespace twinslit {

// Composite 16-point Gauss-Legendre over 2^level equal panels, doubling the
// panel count until two successive levels agree to abs_tol. Summation order
// is fixed (panel-major, node-minor), so results are reproducible bit for
// bit. phase_hint is the integrand's estimated total phase span in radians;
// it selects the starting level so that the first compared estimates are
// already in the rule's convergent regime. Throws NonConvergence when the
// level cap is exhausted.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth, double phase_hint = 0.0);

// Tensor-product variant on [ax,bx] x [ay,by]; both axes share the level.
double integrate2d(const std::function<double(double, double)>& f, double ax,
                   double bx, double ay, double by, double abs_tol,
                   int max_depth, double phase_hint_x = 0.0,
                   double phase_hint_y = 0.0);

} // namespace twinslit

#endif // TWINSLIT_QUADRATURE_HPP
