#ifndef TWINSLIT_GRID_HPP
#define TWINSLIT_GRID_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "twinslit/amplitude.hpp"

namespace twinslit {

enum class Method { Quadrature, Closed, Ci, Qi, Exact };

// Tag written into grid output: approx-quadrature, closed-form, ci-limit,
// qi-limit, exact.
const char* method_tag(Method m);
// Accepts the CLI names quadrature|closed|ci|qi|exact; throws
// std::invalid_argument otherwise.
Method method_from_name(std::string_view name);

struct AmplitudeGrid {
    std::vector<double> y;
    std::vector<double> z;
    std::vector<double> values; // row-major, y.size() rows x z.size() cols
    Method method = Method::Closed;

    std::size_t rows() const { return y.size(); }
    std::size_t cols() const { return z.size(); }
    double at(std::size_t i, std::size_t j) const { return values[i * z.size() + j]; }
};

std::vector<double> linspace(double lo, double hi, int steps);

// Evaluates the chosen amplitude on the sample lattice, row by row.
// Every value is checked finite.
AmplitudeGrid compute_grid(const ExperimentConfig& cfg, const GridSpec& spec,
                           Method method, const AmplitudeQuadOptions& opts = {});

// Largest |psi(yi,zj)*psi(yp,zq) - psi(yi,zq)*psi(yp,zj)| over all index
// pairs i<p, j<q: zero iff the sampled grid factors as f(y)*g(z).
// Throws GridTooSmall below 2x2.
double separability_defect(const AmplitudeGrid& grid);

// Header `y,z,psi`, one row per sample, 12 significant digits.
void write_csv(const AmplitudeGrid& grid, std::ostream& out);
std::string csv_string(const AmplitudeGrid& grid);

} // namespace twinslit

#endif // TWINSLIT_GRID_HPP
