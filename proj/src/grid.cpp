#include "twinslit/grid.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "twinslit/serialize.hpp"

namespace twinslit {

const char* method_tag(Method m) {
    switch (m) {
        case Method::Quadrature: return "approx-quadrature";
        case Method::Closed: return "closed-form";
        case Method::Ci: return "ci-limit";
        case Method::Qi: return "qi-limit";
        case Method::Exact: return "exact";
    }
    return "?";
}

Method method_from_name(std::string_view name) {
    if (name == "quadrature") return Method::Quadrature;
    if (name == "closed") return Method::Closed;
    if (name == "ci") return Method::Ci;
    if (name == "qi") return Method::Qi;
    if (name == "exact") return Method::Exact;
    throw std::invalid_argument(
        "unknown method '" + std::string(name) +
        "' (expected quadrature, closed, ci, qi or exact)");
}

std::vector<double> linspace(double lo, double hi, int steps) {
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(steps));
    if (steps == 1) {
        samples.push_back(lo);
        return samples;
    }
    const double width = (hi - lo) / static_cast<double>(steps - 1);
    for (int i = 0; i < steps; ++i)
        samples.push_back(lo + static_cast<double>(i) * width);
    return samples;
}

AmplitudeGrid compute_grid(const ExperimentConfig& cfg, const GridSpec& spec,
                           Method method, const AmplitudeQuadOptions& opts) {
    cfg.validate();
    spec.validate();

    AmplitudeGrid grid;
    grid.method = method;
    grid.y = linspace(spec.y_min, spec.y_max, spec.y_steps);
    grid.z = linspace(spec.z_min, spec.z_max, spec.z_steps);
    grid.values.reserve(grid.y.size() * grid.z.size());

    auto evaluate = [&](double y, double z) {
        switch (method) {
            case Method::Quadrature: return amplitude_quadrature(cfg, y, z, opts);
            case Method::Closed: return amplitude_closed(cfg, y, z);
            case Method::Ci: return amplitude_ci(cfg, y, z);
            case Method::Qi: return amplitude_qi(cfg, y, z);
            case Method::Exact: {
                AmplitudeQuadOptions exact = opts;
                exact.exact_paths = true;
                return amplitude_quadrature(cfg, y, z, exact);
            }
        }
        throw std::logic_error("unhandled method");
    };

    for (double y : grid.y)
        for (double z : grid.z) {
            const double value = evaluate(y, z);
            if (!std::isfinite(value))
                throw std::runtime_error("non-finite amplitude in grid");
            grid.values.push_back(value);
        }
    return grid;
}

double separability_defect(const AmplitudeGrid& grid) {
    const std::size_t ny = grid.rows();
    const std::size_t nz = grid.cols();
    if (ny < 2 || nz < 2)
        throw GridTooSmall("separability_defect needs at least a 2x2 grid");

    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < ny; ++i)
        for (std::size_t p = i + 1; p < ny; ++p)
            for (std::size_t j = 0; j + 1 < nz; ++j)
                for (std::size_t q = j + 1; q < nz; ++q) {
                    const double minor = grid.at(i, j) * grid.at(p, q) -
                                         grid.at(i, q) * grid.at(p, j);
                    worst = std::max(worst, std::abs(minor));
                }
    return worst;
}

void write_csv(const AmplitudeGrid& grid, std::ostream& out) {
    out << "y,z,psi\n";
    for (std::size_t i = 0; i < grid.rows(); ++i)
        for (std::size_t j = 0; j < grid.cols(); ++j)
            out << format_significant(grid.y[i]) << ','
                << format_significant(grid.z[j]) << ','
                << format_significant(grid.at(i, j)) << '\n';
}

std::string csv_string(const AmplitudeGrid& grid) {
    std::ostringstream out;
    write_csv(grid, out);
    return out.str();
}

} // namespace twinslit
