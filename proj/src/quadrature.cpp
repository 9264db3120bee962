#include "twinslit/quadrature.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>
#include <vector>

namespace twinslit {

namespace {

struct GaussRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

// Newton iteration on the Legendre polynomial roots.
GaussRule make_gauss_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (;;) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15) break;
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    return rule;
}

const GaussRule& gauss16() {
    static const GaussRule rule = make_gauss_rule(16);
    return rule;
}

// Panels carrying more than ~8 radians each put the 16-point rule outside
// its fast-convergence regime; start refinement past that point.
constexpr double kMaxPanelPhase = 8.0;

int starting_level(double phase_hint, int max_depth) {
    if (!(phase_hint > kMaxPanelPhase)) return 0;
    const int level =
        static_cast<int>(std::ceil(std::log2(phase_hint / kMaxPanelPhase)));
    return level < max_depth ? level : max_depth;
}

double composite_1d(const std::function<double(double)>& f, double a, double b,
                    int level) {
    const GaussRule& rule = gauss16();
    const std::size_t panels = std::size_t{1} << level;
    const double width = (b - a) / static_cast<double>(panels);
    double total = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
        const double lo = a + static_cast<double>(p) * width;
        const double mid = lo + 0.5 * width;
        double panel_sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            panel_sum += rule.weights[i] * f(mid + 0.5 * width * rule.nodes[i]);
        total += 0.5 * width * panel_sum;
    }
    return total;
}

double composite_2d(const std::function<double(double, double)>& f, double ax,
                    double bx, double ay, double by, int level) {
    const GaussRule& rule = gauss16();
    const std::size_t panels = std::size_t{1} << level;
    const double wx = (bx - ax) / static_cast<double>(panels);
    const double wy = (by - ay) / static_cast<double>(panels);
    double total = 0.0;
    for (std::size_t px = 0; px < panels; ++px) {
        const double midx = ax + (static_cast<double>(px) + 0.5) * wx;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double x = midx + 0.5 * wx * rule.nodes[i];
            for (std::size_t py = 0; py < panels; ++py) {
                const double midy = ay + (static_cast<double>(py) + 0.5) * wy;
                double inner = 0.0;
                for (std::size_t j = 0; j < rule.nodes.size(); ++j)
                    inner += rule.weights[j] * f(x, midy + 0.5 * wy * rule.nodes[j]);
                total += rule.weights[i] * 0.25 * wx * wy * inner;
            }
        }
    }
    return total;
}

[[noreturn]] void throw_non_convergence(double last_delta, double abs_tol,
                                        int max_depth) {
    std::ostringstream msg;
    msg << "quadrature did not reach |delta| < " << abs_tol << " within depth "
        << max_depth << " (last delta " << last_delta << ")";
    throw NonConvergence(msg.str());
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth, double phase_hint) {
    if (!(b > a)) return 0.0;
    const int start = starting_level(phase_hint, max_depth);
    double prev = composite_1d(f, a, b, start);
    double delta = std::abs(prev);
    for (int level = start + 1; level <= max_depth; ++level) {
        const double cur = composite_1d(f, a, b, level);
        delta = std::abs(cur - prev);
        if (delta < abs_tol) return cur;
        prev = cur;
    }
    throw_non_convergence(delta, abs_tol, max_depth);
}

double integrate2d(const std::function<double(double, double)>& f, double ax,
                   double bx, double ay, double by, double abs_tol,
                   int max_depth, double phase_hint_x, double phase_hint_y) {
    if (!(bx > ax) || !(by > ay)) return 0.0;
    const double phase = phase_hint_x > phase_hint_y ? phase_hint_x : phase_hint_y;
    const int start = starting_level(phase, max_depth);
    double prev = composite_2d(f, ax, bx, ay, by, start);
    double delta = std::abs(prev);
    for (int level = start + 1; level <= max_depth; ++level) {
        const double cur = composite_2d(f, ax, bx, ay, by, level);
        delta = std::abs(cur - prev);
        if (delta < abs_tol) return cur;
        prev = cur;
    }
    throw_non_convergence(delta, abs_tol, max_depth);
}

} // namespace twinslit
