#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cesaro2d {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

/// Wrap an angle into [0, 2*pi).
inline double wrap_angle(double x) {
    double r = x - two_pi * std::floor(x / two_pi);
    if (r >= two_pi) r -= two_pi;
    if (r < 0) r = 0;
    return r;
}

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes by Newton iteration from Chebyshev initial guesses; accurate to ~1e-15.
inline GaussLegendre gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
    GaussLegendre g;
    g.nodes.resize(n);
    g.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int iter = 0; iter < 64; ++iter) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::fabs(dt) < 1e-15) {
                p0 = 1.0;
                p1 = t;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (t * p1 - p0) / (t * t - 1.0);
                break;
            }
        }
        g.nodes[i] = t;
        g.weights[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    return g;
}

/// Integrate f over [a, b] with one Gauss-Legendre panel.
template <class F>
double integrate_panel(const GaussLegendre& g, double a, double b, F&& f) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double acc = 0;
    for (std::size_t q = 0; q < g.nodes.size(); ++q)
        acc += g.weights[q] * f(c + h * g.nodes[q]);
    return h * acc;
}

/// Panel boundaries covering [a, b]: uniform subdivision at width <= max_width,
/// merged with mandatory break positions (cell edges), sorted and deduplicated.
inline std::vector<double> panel_breakpoints(double a, double b, double max_width,
                                             const std::vector<double>& must_include = {}) {
    if (!(b > a)) throw std::invalid_argument("panel_breakpoints: empty range");
    if (!(max_width > 0)) throw std::invalid_argument("panel_breakpoints: bad width");
    std::vector<double> pts;
    const int n = std::max(1, static_cast<int>(std::ceil((b - a) / max_width)));
    pts.reserve(static_cast<std::size_t>(n) + must_include.size() + 1);
    for (int i = 0; i <= n; ++i) pts.push_back(a + (b - a) * i / n);
    for (double m : must_include)
        if (m > a && m < b) pts.push_back(m);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](double u, double v) { return std::fabs(u - v) < 1e-13; }),
              pts.end());
    return pts;
}

/// Composite integration over the panel decomposition given by breakpoints.
template <class F>
double integrate_panels(const GaussLegendre& g, const std::vector<double>& breaks, F&& f) {
    double acc = 0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        acc += integrate_panel(g, breaks[i], breaks[i + 1], f);
    return acc;
}

}  // namespace cesaro2d
