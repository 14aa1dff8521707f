#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "cesaro2d/cesaro.hpp"
#include "cesaro2d/periodic_function.hpp"
#include "cesaro2d/quadrature.hpp"

namespace cesaro2d {

struct UnsupportedRepresentationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LimitFailureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense table of Fourier coefficients fhat(m, n) for |m| <= M, |n| <= N.
struct CoefficientGrid {
    std::size_t M = 0, N = 0;
    std::size_t quadrature_points = 0;
    std::vector<std::complex<double>> coeffs;  // (2M+1) x (2N+1), row-major in m

    std::complex<double> at(long m, long n) const {
        if (static_cast<std::size_t>(std::labs(m)) > M ||
            static_cast<std::size_t>(std::labs(n)) > N)
            throw std::out_of_range("CoefficientGrid::at: index outside stored range");
        return coeffs[idx(m, n)];
    }
    std::size_t idx(long m, long n) const {
        return static_cast<std::size_t>(m + static_cast<long>(M)) * (2 * N + 1) +
               static_cast<std::size_t>(n + static_cast<long>(N));
    }

    /// Debug dump, columns m,n,re,im.
    void to_csv(std::ostream& os) const;
};

/// Fourier coefficients of f. For piecewise functions with closed-form cells
/// the per-cell integrals are evaluated exactly; otherwise the uniform-lattice
/// trapezoidal rule is used (spectrally accurate for smooth f), which requires
/// resolution >= 4*max(M,N) as an anti-aliasing margin.
inline CoefficientGrid compute_coefficients(const PeriodicFunction2D& f, std::size_t M,
                                            std::size_t N, std::size_t resolution) {
    CoefficientGrid g;
    g.M = M;
    g.N = N;
    g.quadrature_points = resolution;
    g.coeffs.assign((2 * M + 1) * (2 * N + 1), {0.0, 0.0});
    const double norm = 1.0 / (4.0 * pi * pi);

    if (f.has_closed_form_cells()) {
        std::vector<std::complex<double>> ix(2 * M + 1), iy(2 * N + 1);
        for (const Cell& c : f.cells()) {
            for (const auto& term : c.terms) {
                for (long m = -static_cast<long>(M); m <= static_cast<long>(M); ++m)
                    ix[static_cast<std::size_t>(m + static_cast<long>(M))] =
                        term.fx.fourier_integral(c.x0, c.x1, m);
                for (long n = -static_cast<long>(N); n <= static_cast<long>(N); ++n)
                    iy[static_cast<std::size_t>(n + static_cast<long>(N))] =
                        term.fy.fourier_integral(c.y0, c.y1, n);
                for (std::size_t im = 0; im < ix.size(); ++im)
                    for (std::size_t in = 0; in < iy.size(); ++in)
                        g.coeffs[im * (2 * N + 1) + in] += norm * ix[im] * iy[in];
            }
        }
        return g;
    }

    // lattice rule
    const std::size_t R = f.is_grid() ? f.grid_size() : resolution;
    if (R < 4 * std::max(M, N) || R < 4)
        throw std::invalid_argument(
            "compute_coefficients: resolution below the 4*max(M,N) anti-aliasing margin");
    g.quadrature_points = R;
    const double h = two_pi / static_cast<double>(R);
    // sample once, then two separable phase passes
    std::vector<double> samples(R * R);
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < R; ++j)
            samples[i * R + j] = f(static_cast<double>(i) * h, static_cast<double>(j) * h);
    std::vector<std::complex<double>> ey(R * (2 * N + 1));
    for (std::size_t j = 0; j < R; ++j)
        for (long n = -static_cast<long>(N); n <= static_cast<long>(N); ++n)
            ey[j * (2 * N + 1) + static_cast<std::size_t>(n + static_cast<long>(N))] =
                std::exp(std::complex<double>(0.0, -static_cast<double>(n) * static_cast<double>(j) * h));
    std::vector<std::complex<double>> row(2 * N + 1);
    for (std::size_t i = 0; i < R; ++i) {
        std::fill(row.begin(), row.end(), std::complex<double>{});
        for (std::size_t j = 0; j < R; ++j) {
            const double v = samples[i * R + j];
            if (v == 0.0) continue;
            const auto* e = &ey[j * (2 * N + 1)];
            for (std::size_t in = 0; in < row.size(); ++in) row[in] += v * e[in];
        }
        for (long m = -static_cast<long>(M); m <= static_cast<long>(M); ++m) {
            const std::complex<double> ex =
                std::exp(std::complex<double>(0.0, -static_cast<double>(m) * static_cast<double>(i) * h));
            const std::size_t im = static_cast<std::size_t>(m + static_cast<long>(M));
            for (std::size_t in = 0; in < row.size(); ++in)
                g.coeffs[im * (2 * N + 1) + in] += ex * row[in];
        }
    }
    const double scale = 1.0 / (static_cast<double>(R) * static_cast<double>(R));
    for (auto& c : g.coeffs) c *= scale;
    return g;
}

inline void CoefficientGrid::to_csv(std::ostream& os) const {
    os << "m,n,re,im\n";
    for (long m = -static_cast<long>(M); m <= static_cast<long>(M); ++m)
        for (long n = -static_cast<long>(N); n <= static_cast<long>(N); ++n) {
            const auto c = coeffs[idx(m, n)];
            os << m << ',' << n << ',' << c.real() << ',' << c.imag() << '\n';
        }
}

namespace detail {

inline void check_imag_residue(std::complex<double> total, double scale, const char* who) {
    if (std::fabs(total.imag() * scale) > 1e-9)
        throw std::runtime_error(std::string(who) +
                                 ": imaginary residue exceeds 1e-9 (non-real input?)");
}

}  // namespace detail

/// Rectangular partial sum S_{M,N}[f](x, y).
inline double partial_sum(const CoefficientGrid& c, std::size_t M, std::size_t N, double x,
                          double y) {
    if (M > c.M || N > c.N)
        throw std::out_of_range("partial_sum: order exceeds stored coefficient range");
    std::complex<double> acc = 0;
    for (long m = -static_cast<long>(M); m <= static_cast<long>(M); ++m) {
        const std::complex<double> ex = std::exp(std::complex<double>(0.0, m * x));
        std::complex<double> inner = 0;
        for (long n = -static_cast<long>(N); n <= static_cast<long>(N); ++n)
            inner += c.at(m, n) * std::exp(std::complex<double>(0.0, n * y));
        acc += ex * inner;
    }
    detail::check_imag_residue(acc, 1.0, "partial_sum");
    return acc.real();
}

/// Negative-order Cesaro mean by the definitional weighted sum over partial
/// sums,
///   sigma_{m,n} = (1/(A_m^{-a} A_n^{-b})) sum_{i,j} A_{m-i}^{-a-1} A_{n-j}^{-b-1} S_{i,j},
/// organised as separated 1D passes so the cost is O(mn). The first index m
/// always pairs with the x variable.
inline double cesaro_mean_direct(const CoefficientGrid& c, std::size_t m, std::size_t n,
                                 const CesaroOrder& order, double x, double y) {
    if (m > c.M || n > c.N)
        throw std::out_of_range("cesaro_mean_direct: order exceeds stored coefficient range");
    const double a = -order.alpha, b = -order.beta;
    const CoeffTable wx = detail::coeff_prefix_any(a - 1.0, m);
    const CoeffTable wy = detail::coeff_prefix_any(b - 1.0, n);
    const double am = detail::coeff_prefix_any(a, m).back();
    const double an = detail::coeff_prefix_any(b, n).back();

    const long mL = static_cast<long>(m), nL = static_cast<long>(n);
    std::vector<std::complex<double>> ex(2 * m + 1), ey(2 * n + 1);
    for (long p = -mL; p <= mL; ++p)
        ex[static_cast<std::size_t>(p + mL)] = std::exp(std::complex<double>(0.0, p * x));
    for (long q = -nL; q <= nL; ++q)
        ey[static_cast<std::size_t>(q + nL)] = std::exp(std::complex<double>(0.0, q * y));

    // R[p][j] = sum_{|q|<=j} fhat(p,q) e^{iqy}
    std::vector<std::complex<double>> R((2 * m + 1) * (n + 1));
    for (long p = -mL; p <= mL; ++p) {
        const std::size_t base = static_cast<std::size_t>(p + mL) * (n + 1);
        std::complex<double> run = c.at(p, 0) * ey[static_cast<std::size_t>(nL)];
        R[base] = run;
        for (long j = 1; j <= nL; ++j) {
            run += c.at(p, j) * ey[static_cast<std::size_t>(j + nL)] +
                   c.at(p, -j) * ey[static_cast<std::size_t>(-j + nL)];
            R[base + static_cast<std::size_t>(j)] = run;
        }
    }

    // S[j] carries S_{i,j} while i advances
    std::vector<std::complex<double>> S(n + 1);
    std::complex<double> total = 0;
    {
        const std::size_t base = static_cast<std::size_t>(mL) * (n + 1);
        for (std::size_t j = 0; j <= n; ++j) S[j] = R[base + j];
        std::complex<double> inner = 0;
        for (std::size_t j = 0; j <= n; ++j) inner += wy[n - j] * S[j];
        total += wx[m] * inner;
    }
    for (long i = 1; i <= mL; ++i) {
        const std::size_t bp = static_cast<std::size_t>(i + mL) * (n + 1);
        const std::size_t bm = static_cast<std::size_t>(-i + mL) * (n + 1);
        const std::complex<double> ep = ex[static_cast<std::size_t>(i + mL)];
        const std::complex<double> em = ex[static_cast<std::size_t>(-i + mL)];
        std::complex<double> inner = 0;
        for (std::size_t j = 0; j <= n; ++j) {
            S[j] += ep * R[bp + j] + em * R[bm + j];
            inner += wy[n - j] * S[j];
        }
        total += wx[static_cast<std::size_t>(mL - i)] * inner;
    }
    total /= am * an;
    detail::check_imag_residue(total, 1.0, "cesaro_mean_direct");
    return total.real();
}

/// Quadrature settings for the convolution route. panel_width = 0 selects the
/// default pi / (2 max(m, n)); wider panels are refused because they would
/// under-resolve the kernel oscillation.
struct QuadConfig {
    int nodes_per_panel = 10;
    double panel_width = 0.0;
};

/// Negative-order Cesaro mean by the integral representation
///   sigma_{m,n} = (1/pi^2) int int f(x+s, y+t) K_m^{-a}(s) K_n^{-b}(t) ds dt
/// with composite Gauss-Legendre panels; for piecewise f the panel grid is
/// split at cell boundaries so no panel straddles a discontinuity.
inline double cesaro_mean_convolution(const PeriodicFunction2D& f, std::size_t m, std::size_t n,
                                      const CesaroOrder& order, double x, double y,
                                      const QuadConfig& quad = {}) {
    if (m < 1 || n < 1)
        throw std::domain_error("cesaro_mean_convolution: need m, n >= 1");
    const double limit = pi / (2.0 * static_cast<double>(std::max(m, n)));
    const double width = quad.panel_width > 0 ? quad.panel_width : limit;
    if (width > limit * (1.0 + 1e-12))
        throw std::invalid_argument(
            "cesaro_mean_convolution: panel width exceeds pi/(2 max(m,n))");
    if (quad.nodes_per_panel < 2)
        throw std::invalid_argument("cesaro_mean_convolution: need >= 2 nodes per panel");

    auto shifted_breaks = [](const std::vector<double>& edges, double origin) {
        std::vector<double> out;
        out.reserve(edges.size());
        for (double e : edges) {
            double s = wrap_angle(e - origin);
            if (s > pi) s -= two_pi;
            out.push_back(s);
        }
        return out;
    };
    std::vector<double> xb, yb;
    if (f.is_piecewise()) {
        xb = shifted_breaks(f.x_breaks(), x);
        yb = shifted_breaks(f.y_breaks(), y);
    }
    const std::vector<double> sb = panel_breakpoints(-pi, pi, width, xb);
    const std::vector<double> tb = panel_breakpoints(-pi, pi, width, yb);
    const GaussLegendre gl = gauss_legendre(quad.nodes_per_panel);

    auto axis_nodes = [&](const std::vector<double>& breaks) {
        std::vector<double> nodes, weights;
        for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
            const double c = 0.5 * (breaks[i] + breaks[i + 1]);
            const double h = 0.5 * (breaks[i + 1] - breaks[i]);
            for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
                nodes.push_back(c + h * gl.nodes[q]);
                weights.push_back(h * gl.weights[q]);
            }
        }
        return std::pair(nodes, weights);
    };
    auto [sn, sw] = axis_nodes(sb);
    auto [tn, tw] = axis_nodes(tb);

    const std::vector<double> km = cesaro_kernel_sweep(m, -order.alpha, sn);
    const std::vector<double> kn = cesaro_kernel_sweep(n, -order.beta, tn);

    double acc = 0;
    for (std::size_t i = 0; i < sn.size(); ++i) {
        const double xs = x + sn[i];
        const double wk = sw[i] * km[i];
        double inner = 0;
        for (std::size_t j = 0; j < tn.size(); ++j)
            inner += tw[j] * kn[j] * f(xs, y + tn[j]);
        acc += wk * inner;
    }
    return acc / (pi * pi);
}

/// The four open-quadrant limits f(x±0, y±0) and their average.
struct QuadrantLimits {
    double pp = 0, pm = 0, mp = 0, mm = 0;
    double average() const { return (pp + pm + mp + mm) / 4.0; }
};

/// One-sided limits by shrinking diagonal offsets h_k = h_0 2^{-k} until two
/// successive evaluations agree to 1e-10. Piecewise representations only.
inline QuadrantLimits quadrant_limits(const PeriodicFunction2D& f, double x, double y) {
    if (!f.is_piecewise())
        throw UnsupportedRepresentationError(
            "quadrant_limits: only piecewise-analytic representations are supported");
    auto one_sided = [&](double sx, double sy) {
        double h = pi / 64.0;
        double prev = f(x + sx * h, y + sy * h);
        int agreements = 0;
        while (h > 1e-15) {
            h *= 0.5;
            const double cur = f(x + sx * h, y + sy * h);
            if (std::fabs(cur - prev) <= 1e-10) {
                if (++agreements >= 2) return cur;
            } else {
                agreements = 0;
            }
            prev = cur;
        }
        throw LimitFailureError("quadrant_limits: one-sided sequence did not settle");
    };
    QuadrantLimits q;
    q.pp = one_sided(+1, +1);
    q.pm = one_sided(+1, -1);
    q.mp = one_sided(-1, +1);
    q.mm = one_sided(-1, -1);
    return q;
}

}  // namespace cesaro2d
