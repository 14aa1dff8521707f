#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cesaro2d/cesaro.hpp"
#include "cesaro2d/lambda_sequence.hpp"
#include "cesaro2d/periodic_function.hpp"
#include "cesaro2d/quadrature.hpp"

namespace cesaro2d {

/// Parameters of the divergence construction: the modulated-indicator function
/// f_N on the wedge of cells {(i,j) : j < i < 2j, 1 < j < (N-1)/2}.
struct CounterexampleSpec {
    std::size_t N;
    LambdaSequence lambda;
    CesaroOrder order;

    CounterexampleSpec(std::size_t n, LambdaSequence lam, CesaroOrder ord)
        : N(n), lambda(std::move(lam)), order(ord) {
        if (N % 2 == 0)
            throw std::domain_error("CounterexampleSpec: N must be odd");
        if (N < 3) throw std::domain_error("CounterexampleSpec: N too small");
        if (!(order.alpha > 0.0) || !(order.beta > 0.0))
            throw std::domain_error(
                "CounterexampleSpec: the construction needs strictly negative mean orders");
    }
};

/// All (i, j) with j < i < 2j and 1 < j < (N-1)/2. Possibly empty (N < 7).
inline std::vector<std::pair<std::size_t, std::size_t>> index_set(std::size_t N) {
    std::vector<std::pair<std::size_t, std::size_t>> w;
    for (std::size_t j = 2; 2 * j < N - 1; ++j)
        for (std::size_t i = j + 1; i < 2 * j; ++i) w.emplace_back(i, j);
    return w;
}

inline bool in_index_set(std::size_t N, std::size_t i, std::size_t j) {
    return j > 1 && 2 * j < N - 1 && i > j && i < 2 * j;
}

struct Rect {
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};

/// Cell A_{i,j} = [ (pi i - a pi/2)/(N+1/2-a/2), (pi(i+1) - a pi/2)/(N+1/2-a/2) )
///              x [ (pi j - b pi/2)/(N+1/2-b/2), (pi(j+1) - b pi/2)/(N+1/2-b/2) ).
/// On the cell the phase (N+1/2-a/2)x + a pi/2 traverses exactly [pi i, pi(i+1)].
inline Rect cell_bounds(std::size_t N, const CesaroOrder& order, std::size_t i, std::size_t j) {
    if (!in_index_set(N, i, j))
        throw std::domain_error("cell_bounds: (i, j) outside the index set");
    const double fx = static_cast<double>(N) + 0.5 - 0.5 * order.alpha;
    const double fy = static_cast<double>(N) + 0.5 - 0.5 * order.beta;
    Rect r;
    r.x0 = (pi * static_cast<double>(i) - 0.5 * order.alpha * pi) / fx;
    r.x1 = (pi * static_cast<double>(i + 1) - 0.5 * order.alpha * pi) / fx;
    r.y0 = (pi * static_cast<double>(j) - 0.5 * order.beta * pi) / fy;
    r.y1 = (pi * static_cast<double>(j + 1) - 0.5 * order.beta * pi) / fy;
    return r;
}

/// t_1..t_{j_max} with t_j = (sum_{i<=j} 1/lambda_i)^{-1}; nonincreasing.
inline std::vector<double> weights_t(const LambdaSequence& lambda, std::size_t j_max) {
    const std::vector<double> lam = lambda.prefix(j_max);
    std::vector<double> t(j_max);
    double inv_sum = 0;
    for (std::size_t j = 0; j < j_max; ++j) {
        inv_sum += 1.0 / lam[j];
        t[j] = 1.0 / inv_sum;
    }
    return t;
}

/// The construction's cells and weights, materialised.
struct CellGrid {
    std::vector<std::pair<std::size_t, std::size_t>> indices;  // members of W
    std::vector<Rect> cells;                                   // parallel to indices
    std::vector<double> t;                                     // t_1..t_jmax (1-based via t[j-1])
};

inline CellGrid build_cell_grid(const CounterexampleSpec& spec) {
    CellGrid g;
    g.indices = index_set(spec.N);
    g.cells.reserve(g.indices.size());
    std::size_t jmax = 1;
    for (const auto& [i, j] : g.indices) {
        g.cells.push_back(cell_bounds(spec.N, spec.order, i, j));
        jmax = std::max(jmax, j);
    }
    g.t = weights_t(spec.lambda, jmax);
    return g;
}

/// O(1) evaluator of f_N: the containing cell follows from inverting the
/// linear phase maps, no search.
class FNEvaluator {
  public:
    explicit FNEvaluator(const CounterexampleSpec& spec)
        : N_(spec.N),
          fx_(static_cast<double>(spec.N) + 0.5 - 0.5 * spec.order.alpha),
          fy_(static_cast<double>(spec.N) + 0.5 - 0.5 * spec.order.beta),
          px_(0.5 * spec.order.alpha * pi),
          py_(0.5 * spec.order.beta * pi) {
        std::size_t jmax = 1;
        for (std::size_t j = 2; 2 * j < N_ - 1; ++j) jmax = j;
        t_ = weights_t(spec.lambda, jmax);
    }

    double operator()(double x, double y) const {
        x = wrap_angle(x);
        y = wrap_angle(y);
        const double u = fx_ * x + px_;
        const double v = fy_ * y + py_;
        const double fi = std::floor(u / pi), fj = std::floor(v / pi);
        if (fi < 3 || fj < 2) return 0.0;
        const std::size_t i = static_cast<std::size_t>(fi), j = static_cast<std::size_t>(fj);
        if (!in_index_set(N_, i, j)) return 0.0;
        return t_[j - 1] * std::sin(u) * std::sin(v);
    }

  private:
    std::size_t N_;
    double fx_, fy_, px_, py_;
    std::vector<double> t_;
};

inline double evaluate_fN(const CounterexampleSpec& spec, double x, double y) {
    return FNEvaluator(spec)(x, y);
}

/// f_N as a piecewise-analytic PeriodicFunction2D (shared constructor with the
/// cell grid; used by the convolution route and the CLI builtin).
inline PeriodicFunction2D fN_function(const CounterexampleSpec& spec) {
    const CellGrid g = build_cell_grid(spec);
    const double fx = static_cast<double>(spec.N) + 0.5 - 0.5 * spec.order.alpha;
    const double fy = static_cast<double>(spec.N) + 0.5 - 0.5 * spec.order.beta;
    std::vector<Cell> cells;
    cells.reserve(g.cells.size());
    for (std::size_t k = 0; k < g.cells.size(); ++k) {
        const auto& [i, j] = g.indices[k];
        Cell c;
        c.x0 = g.cells[k].x0;
        c.x1 = g.cells[k].x1;
        c.y0 = g.cells[k].y0;
        c.y1 = g.cells[k].y1;
        SeparableTerm term;
        term.fx = AxisFactor::sine(g.t[j - 1], fx, 0.5 * spec.order.alpha * pi);
        term.fy = AxisFactor::sine(1.0, fy, 0.5 * spec.order.beta * pi);
        c.terms.push_back(term);
        cells.push_back(std::move(c));
    }
    if (cells.empty()) return PeriodicFunction2D::separable({});
    return PeriodicFunction2D::from_cells(std::move(cells));
}

/// Quadrature for the per-cell integrals of sigma_{N,N} f_N (0,0). Each cell
/// spans one half-period of the sine phase; two panels per axis keep the
/// panel width under pi/(2N).
struct SigmaQuad {
    int nodes = 12;
    int panels_per_cell_axis = 2;
};

struct SigmaResult {
    double value = 0;           // sigma_{N,N}^{(-a,-b)} f_N (0, 0)
    double quad_error = 0;      // node-doubling estimate
};

namespace detail {

struct AxisIntegrals {
    std::vector<double> phi_part;   // integral of sin(phase) * phi over each cell strip
    std::vector<double> rem_part;   // integral of sin(phase) * (K - phi)
    std::size_t lo = 0;             // first strip index
};

// Integrals over strip idx in lo..hi of sin(f u + p) * K_N^{-a}(u) du, split
// into the phi surrogate part and the remainder part.
inline AxisIntegrals axis_integrals(std::size_t N, double alpha, std::size_t lo, std::size_t hi,
                                    int nodes, int panels) {
    AxisIntegrals out;
    out.lo = lo;
    const double f = static_cast<double>(N) + 0.5 - 0.5 * alpha;
    const double ph = 0.5 * alpha * pi;
    const GaussLegendre gl = gauss_legendre(nodes);
    const CoeffTable w = cesaro_diff_weights(-alpha, N);
    const double a_n = coeff_prefix_any(-alpha, N).back();
    out.phi_part.assign(hi - lo + 1, 0.0);
    out.rem_part.assign(hi - lo + 1, 0.0);
    for (std::size_t idx = lo; idx <= hi; ++idx) {
        const double u0 = (pi * static_cast<double>(idx) - ph) / f;
        const double u1 = (pi * static_cast<double>(idx + 1) - ph) / f;
        double accp = 0, accr = 0;
        for (int p = 0; p < panels; ++p) {
            const double a = u0 + (u1 - u0) * p / panels;
            const double b = u0 + (u1 - u0) * (p + 1) / panels;
            const double c = 0.5 * (a + b), h = 0.5 * (b - a);
            for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
                const double u = c + h * gl.nodes[q];
                const double sn = std::sin(f * u + ph);
                const double k = cesaro_kernel(N, -alpha, u, w, a_n);
                const double phi = phi_kernel(N, -alpha, u);
                accp += h * gl.weights[q] * sn * phi;
                accr += h * gl.weights[q] * sn * (k - phi);
            }
        }
        out.phi_part[idx - lo] = accp;
        out.rem_part[idx - lo] = accr;
    }
    return out;
}

}  // namespace detail

/// The four contributions of the kernel decomposition (phi surrogate vs
/// remainder, per axis); they sum to pi^2 * sigma_{N,N} f_N (0,0).
struct SigmaDecomposition {
    double f1 = 0;  // remainder x remainder
    double f2 = 0;  // remainder in x, phi in y
    double f3 = 0;  // phi in x, remainder in y
    double f4 = 0;  // phi x phi (nonnegative, the dominant term)
    double total() const { return f1 + f2 + f3 + f4; }
};

namespace detail {

inline void check_sigma_quad(const CounterexampleSpec& spec, const SigmaQuad& quad) {
    if (quad.nodes < 4 || quad.panels_per_cell_axis < 1)
        throw std::invalid_argument("sigma_at_origin: quadrature config too coarse");
    const double fmin = static_cast<double>(spec.N) + 0.5 - 0.5 * std::max(spec.order.alpha, spec.order.beta);
    const double panel_width = pi / fmin / quad.panels_per_cell_axis;
    if (panel_width > pi / (2.0 * static_cast<double>(spec.N)) * (1.0 + 1e-12))
        throw std::invalid_argument(
            "sigma_at_origin: panel width exceeds pi/(2N); oscillation under-resolved");
}

inline SigmaDecomposition sigma_pass(const CounterexampleSpec& spec, int nodes, int panels) {
    const auto w = index_set(spec.N);
    SigmaDecomposition d;
    if (w.empty()) return d;
    std::size_t imin = ~std::size_t{0}, imax = 0, jmin = ~std::size_t{0}, jmax = 0;
    for (const auto& [i, j] : w) {
        imin = std::min(imin, i);
        imax = std::max(imax, i);
        jmin = std::min(jmin, j);
        jmax = std::max(jmax, j);
    }
    const auto ax = axis_integrals(spec.N, spec.order.alpha, imin, imax, nodes, panels);
    const auto ay = axis_integrals(spec.N, spec.order.beta, jmin, jmax, nodes, panels);
    const std::vector<double> t = weights_t(spec.lambda, jmax);
    for (const auto& [i, j] : w) {
        const double tj = t[j - 1];
        const double xp = ax.phi_part[i - ax.lo], xr = ax.rem_part[i - ax.lo];
        const double yp = ay.phi_part[j - ay.lo], yr = ay.rem_part[j - ay.lo];
        d.f1 += tj * xr * yr;
        d.f2 += tj * xr * yp;
        d.f3 += tj * xp * yr;
        d.f4 += tj * xp * yp;
    }
    return d;
}

}  // namespace detail

/// sigma_{N,N}^{(-a,-b)} f_N (0, 0) by per-cell quadrature with the exact
/// kernels; the quadrature error is estimated by node doubling.
inline SigmaResult sigma_at_origin(const CounterexampleSpec& spec, const SigmaQuad& quad = {}) {
    detail::check_sigma_quad(spec, quad);
    const double v1 = detail::sigma_pass(spec, quad.nodes, quad.panels_per_cell_axis).total() /
                      (pi * pi);
    const double v2 =
        detail::sigma_pass(spec, quad.nodes * 2, quad.panels_per_cell_axis).total() / (pi * pi);
    return {v2, std::fabs(v2 - v1)};
}

/// Diagnostic split of pi^2 sigma into the four phi/remainder products. The
/// headline sigma value always comes from the exact kernel; this mirrors the
/// estimate chain used to prove the lower bound.
inline SigmaDecomposition sigma_decomposition(const CounterexampleSpec& spec,
                                              const SigmaQuad& quad = {}) {
    detail::check_sigma_quad(spec, quad);
    return detail::sigma_pass(spec, quad.nodes, quad.panels_per_cell_axis);
}

struct DivergenceBound {
    double value = 0;      // sum_{j=j0}^{[(N-1)/2]} t_j / j^{1-(a+b)}
    double eq39_sum = 0;   // companion sum_{j=j0}^{[(N-1)/2]} gamma_j / j
    bool empty = false;    // j0 beyond the range; value 0 with a warning flag
};

/// The divergence lower-bound partial sum and its companion form, where
/// gamma_j = lambda_j / j^{1-(a+b)}.
inline DivergenceBound divergence_lower_bound(const CounterexampleSpec& spec, std::size_t j0) {
    const std::size_t jtop = (spec.N - 1) / 2;
    DivergenceBound b;
    if (j0 > jtop || j0 < 1) {
        b.empty = true;
        return b;
    }
    const double s = spec.order.alpha + spec.order.beta;
    const std::vector<double> t = weights_t(spec.lambda, jtop);
    const std::vector<double> lam = spec.lambda.prefix(jtop);
    for (std::size_t j = j0; j <= jtop; ++j) {
        const double jd = static_cast<double>(j);
        b.value += t[j - 1] / std::pow(jd, 1.0 - s);
        b.eq39_sum += lam[j - 1] / std::pow(jd, 1.0 - s) / jd;
    }
    return b;
}

/// Default truncation index: the smallest j whose summand weight
/// t_j / j^{1-(a+b)} has fallen below 10% of its j = 2 value, capped at
/// [(N-1)/2].
inline std::size_t default_j0(const CounterexampleSpec& spec) {
    const std::size_t jtop = std::max<std::size_t>(2, (spec.N - 1) / 2);
    const double s = spec.order.alpha + spec.order.beta;
    const std::vector<double> t = weights_t(spec.lambda, jtop);
    const double ref = t[1] / std::pow(2.0, 1.0 - s);
    for (std::size_t j = 2; j <= jtop; ++j)
        if (t[j - 1] / std::pow(static_cast<double>(j), 1.0 - s) < 0.1 * ref) return j;
    return jtop;
}

struct PlbvCheck {
    double v1_max = 0;  // max over j of (sum_{i=j}^{2j-1} 1/lambda_{2j-i}) t_j
    double v2_max = 0;  // max over i of t_{[i/2]} sum_{j=1}^{i-[i/2]+1} 1/lambda_j
    bool v1_ok = true;
    bool v2_ok = true;
    std::vector<double> row_values;  // indexed by j - 2
    std::vector<double> col_values;  // indexed by i - 3
};

/// The two structural estimates controlling the partial Lambda-variation of
/// f_N, evaluated over all admissible rows and columns and compared against a
/// fixed constant.
inline PlbvCheck verify_plbv_bound(const CounterexampleSpec& spec, double constant = 2.0) {
    PlbvCheck out;
    const auto w = index_set(spec.N);
    if (w.empty()) return out;
    std::size_t jmax = 0, imax = 0;
    for (const auto& [i, j] : w) {
        jmax = std::max(jmax, j);
        imax = std::max(imax, i);
    }
    const std::vector<double> lam = spec.lambda.prefix(std::max(jmax, imax - imax / 2 + 1));
    const std::vector<double> t = weights_t(spec.lambda, std::max(jmax, imax / 2));
    for (std::size_t j = 2; j <= jmax; ++j) {
        double s = 0;
        for (std::size_t i = j; i <= 2 * j - 1; ++i) s += 1.0 / lam[2 * j - i - 1];
        out.row_values.push_back(s * t[j - 1]);
        out.v1_max = std::max(out.v1_max, out.row_values.back());
    }
    for (std::size_t i = 3; i <= imax; ++i) {
        double s = 0;
        for (std::size_t j = 1; j <= i - i / 2 + 1; ++j) s += 1.0 / lam[j - 1];
        out.col_values.push_back(t[i / 2 - 1] * s);
        out.v2_max = std::max(out.v2_max, out.col_values.back());
    }
    out.v1_ok = out.v1_max <= constant;
    out.v2_ok = out.v2_max <= constant;
    return out;
}

}  // namespace cesaro2d
