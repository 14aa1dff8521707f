#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cesaro2d/quadrature.hpp"

namespace cesaro2d {

/// One-axis analytic factor of a cell evaluator: either a polynomial
/// c0 + c1*u or a sine amp*sin(freq*u + phase). Both admit closed-form
/// products with e^{-iku}, which is what the coefficient integrator needs.
struct AxisFactor {
    enum class Kind { poly, sine };
    Kind kind = Kind::poly;
    double c0 = 0, c1 = 0;            // poly
    double amp = 0, freq = 0, phase = 0;  // sine

    static AxisFactor constant(double c) {
        AxisFactor f;
        f.kind = Kind::poly;
        f.c0 = c;
        return f;
    }
    static AxisFactor linear(double c0, double c1) {
        AxisFactor f;
        f.kind = Kind::poly;
        f.c0 = c0;
        f.c1 = c1;
        return f;
    }
    static AxisFactor sine(double amp, double freq, double phase) {
        AxisFactor f;
        f.kind = Kind::sine;
        f.amp = amp;
        f.freq = freq;
        f.phase = phase;
        return f;
    }

    double operator()(double u) const {
        if (kind == Kind::poly) return c0 + c1 * u;
        return amp * std::sin(freq * u + phase);
    }

    /// Closed-form integral of this factor against e^{-iku} over [u0, u1].
    /// k may be any integer; freq may be non-integer.
    std::complex<double> fourier_integral(double u0, double u1, long k) const {
        using cd = std::complex<double>;
        const cd I(0.0, 1.0);
        auto int_exp = [&](double w) -> cd {
            // integral of e^{iwu} over [u0, u1]
            if (std::fabs(w) < 1e-12) {
                // expand to first order: (u1-u0) + iw(u1^2-u0^2)/2
                return cd(u1 - u0, 0.0) + I * w * 0.5 * (u1 * u1 - u0 * u0);
            }
            return (std::exp(I * w * u1) - std::exp(I * w * u0)) / (I * w);
        };
        auto int_u_exp = [&](double w) -> cd {
            // integral of u e^{iwu} over [u0, u1]
            if (std::fabs(w) < 1e-12) {
                return cd(0.5 * (u1 * u1 - u0 * u0), 0.0) +
                       I * w * (u1 * u1 * u1 - u0 * u0 * u0) / 3.0;
            }
            const cd iw = I * w;
            return (std::exp(iw * u1) * (u1 - 1.0 / iw) - std::exp(iw * u0) * (u0 - 1.0 / iw)) / iw;
        };
        if (kind == Kind::poly) {
            return c0 * int_exp(-static_cast<double>(k)) + c1 * int_u_exp(-static_cast<double>(k));
        }
        // amp sin(f u + p) e^{-iku} = amp/(2i) [ e^{ip} e^{i(f-k)u} - e^{-ip} e^{-i(f+k)u} ]
        const cd eip = std::exp(I * phase);
        const cd term1 = eip * int_exp(freq - static_cast<double>(k));
        const cd term2 = std::conj(eip) * int_exp(-(freq + static_cast<double>(k)));
        return amp * (term1 - term2) / (2.0 * I);
    }
};

/// Separable product term fx(x) * fy(y).
struct SeparableTerm {
    AxisFactor fx;
    AxisFactor fy;
    double operator()(double x, double y) const { return fx(x) * fy(y); }
};

/// Axis-aligned cell [x0,x1) x [y0,y1) within [0,2*pi)^2 carrying its
/// evaluator: a sum of separable closed-form terms, or an opaque analytic
/// callable (permitted only for full-period smooth functions, where the
/// lattice rule integrates it).
struct Cell {
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    std::vector<SeparableTerm> terms;
    std::function<double(double, double)> analytic;

    bool closed_form() const { return !terms.empty() || !analytic; }

    bool contains(double x, double y) const {
        return x >= x0 && x < x1 && y >= y0 && y < y1;
    }

    double eval(double x, double y) const {
        if (analytic) return analytic(x, y);
        double v = 0;
        for (const auto& t : terms) v += t(x, y);
        return v;
    }
};

/// A 2*pi-biperiodic real function. Representations:
///   - piecewise-analytic: disjoint cells with closed-form (or opaque smooth)
///     evaluators, zero outside the listed cells;
///   - grid samples on a uniform 2^p x 2^p lattice over [0,2*pi)^2, evaluated
///     off-lattice by bilinear interpolation.
class PeriodicFunction2D {
  public:
    static PeriodicFunction2D from_cells(std::vector<Cell> cells) {
        PeriodicFunction2D f;
        f.cells_ = std::move(cells);
        f.validate_cells();
        f.build_slab_index();
        return f;
    }

    /// Full-period smooth function given by an opaque callable; represented as
    /// a single cell covering [0,2*pi)^2.
    static PeriodicFunction2D smooth(std::function<double(double, double)> fn) {
        Cell c;
        c.x0 = 0;
        c.x1 = two_pi;
        c.y0 = 0;
        c.y1 = two_pi;
        c.analytic = std::move(fn);
        return from_cells({std::move(c)});
    }

    /// Full-period function given by closed-form separable terms.
    static PeriodicFunction2D separable(std::vector<SeparableTerm> terms) {
        Cell c;
        c.x0 = 0;
        c.x1 = two_pi;
        c.y0 = 0;
        c.y1 = two_pi;
        c.terms = std::move(terms);
        return from_cells({std::move(c)});
    }

    static PeriodicFunction2D from_grid(std::size_t log2_size, std::vector<double> samples) {
        PeriodicFunction2D f;
        const std::size_t n = std::size_t{1} << log2_size;
        if (samples.size() != n * n)
            throw std::invalid_argument("PeriodicFunction2D: grid size mismatch");
        f.grid_size_ = n;
        f.grid_ = std::move(samples);
        return f;
    }

    bool is_grid() const { return grid_size_ != 0; }
    bool is_piecewise() const { return grid_size_ == 0; }
    /// True when every cell evaluator is closed-form (no opaque callable).
    bool has_closed_form_cells() const {
        if (!is_piecewise()) return false;
        for (const auto& c : cells_)
            if (c.analytic) return false;
        return true;
    }

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t grid_size() const { return grid_size_; }

    double operator()(double x, double y) const {
        x = wrap_angle(x);
        y = wrap_angle(y);
        if (is_grid()) {
            const double h = two_pi / static_cast<double>(grid_size_);
            const double fx = x / h, fy = y / h;
            const std::size_t i0 = static_cast<std::size_t>(fx) % grid_size_;
            const std::size_t j0 = static_cast<std::size_t>(fy) % grid_size_;
            const std::size_t i1 = (i0 + 1) % grid_size_;
            const std::size_t j1 = (j0 + 1) % grid_size_;
            const double tx = fx - std::floor(fx), ty = fy - std::floor(fy);
            const double v00 = grid_[i0 * grid_size_ + j0], v10 = grid_[i1 * grid_size_ + j0];
            const double v01 = grid_[i0 * grid_size_ + j1], v11 = grid_[i1 * grid_size_ + j1];
            return (1 - tx) * ((1 - ty) * v00 + ty * v01) + tx * ((1 - ty) * v10 + ty * v11);
        }
        if (const Cell* c = find_cell(x, y)) return c->eval(x, y);
        return 0.0;
    }

    /// Distinct cell x-edges (resp. y-edges), used to split quadrature panels
    /// so none straddles a discontinuity.
    std::vector<double> x_breaks() const {
        std::vector<double> b;
        for (const auto& c : cells_) {
            b.push_back(c.x0);
            b.push_back(c.x1);
        }
        return dedup(std::move(b));
    }
    std::vector<double> y_breaks() const {
        std::vector<double> b;
        for (const auto& c : cells_) {
            b.push_back(c.y0);
            b.push_back(c.y1);
        }
        return dedup(std::move(b));
    }

  private:
    std::vector<Cell> cells_;
    std::size_t grid_size_ = 0;
    std::vector<double> grid_;
    // x-slab index: sorted distinct x0 boundaries with cell lists per slab
    std::vector<double> slab_x_;
    std::vector<std::vector<std::size_t>> slab_cells_;

    static std::vector<double> dedup(std::vector<double> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end(),
                            [](double a, double b) { return std::fabs(a - b) < 1e-13; }),
                v.end());
        return v;
    }

    void validate_cells() {
        for (const auto& c : cells_) {
            if (!(c.x0 < c.x1) || !(c.y0 < c.y1))
                throw std::invalid_argument("PeriodicFunction2D: degenerate cell");
            if (c.x0 < -1e-12 || c.x1 > two_pi + 1e-12 || c.y0 < -1e-12 || c.y1 > two_pi + 1e-12)
                throw std::invalid_argument("PeriodicFunction2D: cell outside [0,2*pi)^2");
        }
        // pairwise disjointness, sorted sweep over x
        std::vector<std::size_t> idx(cells_.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return cells_[a].x0 < cells_[b].x0; });
        for (std::size_t a = 0; a < idx.size(); ++a) {
            const Cell& ca = cells_[idx[a]];
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
                const Cell& cb = cells_[idx[b]];
                if (cb.x0 >= ca.x1 - 1e-15) break;
                const bool y_overlap = ca.y0 < cb.y1 - 1e-15 && cb.y0 < ca.y1 - 1e-15;
                if (y_overlap)
                    throw std::invalid_argument("PeriodicFunction2D: overlapping cells");
            }
        }
    }

    void build_slab_index() {
        if (cells_.size() <= 8) return;  // linear scan is fine for few cells
        slab_x_ = x_breaks();
        slab_cells_.assign(slab_x_.size() > 0 ? slab_x_.size() - 1 : 0, {});
        for (std::size_t ci = 0; ci < cells_.size(); ++ci) {
            const Cell& c = cells_[ci];
            auto lo = std::lower_bound(slab_x_.begin(), slab_x_.end(), c.x0 - 1e-13) -
                      slab_x_.begin();
            for (std::size_t s = static_cast<std::size_t>(lo);
                 s + 1 < slab_x_.size() && slab_x_[s] < c.x1 - 1e-13; ++s)
                slab_cells_[s].push_back(ci);
        }
    }

    const Cell* find_cell(double x, double y) const {
        if (!slab_x_.empty()) {
            auto it = std::upper_bound(slab_x_.begin(), slab_x_.end(), x);
            if (it == slab_x_.begin()) return nullptr;
            const std::size_t s = static_cast<std::size_t>(it - slab_x_.begin()) - 1;
            if (s >= slab_cells_.size()) return nullptr;
            for (std::size_t ci : slab_cells_[s])
                if (cells_[ci].contains(x, y)) return &cells_[ci];
            return nullptr;
        }
        for (const auto& c : cells_)
            if (c.contains(x, y)) return &c;
        return nullptr;
    }
};

}  // namespace cesaro2d
