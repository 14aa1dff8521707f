#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cesaro2d/cesaro.hpp"
#include "cesaro2d/lambda_sequence.hpp"

namespace cesaro2d {

using Interval = std::pair<double, double>;

/// Nonoverlapping interval collection from [0, 2*pi]; interiors disjoint,
/// shared endpoints allowed.
struct IntervalCollection {
    std::vector<Interval> intervals;

    void validate() const {
        for (const auto& [a, b] : intervals)
            if (!(a < b)) throw std::invalid_argument("IntervalCollection: empty interval");
        auto sorted = intervals;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 1; k < sorted.size(); ++k)
            if (sorted[k].first < sorted[k - 1].second - 1e-15)
                throw std::invalid_argument("IntervalCollection: overlapping intervals");
    }
};

/// f(I, y) = f(b, y) - f(a, y).
template <class F>
double increment_x(const F& f, Interval I, double y) {
    return f(I.second, y) - f(I.first, y);
}

/// f(x, J) = f(x, d) - f(x, c).
template <class F>
double increment_y(const F& f, double x, Interval J) {
    return f(x, J.second) - f(x, J.first);
}

/// Mixed second difference f(I, J) = f(a,c) - f(a,d) - f(b,c) + f(b,d).
template <class F>
double increment_mixed(const F& f, Interval I, Interval J) {
    const auto [a, b] = I;
    const auto [c, d] = J;
    return f(a, c) - f(a, d) - f(b, c) + f(b, d);
}

/// First difference in x at steps 2i*pi/m vs (2i+1)*pi/m (periodic extension).
template <class F>
double delta_row(const F& f, std::size_t i, std::size_t m, double x, double y) {
    const double step = pi / static_cast<double>(m);
    return f(x + 2.0 * i * step, y) - f(x + (2.0 * i + 1.0) * step, y);
}

template <class F>
double delta_col(const F& f, std::size_t j, std::size_t n, double x, double y) {
    const double step = pi / static_cast<double>(n);
    return f(x, y + 2.0 * j * step) - f(x, y + (2.0 * j + 1.0) * step);
}

/// Second mixed difference at the paired steps.
template <class F>
double delta_mixed(const F& f, std::size_t i, std::size_t j, std::size_t m, std::size_t n,
                   double x, double y) {
    const double sx = pi / static_cast<double>(m), sy = pi / static_cast<double>(n);
    const double x0 = x + 2.0 * i * sx, x1 = x + (2.0 * i + 1.0) * sx;
    const double y0 = y + 2.0 * j * sy, y1 = y + (2.0 * j + 1.0) * sy;
    return f(x0, y0) - f(x1, y0) - f(x0, y1) + f(x1, y1);
}

enum class VariationMode { exact, heuristic };

struct WitnessEntry {
    double a = 0, b = 0;          // interval endpoints along the varied axis
    std::size_t lambda_index = 0;  // 1-based
    double increment = 0;          // |f(I, y)| (or |f(x, J)|)
};

struct MixedWitnessEntry {
    double xa = 0, xb = 0, ya = 0, yb = 0;
    std::size_t lambda_i = 0, lambda_j = 0;  // 1-based
    double increment = 0;                     // |f(I, J)|
};

/// Result of a variation functional. Exact mode is the grid-restricted
/// supremum; heuristic mode is a certified lower bound (its witness is one
/// admissible collection). The witness re-evaluates to `value` exactly.
struct VariationResult {
    double value = 0;
    VariationMode mode = VariationMode::exact;
    double fixed_coord = 0;  // maximizing y (V1) or x (V2); unused for mixed
    std::vector<WitnessEntry> witness;
    std::vector<MixedWitnessEntry> witness_mixed;

    double re_evaluate(const LambdaSequence& lambda) const {
        double acc = 0;
        for (const auto& w : witness) acc += w.increment / lambda.term(w.lambda_index);
        for (const auto& w : witness_mixed)
            acc += w.increment / (lambda.term(w.lambda_i) * lambda.term(w.lambda_j));
        return acc;
    }
};

namespace detail {

inline void check_grid(const std::vector<double>& grid, const char* who) {
    for (std::size_t k = 1; k < grid.size(); ++k)
        if (!(grid[k] > grid[k - 1]))
            throw std::invalid_argument(std::string(who) + ": grid must be strictly increasing");
}

// Boundary chains of all partitions of the grid span into consecutive
// intervals. Restricting the supremum to these loses nothing: appending an
// interval to a collection never decreases the optimally-assigned sum, so
// every collection is dominated by a partition refining its gaps.
inline std::vector<std::vector<std::size_t>> boundary_chains(std::size_t k) {
    std::vector<std::vector<std::size_t>> chains;
    if (k < 2) return chains;
    const std::size_t interior = k - 2;
    chains.reserve(std::size_t{1} << interior);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << interior); ++mask) {
        std::vector<std::size_t> chain;
        chain.push_back(0);
        for (std::size_t t = 0; t < interior; ++t)
            if (mask & (std::uint32_t{1} << t)) chain.push_back(t + 1);
        chain.push_back(k - 1);
        chains.push_back(std::move(chain));
    }
    return chains;
}

struct Axis1DBest {
    double value = 0;
    std::vector<std::size_t> chain;       // grid indices of interval boundaries
    std::vector<std::size_t> order;       // positions into the chain's intervals, value-descending
};

// Exact 1D optimum over partitions with decreasing-rearrangement assignment
// (rearrangement-optimal for increasing lambda).
template <class GetV>
Axis1DBest axis_exact(const GetV& v, std::size_t k, const std::vector<double>& lam) {
    Axis1DBest best;
    const auto chains = boundary_chains(k);
    std::vector<double> inc;
    std::vector<std::size_t> ord;
    for (const auto& chain : chains) {
        const std::size_t r = chain.size() - 1;
        inc.resize(r);
        ord.resize(r);
        for (std::size_t t = 0; t < r; ++t) inc[t] = std::fabs(v(chain[t + 1]) - v(chain[t]));
        std::iota(ord.begin(), ord.end(), std::size_t{0});
        std::sort(ord.begin(), ord.end(),
                  [&](std::size_t p, std::size_t q) { return inc[p] > inc[q]; });
        double val = 0;
        for (std::size_t t = 0; t < r; ++t) val += inc[ord[t]] / lam[t];
        if (val > best.value) {
            best.value = val;
            best.chain = chain;
            best.order = ord;
        }
    }
    return best;
}

// Heuristic: the alternating local-extrema chain; its monotone-run increments,
// assigned in decreasing order, give one admissible collection (a certified
// lower bound).
template <class GetV>
Axis1DBest axis_heuristic(const GetV& v, std::size_t k, const std::vector<double>& lam) {
    Axis1DBest best;
    if (k < 2) return best;
    std::vector<std::size_t> chain;
    chain.push_back(0);
    int dir = 0;
    for (std::size_t t = 1; t < k; ++t) {
        const double d = v(t) - v(chain.back());
        if (d == 0) continue;
        const int nd = d > 0 ? 1 : -1;
        if (dir == 0 || nd == dir) {
            if (chain.size() > 1 && dir == nd) chain.back() = t;
            else chain.push_back(t);
        } else {
            chain.push_back(t);
        }
        dir = nd;
    }
    if (chain.size() < 2) return best;
    const std::size_t r = chain.size() - 1;
    std::vector<double> inc(r);
    for (std::size_t t = 0; t < r; ++t) inc[t] = std::fabs(v(chain[t + 1]) - v(chain[t]));
    best.order.resize(r);
    std::iota(best.order.begin(), best.order.end(), std::size_t{0});
    std::sort(best.order.begin(), best.order.end(),
              [&](std::size_t p, std::size_t q) { return inc[p] > inc[q]; });
    for (std::size_t t = 0; t < r; ++t) best.value += inc[best.order[t]] / lam[t];
    best.chain = std::move(chain);
    return best;
}

template <class F>
VariationResult axis_variation(const F& f, const LambdaSequence& lambda,
                               const std::vector<double>& var_grid,
                               const std::vector<double>& fix_grid, VariationMode mode,
                               bool vary_x) {
    check_grid(var_grid, "lambda_variation");
    check_grid(fix_grid, "lambda_variation");
    if (mode == VariationMode::exact && var_grid.size() > 16)
        throw std::invalid_argument(
            "lambda_variation: exact mode is limited to grids of <= 16 points");
    VariationResult res;
    res.mode = mode;
    if (var_grid.size() < 2 || fix_grid.empty()) return res;
    const std::vector<double> lam = lambda.prefix(var_grid.size() - 1);

    Axis1DBest best;
    double best_fixed = fix_grid.front();
    for (double c : fix_grid) {
        auto v = [&](std::size_t t) {
            return vary_x ? f(var_grid[t], c) : f(c, var_grid[t]);
        };
        Axis1DBest cand = mode == VariationMode::exact
                              ? axis_exact(v, var_grid.size(), lam)
                              : axis_heuristic(v, var_grid.size(), lam);
        if (cand.value > best.value) {
            best = std::move(cand);
            best_fixed = c;
        }
    }
    res.value = best.value;
    res.fixed_coord = best_fixed;
    if (best.value > 0) {
        auto v = [&](std::size_t t) {
            return vary_x ? f(var_grid[t], best_fixed) : f(best_fixed, var_grid[t]);
        };
        for (std::size_t t = 0; t < best.order.size(); ++t) {
            const std::size_t p = best.order[t];
            WitnessEntry w;
            w.a = var_grid[best.chain[p]];
            w.b = var_grid[best.chain[p + 1]];
            w.lambda_index = t + 1;
            w.increment = std::fabs(v(best.chain[p + 1]) - v(best.chain[p]));
            res.witness.push_back(w);
        }
    }
    return res;
}

}  // namespace detail

/// Lambda V_1(f) = sup_y sup_E sum_i |f(I_i, y)| / lambda_i, restricted to
/// interval endpoints in x_grid and y in y_grid.
template <class F>
VariationResult lambda_variation_1(const F& f, const LambdaSequence& lambda,
                                   const std::vector<double>& x_grid,
                                   const std::vector<double>& y_grid, VariationMode mode) {
    return detail::axis_variation(f, lambda, x_grid, y_grid, mode, /*vary_x=*/true);
}

/// Lambda V_2(f): roles of x and y swapped.
template <class F>
VariationResult lambda_variation_2(const F& f, const LambdaSequence& lambda,
                                   const std::vector<double>& x_grid,
                                   const std::vector<double>& y_grid, VariationMode mode) {
    return detail::axis_variation(f, lambda, y_grid, x_grid, mode, /*vary_x=*/false);
}

namespace detail {

// Exact assignment of the nonnegative matrix a (rows x cols) to weight
// products w_i v_j with w, v positive decreasing: enumerate permutations of
// the smaller side; for a fixed row order the optimal column order sorts
// column masses, which is exact by rearrangement.
struct MixedAssignment {
    double value = 0;
    std::vector<std::size_t> row_order;  // row_order[pos] = matrix row at weight pos
    std::vector<std::size_t> col_order;
};

inline MixedAssignment assign_mixed(const std::vector<std::vector<double>>& a,
                                    const std::vector<double>& w,
                                    const std::vector<double>& v) {
    const std::size_t r = a.size(), c = a.empty() ? 0 : a[0].size();
    MixedAssignment best;
    if (r == 0 || c == 0) return best;
    const bool flip = c < r;
    const std::size_t np = flip ? c : r;   // permuted side
    const std::size_t ns = flip ? r : c;   // sorted side
    std::vector<std::size_t> perm(np);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<double> mass(ns);
    std::vector<std::size_t> ord(ns);
    const auto& wp = flip ? v : w;
    const auto& ws = flip ? w : v;
    do {
        std::fill(mass.begin(), mass.end(), 0.0);
        for (std::size_t p = 0; p < np; ++p)
            for (std::size_t s = 0; s < ns; ++s)
                mass[s] += wp[p] * (flip ? a[s][perm[p]] : a[perm[p]][s]);
        std::iota(ord.begin(), ord.end(), std::size_t{0});
        std::sort(ord.begin(), ord.end(),
                  [&](std::size_t p, std::size_t q) { return mass[p] > mass[q]; });
        double val = 0;
        for (std::size_t s = 0; s < ns; ++s) val += ws[s] * mass[ord[s]];
        if (val > best.value) {
            best.value = val;
            best.row_order = flip ? ord : perm;
            best.col_order = flip ? perm : ord;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace detail

/// Lambda V_{1,2}(f) = sup_{E,F} sum_{i,j} |f(I_i, J_j)| / (lambda_i lambda_j),
/// exact enumeration over partition pairs; both grids capped at 8 points.
template <class F>
VariationResult lambda_variation_mixed(const F& f, const LambdaSequence& lambda,
                                       const std::vector<double>& x_grid,
                                       const std::vector<double>& y_grid) {
    detail::check_grid(x_grid, "lambda_variation_mixed");
    detail::check_grid(y_grid, "lambda_variation_mixed");
    if (x_grid.size() > 8 || y_grid.size() > 8)
        throw std::invalid_argument("lambda_variation_mixed: grids are limited to 8 points");
    VariationResult res;
    res.mode = VariationMode::exact;
    if (x_grid.size() < 2 || y_grid.size() < 2) return res;

    const std::size_t kx = x_grid.size(), ky = y_grid.size();
    std::vector<double> corner(kx * ky);
    for (std::size_t i = 0; i < kx; ++i)
        for (std::size_t j = 0; j < ky; ++j) corner[i * ky + j] = f(x_grid[i], y_grid[j]);
    const auto lamv = lambda.prefix(std::max(kx, ky) - 1);
    std::vector<double> inv_lam(lamv.size());
    for (std::size_t t = 0; t < lamv.size(); ++t) inv_lam[t] = 1.0 / lamv[t];

    const auto xchains = detail::boundary_chains(kx);
    const auto ychains = detail::boundary_chains(ky);
    double best_val = 0;
    std::vector<std::size_t> bx, by;
    detail::MixedAssignment bass;
    std::vector<std::vector<double>> a;
    for (const auto& cx : xchains) {
        const std::size_t r = cx.size() - 1;
        for (const auto& cy : ychains) {
            const std::size_t c = cy.size() - 1;
            a.assign(r, std::vector<double>(c));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) {
                    const double v = corner[cx[i] * ky + cy[j]] -
                                     corner[cx[i] * ky + cy[j + 1]] -
                                     corner[cx[i + 1] * ky + cy[j]] +
                                     corner[cx[i + 1] * ky + cy[j + 1]];
                    a[i][j] = std::fabs(v);
                }
            auto asg = detail::assign_mixed(
                a, std::vector<double>(inv_lam.begin(), inv_lam.begin() + static_cast<long>(r)),
                std::vector<double>(inv_lam.begin(), inv_lam.begin() + static_cast<long>(c)));
            if (asg.value > best_val) {
                best_val = asg.value;
                bx = cx;
                by = cy;
                bass = std::move(asg);
            }
        }
    }
    res.value = best_val;
    if (best_val > 0) {
        for (std::size_t i = 0; i < bass.row_order.size(); ++i)
            for (std::size_t j = 0; j < bass.col_order.size(); ++j) {
                const std::size_t ri = bass.row_order[i], cj = bass.col_order[j];
                MixedWitnessEntry w;
                w.xa = x_grid[bx[ri]];
                w.xb = x_grid[bx[ri + 1]];
                w.ya = y_grid[by[cj]];
                w.yb = y_grid[by[cj + 1]];
                w.lambda_i = i + 1;
                w.lambda_j = j + 1;
                w.increment = std::fabs(increment_mixed(f, {w.xa, w.xb}, {w.ya, w.yb}));
                res.witness_mixed.push_back(w);
            }
    }
    return res;
}

/// ||f||_C over the sample grid plus Lambda V_1 + Lambda V_2 (the norm whose
/// variation part is the partial Lambda-variation).
template <class F>
double plambda_norm(const F& f, const LambdaSequence& lambda, const std::vector<double>& x_grid,
                    const std::vector<double>& y_grid, VariationMode mode) {
    double sup = 0;
    for (double x : x_grid)
        for (double y : y_grid) sup = std::max(sup, std::fabs(f(x, y)));
    const double v1 = lambda_variation_1(f, lambda, x_grid, y_grid, mode).value;
    const double v2 = lambda_variation_2(f, lambda, x_grid, y_grid, mode).value;
    return sup + v1 + v2;
}

/// Outcome of the summability-condition check on a weight sequence.
struct ConditionReport {
    bool ratio_monotone = false;       // lambda_k / k^{1-s} nonincreasing up to horizon
    SeriesClass series_class = SeriesClass::unknown;  // sum lambda_k / k^{2-s}
    std::vector<std::size_t> checkpoints;
    std::vector<double> partial_sums;  // partial sums of lambda_k / k^{2-s}
    double last_ratio = 0;
};

/// Checks the two hypotheses on {lambda_k}: the ratio lambda_k / k^{1-(a+b)}
/// decreasing, and the class of sum lambda_k / k^{2-(a+b)} (analytic for
/// built-in families, `unknown` plus the partial-sum trace for custom ones).
inline ConditionReport theorem1_condition_check(const LambdaSequence& lambda,
                                                const CesaroOrder& order, std::size_t horizon) {
    if (horizon < 10)
        throw std::invalid_argument("theorem1_condition_check: need horizon >= 10");
    const double s = order.alpha + order.beta;
    ConditionReport rep;
    rep.series_class = lambda.series_class(s);
    rep.ratio_monotone = true;
    double prev_ratio = 0;
    double psum = 0;
    std::size_t next_checkpoint = 1;
    for (std::size_t k = 1; k <= horizon; ++k) {
        const double lk = lambda.term(k);
        const double ratio = lk / std::pow(static_cast<double>(k), 1.0 - s);
        if (k > 1 && ratio > prev_ratio * (1.0 + 1e-12)) rep.ratio_monotone = false;
        prev_ratio = ratio;
        psum += lk / std::pow(static_cast<double>(k), 2.0 - s);
        if (k == next_checkpoint || k == horizon) {
            rep.checkpoints.push_back(k);
            rep.partial_sums.push_back(psum);
            while (next_checkpoint <= k) next_checkpoint *= 2;
        }
    }
    rep.last_ratio = prev_ratio;
    return rep;
}

}  // namespace cesaro2d
