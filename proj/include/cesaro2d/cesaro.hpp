#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cesaro2d/quadrature.hpp"

namespace cesaro2d {

/// Pair of summability orders (alpha, beta); the means computed throughout are
/// the negative-order means sigma^(-alpha,-beta). Valid range: alpha, beta in
/// [0, 1) with alpha + beta < 1. Zero is admitted as the degenerate order at
/// which the mean collapses to the rectangular partial sum.
struct CesaroOrder {
    double alpha;
    double beta;

    CesaroOrder(double a, double b) : alpha(a), beta(b) {
        if (!(a >= 0.0) || !(a < 1.0) || !(b >= 0.0) || !(b < 1.0))
            throw std::domain_error("CesaroOrder: alpha, beta must lie in [0, 1)");
        if (!(a + b < 1.0))
            throw std::domain_error("CesaroOrder: alpha + beta must be < 1");
    }
};

/// Prefix A_0^order .. A_n^order of the fractional binomial coefficients.
struct CoeffTable {
    double order = 0.0;
    std::vector<double> values;

    double operator[](std::size_t k) const { return values[k]; }
    std::size_t size() const { return values.size(); }
    double back() const { return values.back(); }
};

namespace detail {

// Multiplicative recurrence A_k = A_{k-1} (order + k)/k, accumulated in long
// double so the relative error stays below 1e-12 out to n = 1e6. Valid for
// any order > -2; the sign pattern flips once for order in (-2, -1].
inline CoeffTable coeff_prefix_any(double order, std::size_t n) {
    CoeffTable t;
    t.order = order;
    t.values.resize(n + 1);
    long double v = 1.0L;
    t.values[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        v *= (static_cast<long double>(order) + static_cast<long double>(k)) /
             static_cast<long double>(k);
        t.values[k] = static_cast<double>(v);
    }
    return t;
}

}  // namespace detail

/// A_0^order .. A_n^order for order > -1 (all values positive).
inline CoeffTable cesaro_coeff_prefix(double order, std::size_t n) {
    if (!(order > -1.0))
        throw std::domain_error("cesaro_coeff_prefix: order must be > -1");
    return detail::coeff_prefix_any(order, n);
}

/// Summation weights A_k^{a-1}, k = 0..n, for a kernel/mean of order a in (-1, 0].
/// These are the first differences of the order-a table; computed directly by
/// the recurrence at order a-1 (no cancellation).
inline CoeffTable cesaro_diff_weights(double neg_order, std::size_t n) {
    if (!(neg_order > -1.0) || !(neg_order <= 0.0))
        throw std::domain_error("cesaro_diff_weights: order must lie in (-1, 0]");
    return detail::coeff_prefix_any(neg_order - 1.0, n);
}

/// Dirichlet kernel D_n(u) = 1/2 + sum_{k=1}^n cos(ku), via the closed form
/// sin((n+1/2)u) / (2 sin(u/2)); the limit n + 1/2 applies at u = 0 (mod 2*pi).
inline double dirichlet_kernel(std::size_t n, double u) {
    const double s = std::sin(0.5 * u);
    if (std::fabs(s) < 1e-14) return static_cast<double>(n) + 0.5;
    return std::sin((static_cast<double>(n) + 0.5) * u) / (2.0 * s);
}

/// Cesaro kernel of order a in (-1, 0]:
///   K_n^a(u) = (1/A_n^a) sum_{k=0}^n A_{n-k}^{a-1} D_k(u).
/// At a = 0 the weights degenerate to a point mass and K equals D_n. This is
/// the exact finite sum (cost O(n)); phi_kernel below is the asymptotic
/// surrogate, kept separate as a diagnostic.
inline double cesaro_kernel(std::size_t n, double /*neg_order*/, double u,
                            const CoeffTable& diff_weights, double a_n) {
    double acc = 0;
    const double s = std::sin(0.5 * u);
    if (std::fabs(s) < 1e-14) {
        for (std::size_t k = 0; k <= n; ++k)
            acc += diff_weights[n - k] * (static_cast<double>(k) + 0.5);
    } else {
        const double inv2s = 1.0 / (2.0 * s);
        for (std::size_t k = 0; k <= n; ++k)
            acc += diff_weights[n - k] * std::sin((static_cast<double>(k) + 0.5) * u);
        acc *= inv2s;
    }
    return acc / a_n;
}

inline double cesaro_kernel(std::size_t n, double neg_order, double u) {
    if (n < 1) throw std::domain_error("cesaro_kernel: need n >= 1");
    const CoeffTable w = cesaro_diff_weights(neg_order, n);
    const double a_n = detail::coeff_prefix_any(neg_order, n).back();
    return cesaro_kernel(n, neg_order, u, w, a_n);
}

/// Sweep evaluation sharing one weight table across many abscissae.
inline std::vector<double> cesaro_kernel_sweep(std::size_t n, double neg_order,
                                               const std::vector<double>& us) {
    if (n < 1) throw std::domain_error("cesaro_kernel_sweep: need n >= 1");
    const CoeffTable w = cesaro_diff_weights(neg_order, n);
    const double a_n = detail::coeff_prefix_any(neg_order, n).back();
    std::vector<double> out(us.size());
    for (std::size_t i = 0; i < us.size(); ++i)
        out[i] = cesaro_kernel(n, neg_order, us[i], w, a_n);
    return out;
}

/// Oscillatory surrogate
///   phi_n^a(u) = sin[(n+1/2+a/2)u - a*pi/2] / (A_n^a (2 sin u/2)^{1+a}),
/// defined for 0 < |u| <= pi and extended evenly to negative u (the kernel it
/// approximates is even).
inline double phi_kernel(std::size_t n, double neg_order, double u) {
    if (!(neg_order > -1.0) || !(neg_order < 0.0))
        throw std::domain_error("phi_kernel: order must lie in (-1, 0)");
    u = std::fabs(u);
    if (u < 1e-300 || !(u <= pi + 1e-12))
        throw std::domain_error("phi_kernel: u must satisfy 0 < |u| <= pi");
    const double a = neg_order;
    const double a_n = detail::coeff_prefix_any(a, n).back();
    const double num = std::sin((static_cast<double>(n) + 0.5 + 0.5 * a) * u - 0.5 * a * pi);
    const double den = a_n * std::pow(2.0 * std::sin(0.5 * u), 1.0 + a);
    return num / den;
}

/// Weight w_beta(t) = cos((1-beta)t/2) / (sin(t/2))^{1-beta} for t in (0, pi]
/// (accepted up to 2*pi, where sin(t/2) is still positive).
inline double w_weight(double beta, double t) {
    if (!(beta > 0.0) || !(beta < 1.0))
        throw std::domain_error("w_weight: beta must lie in (0, 1)");
    if (!(t > 0.0) || !(t < two_pi))
        throw std::domain_error("w_weight: t must lie in (0, 2*pi)");
    return std::cos(0.5 * (1.0 - beta) * t) / std::pow(std::sin(0.5 * t), 1.0 - beta);
}

}  // namespace cesaro2d
