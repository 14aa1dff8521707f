#include <doctest.h>

#include <cmath>
#include <complex>
#include <sstream>

#include "cesaro2d/experiments.hpp"
#include "cesaro2d/fourier2d.hpp"
#include "cesaro2d/periodic_function.hpp"
#include "test_util.hpp"

using namespace cesaro2d;

namespace {

PeriodicFunction2D coscos() {
    return PeriodicFunction2D::separable(
        {{AxisFactor::sine(1.0, 1.0, pi / 2), AxisFactor::sine(1.0, 1.0, pi / 2)}});
}

PeriodicFunction2D full_quadrant_indicator() {
    Cell c;
    c.x0 = pi;
    c.x1 = two_pi;
    c.y0 = pi;
    c.y1 = two_pi;
    c.terms.push_back({AxisFactor::constant(1.0), AxisFactor::constant(1.0)});
    return PeriodicFunction2D::from_cells({c});
}

}  // namespace

TEST_SUITE_BEGIN("fourier2d");

TEST_CASE("coefficients: cos x cos y has the four quarter coefficients") {
    const CoefficientGrid g = compute_coefficients(coscos(), 3, 3, 16);
    for (long m = -3; m <= 3; ++m)
        for (long n = -3; n <= 3; ++n) {
            const double expected = (std::labs(m) == 1 && std::labs(n) == 1) ? 0.25 : 0.0;
            CHECK(std::abs(g.at(m, n) - std::complex<double>(expected, 0.0)) <= 1e-10);
        }
}

TEST_CASE("coefficients: constant function") {
    const auto one = PeriodicFunction2D::separable(
        {{AxisFactor::constant(1.0), AxisFactor::constant(1.0)}});
    const CoefficientGrid g = compute_coefficients(one, 2, 2, 16);
    CHECK(std::abs(g.at(0, 0) - std::complex<double>(1.0, 0.0)) <= 1e-12);
    CHECK(std::abs(g.at(1, 0)) <= 1e-12);
    CHECK(std::abs(g.at(2, -2)) <= 1e-12);
}

TEST_CASE("coefficients: sin x is odd, fhat(±1, 0) = ∓i/2") {
    const auto f = PeriodicFunction2D::separable(
        {{AxisFactor::sine(1.0, 1.0, 0.0), AxisFactor::constant(1.0)}});
    const CoefficientGrid g = compute_coefficients(f, 2, 2, 16);
    CHECK(std::abs(g.at(1, 0) - std::complex<double>(0.0, -0.5)) <= 1e-10);
    CHECK(std::abs(g.at(-1, 0) - std::complex<double>(0.0, 0.5)) <= 1e-10);
}

TEST_CASE("coefficients: lattice rule on an opaque smooth function matches") {
    const auto f = PeriodicFunction2D::smooth(
        [](double x, double y) { return std::cos(x) * std::cos(y); });
    const CoefficientGrid g = compute_coefficients(f, 4, 4, 64);
    CHECK(std::abs(g.at(1, 1) - std::complex<double>(0.25, 0.0)) <= 1e-12);
    CHECK(std::abs(g.at(2, 1)) <= 1e-12);
    CHECK(g.quadrature_points == 64);
}

TEST_CASE("coefficients: refuses an aliasing-prone resolution") {
    const auto f = PeriodicFunction2D::smooth([](double, double) { return 1.0; });
    CHECK_THROWS_AS(compute_coefficients(f, 4, 4, 8), std::invalid_argument);
}

TEST_CASE("coefficients: conjugate symmetry for a real function") {
    const PeriodicFunction2D f = random_trig_polynomial(5, 42);
    const CoefficientGrid g = compute_coefficients(f, 6, 6, 32);
    for (long m = -6; m <= 6; ++m)
        for (long n = -6; n <= 6; ++n)
            CHECK(std::abs(g.at(-m, -n) - std::conj(g.at(m, n))) <= 1e-10);
}

TEST_CASE("coefficient csv dump has the fixed schema") {
    const CoefficientGrid g = compute_coefficients(coscos(), 1, 1, 8);
    std::ostringstream os;
    g.to_csv(os);
    CHECK(os.str().rfind("m,n,re,im\n", 0) == 0);
}

TEST_CASE("partial sum reproduces trig polynomials and drops excluded modes") {
    const CoefficientGrid g = compute_coefficients(coscos(), 3, 3, 16);
    CHECK(partial_sum(g, 1, 1, 0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(partial_sum(g, 3, 3, 0.7, 1.1) ==
          doctest::Approx(std::cos(0.7) * std::cos(1.1)).epsilon(1e-12));

    const auto one = PeriodicFunction2D::separable(
        {{AxisFactor::constant(1.0), AxisFactor::constant(1.0)}});
    const CoefficientGrid g1 = compute_coefficients(one, 2, 2, 16);
    CHECK(partial_sum(g1, 2, 2, 2.0, 3.0) == doctest::Approx(1.0).epsilon(1e-12));

    const auto s3 = PeriodicFunction2D::separable(
        {{AxisFactor::sine(1.0, 3.0, 0.0), AxisFactor::constant(1.0)}});
    const CoefficientGrid g3 = compute_coefficients(s3, 4, 4, 32);
    for (double x : {0.0, 0.5, 1.7, 4.0})
        CHECK(std::fabs(partial_sum(g3, 2, 2, x, 1.0)) <= 1e-12);

    CHECK_THROWS_AS(partial_sum(g3, 5, 2, 0.0, 0.0), std::out_of_range);
}

TEST_CASE("direct mean: constant reproduced for every order") {
    const auto one = PeriodicFunction2D::separable(
        {{AxisFactor::constant(1.0), AxisFactor::constant(1.0)}});
    const CoefficientGrid g = compute_coefficients(one, 8, 8, 64);
    for (double a : {0.0, 0.2, 0.45})
        for (double b : {0.0, 0.3}) {
            const double v = cesaro_mean_direct(g, 8, 6, CesaroOrder(a, b), 1.3, 2.2);
            CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
        }
}

TEST_CASE("direct mean: cos x picks up the telescoped weight factor") {
    const auto f = PeriodicFunction2D::separable(
        {{AxisFactor::sine(1.0, 1.0, pi / 2), AxisFactor::constant(1.0)}});
    const std::size_t m = 9;
    const double alpha = 0.3;
    const CoefficientGrid g = compute_coefficients(f, m, m, 64);
    // expected factor 1 - A_m^{-alpha-1} / A_m^{-alpha}, with A_m^{-alpha-1}
    // taken from the Pascal difference of the order -alpha table
    const CoeffTable t = cesaro_coeff_prefix(-alpha, m);
    const double am1 = t[m] - t[m - 1];
    const double factor = 1.0 - am1 / t[m];
    for (double x : {0.0, 0.9, 2.8}) {
        const double v = cesaro_mean_direct(g, m, 4, CesaroOrder(alpha, 0.2), x, 0.4);
        CHECK(v == doctest::Approx(std::cos(x) * factor).epsilon(1e-11));
    }
}

TEST_CASE("direct mean: separable product factorises at the origin") {
    const std::size_t m = 7, n = 5;
    const double alpha = 0.25, beta = 0.35;
    const CoefficientGrid g = compute_coefficients(coscos(), m, n, 64);
    const CoeffTable tx = cesaro_coeff_prefix(-alpha, m);
    const CoeffTable ty = cesaro_coeff_prefix(-beta, n);
    const double fx = 1.0 - (tx[m] - tx[m - 1]) / tx[m];
    const double fy = 1.0 - (ty[n] - ty[n - 1]) / ty[n];
    CHECK(cesaro_mean_direct(g, m, n, CesaroOrder(alpha, beta), 0.0, 0.0) ==
          doctest::Approx(fx * fy).epsilon(1e-11));
}

TEST_CASE("direct mean: zero order equals the partial sum") {
    const PeriodicFunction2D f = random_trig_polynomial(4, 9);
    const CoefficientGrid g = compute_coefficients(f, 6, 6, 32);
    for (double x : {0.3, 2.9})
        for (double y : {1.1, 5.0})
            CHECK(cesaro_mean_direct(g, 6, 6, CesaroOrder(0.0, 0.0), x, y) ==
                  doctest::Approx(partial_sum(g, 6, 6, x, y)).epsilon(1e-12));
}

TEST_CASE("direct mean: linear in the coefficients") {
    const CoefficientGrid ga = compute_coefficients(random_trig_polynomial(4, 5), 5, 5, 32);
    const CoefficientGrid gb = compute_coefficients(random_trig_polynomial(4, 6), 5, 5, 32);
    CoefficientGrid gc = ga;
    for (std::size_t i = 0; i < gc.coeffs.size(); ++i)
        gc.coeffs[i] = 2.0 * ga.coeffs[i] - 0.75 * gb.coeffs[i];
    const CesaroOrder ord(0.3, 0.25);
    const double x = 1.9, y = 0.6;
    const double va = cesaro_mean_direct(ga, 5, 5, ord, x, y);
    const double vb = cesaro_mean_direct(gb, 5, 5, ord, x, y);
    const double vc = cesaro_mean_direct(gc, 5, 5, ord, x, y);
    CHECK(vc == doctest::Approx(2.0 * va - 0.75 * vb).epsilon(1e-10));
}

TEST_CASE("direct mean: translation equivariance through coefficient phases") {
    const PeriodicFunction2D f = random_trig_polynomial(4, 11);
    const std::size_t m = 6;
    const CoefficientGrid g = compute_coefficients(f, m, m, 32);
    const double cx = 0.8, cy = -1.4;
    CoefficientGrid shifted = g;
    for (long p = -static_cast<long>(m); p <= static_cast<long>(m); ++p)
        for (long q = -static_cast<long>(m); q <= static_cast<long>(m); ++q)
            shifted.coeffs[g.idx(p, q)] =
                g.at(p, q) * std::exp(std::complex<double>(0.0, p * cx + q * cy));
    const CesaroOrder ord(0.2, 0.2);
    for (double x : {0.4, 3.3}) {
        const double lhs = cesaro_mean_direct(shifted, m, m, ord, x, 1.0);
        const double rhs = cesaro_mean_direct(g, m, m, ord, x + cx, 1.0 + cy);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
    }
}

TEST_CASE("convolution mean: constant reproduced within 1e-8") {
    const auto one = PeriodicFunction2D::separable(
        {{AxisFactor::constant(1.0), AxisFactor::constant(1.0)}});
    const double v = cesaro_mean_convolution(one, 6, 6, CesaroOrder(0.3, 0.2), 1.0, 2.0);
    CHECK(v == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("convolution mean: agrees with the direct route on trig polynomials") {
    for (std::uint64_t seed : {std::uint64_t{3}, std::uint64_t{4}}) {
        const PeriodicFunction2D f = random_trig_polynomial(4, seed);
        const CoefficientGrid g = compute_coefficients(f, 8, 8, 64);
        for (const CesaroOrder& ord : {CesaroOrder(0.15, 0.25), CesaroOrder(0.45, 0.1)}) {
            const double x = 1.1, y = 4.2;
            const double direct = cesaro_mean_direct(g, 8, 7, ord, x, y);
            const double conv = cesaro_mean_convolution(f, 8, 7, ord, x, y);
            CHECK(conv == doctest::Approx(direct).epsilon(1e-6));
        }
    }
}

TEST_CASE("convolution mean: refuses an under-resolved panel width") {
    const auto one = PeriodicFunction2D::separable(
        {{AxisFactor::constant(1.0), AxisFactor::constant(1.0)}});
    QuadConfig q;
    q.panel_width = pi;  // far wider than pi/(2*max(m,n))
    CHECK_THROWS_AS(cesaro_mean_convolution(one, 8, 8, CesaroOrder(0.2, 0.2), 0.0, 0.0, q),
                    std::invalid_argument);
}

TEST_CASE("quadrant limits: product indicator at the corner") {
    const PeriodicFunction2D f = full_quadrant_indicator();
    const QuadrantLimits q = quadrant_limits(f, pi, pi);
    CHECK(q.pp == doctest::Approx(1.0));
    CHECK(q.pm == doctest::Approx(0.0));
    CHECK(q.mp == doctest::Approx(0.0));
    CHECK(q.mm == doctest::Approx(0.0));
    CHECK(q.average() == doctest::Approx(0.25));
}

TEST_CASE("quadrant limits: continuous function gives four equal limits") {
    const PeriodicFunction2D f = coscos();
    const QuadrantLimits q = quadrant_limits(f, 1.0, 2.0);
    const double expected = std::cos(1.0) * std::cos(2.0);
    for (double v : {q.pp, q.pm, q.mp, q.mm}) CHECK(v == doctest::Approx(expected).epsilon(1e-8));
}

TEST_CASE("quadrant limits: f_N vanishes near the axes") {
    const CounterexampleSpec spec(33, LambdaSequence::harmonic(), CesaroOrder(0.2, 0.2));
    const PeriodicFunction2D f = fN_function(spec);
    const QuadrantLimits q = quadrant_limits(f, 0.0, 0.0);
    CHECK(q.pp == 0.0);
    CHECK(q.pm == 0.0);
    CHECK(q.mp == 0.0);
    CHECK(q.mm == 0.0);
}

TEST_CASE("quadrant limits: grid representation is refused") {
    std::vector<double> samples(16 * 16, 0.0);
    const PeriodicFunction2D f = PeriodicFunction2D::from_grid(4, samples);
    CHECK_THROWS_AS(quadrant_limits(f, 1.0, 1.0), UnsupportedRepresentationError);
}

TEST_CASE("periodic function: overlapping cells are rejected") {
    Cell a, b;
    a.x0 = 0;
    a.x1 = 2;
    a.y0 = 0;
    a.y1 = 2;
    a.terms.push_back({AxisFactor::constant(1.0), AxisFactor::constant(1.0)});
    b = a;
    b.x0 = 1;
    b.x1 = 3;
    CHECK_THROWS_AS(PeriodicFunction2D::from_cells({a, b}), std::invalid_argument);
}

TEST_CASE("cesaro order: validation") {
    CHECK_THROWS_AS(CesaroOrder(0.6, 0.5), std::domain_error);   // sum >= 1
    CHECK_THROWS_AS(CesaroOrder(-0.1, 0.2), std::domain_error);
    CHECK_THROWS_AS(CesaroOrder(1.0, 0.0), std::domain_error);
    CHECK_NOTHROW(CesaroOrder(0.0, 0.0));  // degenerate partial-sum case
    CHECK_NOTHROW(CesaroOrder(0.45, 0.45));
}

TEST_CASE("quadrant limits: a non-settling oscillation raises the limit failure") {
    const auto f = PeriodicFunction2D::smooth([](double x, double) {
        const double d = std::fabs(x - 1.0);
        return d == 0.0 ? 0.0 : std::sin(1.0 / d);
    });
    CHECK_THROWS_AS(quadrant_limits(f, 1.0, 2.0), LimitFailureError);
}

TEST_CASE("coefficients: grid-sample representation uses its own lattice") {
    const std::size_t R = 32;
    std::vector<double> samples(R * R);
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < R; ++j)
            samples[i * R + j] = std::cos(two_pi * static_cast<double>(i) / R) *
                                 std::cos(two_pi * static_cast<double>(j) / R);
    const PeriodicFunction2D f = PeriodicFunction2D::from_grid(5, samples);
    const CoefficientGrid g = compute_coefficients(f, 4, 4, 0);
    CHECK(std::abs(g.at(1, 1) - std::complex<double>(0.25, 0.0)) <= 1e-12);
    CHECK(g.quadrature_points == R);
    // grid too coarse for the requested order
    CHECK_THROWS_AS(compute_coefficients(f, 16, 16, 0), std::invalid_argument);
}

TEST_CASE("convolution mean: panel splitting handles a discontinuous function") {
    // continuity point of the jump function: both routes converge to the same
    // value, the direct route from exact closed-form coefficients
    const PeriodicFunction2D f = full_quadrant_indicator();
    const CoefficientGrid g = compute_coefficients(f, 16, 16, 64);
    const CesaroOrder ord(0.2, 0.3);
    const double direct = cesaro_mean_direct(g, 16, 16, ord, 2.0, 2.0);
    const double conv = cesaro_mean_convolution(f, 16, 16, ord, 2.0, 2.0);
    CHECK(conv == doctest::Approx(direct).epsilon(1e-6));
}

TEST_CASE("periodic function: grid bilinear evaluation is periodic and total") {
    std::vector<double> samples(8 * 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            samples[i * 8 + j] = std::sin(two_pi * static_cast<double>(i) / 8.0);
    const PeriodicFunction2D f = PeriodicFunction2D::from_grid(3, samples);
    CHECK(f(0.0, 0.0) == doctest::Approx(0.0));
    CHECK(f(two_pi + 0.1, 0.5) == doctest::Approx(f(0.1, 0.5)));
    CHECK(f(-0.1, 0.5) == doctest::Approx(f(two_pi - 0.1, 0.5)));
}

TEST_SUITE_END();
