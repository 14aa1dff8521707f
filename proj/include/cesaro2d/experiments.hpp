#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cesaro2d/cesaro.hpp"
#include "cesaro2d/counterexample.hpp"
#include "cesaro2d/fourier2d.hpp"
#include "cesaro2d/lambda_sequence.hpp"
#include "cesaro2d/periodic_function.hpp"
#include "cesaro2d/report.hpp"
#include "cesaro2d/variation.hpp"

namespace cesaro2d {

/// Everything a scenario run depends on. The echo string round-trips through
/// parse_echo, so a report carries enough to reproduce itself.
struct ExperimentConfig {
    std::string scenario = "converge";
    double alpha = 0.2, beta = 0.2;
    std::string lambda_spec = "harmonic";
    std::string function_name = "one";
    double point_x = pi, point_y = pi;
    std::vector<std::size_t> n_list;
    std::vector<std::size_t> N_list;
    std::vector<double> x_grid, y_grid;
    std::size_t horizon = 100000;
    std::size_t j0 = 0;          // 0 = heuristic default
    std::size_t resolution = 0;  // 0 = 4 * max requested order
    int quad_nodes = 10;
    std::string mode = "auto";  // variation mode: auto|exact|heuristic
    std::string out_path, svg_path, dump_path;

    CesaroOrder order() const { return CesaroOrder(alpha, beta); }

    LambdaSequence lambda() const {
        const auto colon = lambda_spec.find(':');
        const std::string fam = lambda_spec.substr(0, colon);
        const std::string arg =
            colon == std::string::npos ? std::string() : lambda_spec.substr(colon + 1);
        if (fam == "harmonic") return LambdaSequence::harmonic();
        if (fam == "constant") return LambdaSequence::constant(arg.empty() ? 2.0 : std::stod(arg));
        if (fam == "power-log") {
            double eps = 0.0;
            if (arg.rfind("eps=", 0) == 0) eps = std::stod(arg.substr(4));
            else if (!arg.empty()) eps = std::stod(arg);
            return LambdaSequence::power_log(alpha + beta, eps);
        }
        throw std::invalid_argument("unknown lambda family: " + lambda_spec);
    }

    std::string echo() const {
        std::ostringstream os;
        os << "scenario=" << scenario << ";alpha=" << format_g17(alpha)
           << ";beta=" << format_g17(beta) << ";lambda=" << lambda_spec
           << ";function=" << function_name << ";point=" << format_g17(point_x) << ','
           << format_g17(point_y) << ";n-list=" << join(n_list) << ";N-list=" << join(N_list)
           << ";x-grid=" << join(x_grid) << ";y-grid=" << join(y_grid) << ";horizon=" << horizon
           << ";j0=" << j0 << ";resolution=" << resolution << ";quad-nodes=" << quad_nodes
           << ";mode=" << mode << ";out=" << out_path << ";svg=" << svg_path
           << ";dump=" << dump_path;
        return os.str();
    }

    static ExperimentConfig parse_echo(const std::string& s) {
        ExperimentConfig c;
        std::istringstream is(s);
        std::string item;
        while (std::getline(is, item, ';')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) continue;
            const std::string k = item.substr(0, eq), v = item.substr(eq + 1);
            if (k == "scenario") c.scenario = v;
            else if (k == "alpha") c.alpha = std::stod(v);
            else if (k == "beta") c.beta = std::stod(v);
            else if (k == "lambda") c.lambda_spec = v;
            else if (k == "function") c.function_name = v;
            else if (k == "point") {
                const auto comma = v.find(',');
                c.point_x = std::stod(v.substr(0, comma));
                c.point_y = std::stod(v.substr(comma + 1));
            } else if (k == "n-list") c.n_list = parse_sizes(v);
            else if (k == "N-list") c.N_list = parse_sizes(v);
            else if (k == "x-grid") c.x_grid = parse_doubles(v);
            else if (k == "y-grid") c.y_grid = parse_doubles(v);
            else if (k == "horizon") c.horizon = std::stoull(v);
            else if (k == "j0") c.j0 = std::stoull(v);
            else if (k == "resolution") c.resolution = std::stoull(v);
            else if (k == "quad-nodes") c.quad_nodes = std::stoi(v);
            else if (k == "mode") c.mode = v;
            else if (k == "out") c.out_path = v;
            else if (k == "svg") c.svg_path = v;
            else if (k == "dump") c.dump_path = v;
        }
        return c;
    }

    template <class T>
    static std::string join(const std::vector<T>& v) {
        std::ostringstream os;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ',';
            if constexpr (std::is_same_v<T, double>) os << format_g17(v[i]);
            else os << v[i];
        }
        return os.str();
    }
    static std::vector<std::size_t> parse_sizes(const std::string& s) {
        std::vector<std::size_t> out;
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ','))
            if (!tok.empty()) out.push_back(std::stoull(tok));
        return out;
    }
    static std::vector<double> parse_doubles(const std::string& s) {
        std::vector<double> out;
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ','))
            if (!tok.empty()) out.push_back(std::stod(tok));
        return out;
    }
};

namespace detail {

// Deterministic uniform doubles in [-1, 1]; engine output scaled by hand so
// the stream is identical across standard libraries.
class DetRng {
  public:
    explicit DetRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    double uniform_pm1() {
        return 2.0 * (static_cast<double>(next() >> 11) * 0x1.0p-53) - 1.0;
    }
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

  private:
    std::uint64_t state_;
    std::uint64_t next() {  // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

inline std::string builtin_param(const std::string& params, const std::string& key) {
    std::istringstream is(params);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.rfind(key + "=", 0) == 0) return tok.substr(key.size() + 1);
    }
    return {};
}

}  // namespace detail

/// Random real trigonometric polynomial of the given degree: a sparse sum of
/// cosine modes, each expanded into two separable sine-product terms so the
/// closed-form coefficient path applies.
inline PeriodicFunction2D random_trig_polynomial(int degree, std::uint64_t seed,
                                                 int n_modes = 12) {
    detail::DetRng rng(seed);
    std::vector<SeparableTerm> terms;
    for (int k = 0; k < n_modes; ++k) {
        const double p = static_cast<double>(static_cast<long>(rng.next_below(
                             static_cast<std::uint64_t>(2 * degree + 1))) - degree);
        const double q = static_cast<double>(static_cast<long>(rng.next_below(
                             static_cast<std::uint64_t>(2 * degree + 1))) - degree);
        const double amp = rng.uniform_pm1();
        const double phase = rng.uniform_pm1() * pi;
        // amp cos(px + qy + phase) = amp cos(px+phase) cos(qy) - amp sin(px+phase) sin(qy)
        SeparableTerm t1, t2;
        t1.fx = AxisFactor::sine(amp, p, phase + pi / 2);
        t1.fy = AxisFactor::sine(1.0, q, pi / 2);
        t2.fx = AxisFactor::sine(-amp, p, phase);
        t2.fy = AxisFactor::sine(1.0, q, 0.0);
        terms.push_back(t1);
        terms.push_back(t2);
    }
    return PeriodicFunction2D::separable(std::move(terms));
}

/// Named test functions. "fN:..." takes its weight sequence and order from the
/// surrounding config.
inline PeriodicFunction2D builtin_test_function(const std::string& spec_name,
                                                const CesaroOrder& order,
                                                const LambdaSequence& lambda) {
    const auto colon = spec_name.find(':');
    const std::string name = spec_name.substr(0, colon);
    const std::string params =
        colon == std::string::npos ? std::string() : spec_name.substr(colon + 1);

    if (name == "one")
        return PeriodicFunction2D::separable(
            {{AxisFactor::constant(1.0), AxisFactor::constant(1.0)}});
    if (name == "quadrant-jump") {
        // Product indicator supported on (pi, 2*pi - 1/2)^2. The second jump
        // line sits off the half-period mark: with support exactly (pi, 2*pi)
        // the symmetric means at (pi, pi) equal the quadrant average
        // identically and convergence trends degenerate to rounding noise.
        Cell c;
        c.x0 = pi;
        c.x1 = two_pi - 0.5;
        c.y0 = pi;
        c.y1 = two_pi - 0.5;
        c.terms.push_back({AxisFactor::constant(1.0), AxisFactor::constant(1.0)});
        return PeriodicFunction2D::from_cells({c});
    }
    if (name == "cos-cos")
        return PeriodicFunction2D::separable(
            {{AxisFactor::sine(1.0, 1.0, pi / 2), AxisFactor::sine(1.0, 1.0, pi / 2)}});
    if (name == "sin-x")
        return PeriodicFunction2D::separable(
            {{AxisFactor::sine(1.0, 1.0, 0.0), AxisFactor::constant(1.0)}});
    if (name == "sin-3x")
        return PeriodicFunction2D::separable(
            {{AxisFactor::sine(1.0, 3.0, 0.0), AxisFactor::constant(1.0)}});
    if (name == "sawtooth-sum")
        // (pi - x)/2 + (pi - y)/2: additive, bounded variation in each variable,
        // vanishing mixed increments.
        return PeriodicFunction2D::separable(
            {{AxisFactor::linear(pi / 2, -0.5), AxisFactor::constant(1.0)},
             {AxisFactor::constant(1.0), AxisFactor::linear(pi / 2, -0.5)}});
    if (name == "staircase") {
        // K unit-height squares along the diagonal: partial variations stay at
        // 2 for every K while the mixed variation grows like 4K.
        const std::string kv = detail::builtin_param(params, "K");
        const std::size_t k = kv.empty() ? 8 : std::stoull(kv);
        if (k < 1 || k > 4096) throw std::invalid_argument("staircase: K out of range");
        std::vector<Cell> cells;
        for (std::size_t s = 0; s < k; ++s) {
            Cell c;
            c.x0 = two_pi * static_cast<double>(s) / static_cast<double>(k);
            c.x1 = two_pi * static_cast<double>(s + 1) / static_cast<double>(k);
            c.y0 = c.x0;
            c.y1 = c.x1;
            c.terms.push_back({AxisFactor::constant(1.0), AxisFactor::constant(1.0)});
            cells.push_back(std::move(c));
        }
        return PeriodicFunction2D::from_cells(std::move(cells));
    }
    if (name == "fN") {
        const std::string nv = detail::builtin_param(params, "N");
        if (nv.empty()) throw std::invalid_argument("fN builtin requires N=<odd>");
        return fN_function(CounterexampleSpec(std::stoull(nv), lambda, order));
    }
    if (name == "random-trig") {
        const std::string dv = detail::builtin_param(params, "deg");
        const std::string sv = detail::builtin_param(params, "seed");
        return random_trig_polynomial(dv.empty() ? 8 : std::stoi(dv),
                                      sv.empty() ? 1 : std::stoull(sv));
    }
    throw std::invalid_argument("unknown test function: " + spec_name);
}

namespace detail {

class WallTimer {
  public:
    WallTimer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

inline void stamp(ExperimentReport& rep, const ExperimentConfig& config) {
    rep.metadata.emplace_back("config", config.echo());
    rep.metadata.emplace_back("tool", "cesaro2d");
    rep.metadata.emplace_back("format", "1");
}

}  // namespace detail

/// Convergence study: sigma_{n,n} at the configured point against the
/// quadrant-limit average, via the direct (coefficient) route.
inline ExperimentReport run_converge(const ExperimentConfig& config) {
    detail::WallTimer timer;
    const CesaroOrder order = config.order();
    const LambdaSequence lambda = config.lambda();
    const PeriodicFunction2D f = builtin_test_function(config.function_name, order, lambda);
    if (config.n_list.empty()) throw std::invalid_argument("run_converge: empty n-list");
    for (std::size_t i = 1; i < config.n_list.size(); ++i)
        if (config.n_list[i] <= config.n_list[i - 1])
            throw std::invalid_argument("run_converge: n-list must be strictly increasing");

    double reference = std::numeric_limits<double>::quiet_NaN();
    bool have_reference = true;
    try {
        reference = quadrant_limits(f, config.point_x, config.point_y).average();
    } catch (const std::runtime_error&) {
        have_reference = false;  // per-point failure: emit NaN rows, keep going
    }

    const std::size_t top = config.n_list.back();
    const std::size_t res = config.resolution ? config.resolution : 4 * top;
    const CoefficientGrid grid = compute_coefficients(f, top, top, res);

    ExperimentReport rep;
    detail::stamp(rep, config);
    rep.columns = {"n", "value", "reference", "abs_error"};
    for (std::size_t n : config.n_list) {
        const double v =
            cesaro_mean_direct(grid, n, n, order, config.point_x, config.point_y);
        rep.add_row({static_cast<double>(n), v, reference, std::fabs(v - reference)});
    }
    const double first = rep.rows.front()[3], last = rep.rows.back()[3];
    rep.verdicts.emplace_back("references_computed", have_reference);
    // trend holds when the error shrinks, or when the run sits at the
    // converged floor from the start
    rep.verdicts.emplace_back("errors_decreasing", have_reference && std::isfinite(last) &&
                                                       (last < first || last <= 1e-8));
    rep.wall_seconds = timer.seconds();
    return rep;
}

/// Divergence study: |sigma_{N,N} f_N (0,0)| against the lower-bound partial
/// sums, for each N in the list.
inline ExperimentReport run_diverge(const ExperimentConfig& config) {
    detail::WallTimer timer;
    const CesaroOrder order = config.order();
    const LambdaSequence lambda = config.lambda();
    if (config.N_list.empty()) throw std::invalid_argument("run_diverge: empty N-list");
    for (std::size_t i = 1; i < config.N_list.size(); ++i)
        if (config.N_list[i] <= config.N_list[i - 1])
            throw std::invalid_argument("run_diverge: N-list must be strictly increasing");

    SigmaQuad quad;
    quad.nodes = std::max(config.quad_nodes, 12);
    const std::size_t j0 =
        config.j0 ? config.j0
                  : default_j0(CounterexampleSpec(config.N_list.back(), lambda, order));

    ExperimentReport rep;
    detail::stamp(rep, config);
    rep.metadata.emplace_back("j0", std::to_string(j0));
    rep.columns = {"N", "sigma_abs", "lower_bound", "eq39_sum", "ratio"};
    for (std::size_t N : config.N_list) {
        const CounterexampleSpec spec(N, lambda, order);
        const SigmaResult sig = sigma_at_origin(spec, quad);
        const DivergenceBound lb = divergence_lower_bound(spec, j0);
        const double ratio = lb.value > 0 ? std::fabs(sig.value) / lb.value
                                          : std::numeric_limits<double>::quiet_NaN();
        rep.add_row({static_cast<double>(N), std::fabs(sig.value), lb.value, lb.eq39_sum, ratio});
    }
    double rmin = std::numeric_limits<double>::infinity(), rmax = 0;
    bool lb_increasing = true, eq39_increasing = true, ratios_finite = true;
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const double r = rep.rows[i][4];
        if (!std::isfinite(r)) {
            ratios_finite = false;
            continue;
        }
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
        if (i > 0) {
            lb_increasing = lb_increasing && rep.rows[i][2] > rep.rows[i - 1][2];
            eq39_increasing = eq39_increasing && rep.rows[i][3] > rep.rows[i - 1][3];
        }
    }
    const SeriesClass cls = lambda.series_class(order.alpha + order.beta);
    rep.metadata.emplace_back("series_class", cls == SeriesClass::converges ? "converges"
                                              : cls == SeriesClass::diverges ? "diverges"
                                                                             : "unknown");
    rep.verdicts.emplace_back("ratio_positive", ratios_finite && rmin > 0);
    rep.verdicts.emplace_back("ratio_band_4x", ratios_finite && rmax <= 4.0 * rmin);
    rep.verdicts.emplace_back("lower_bound_increasing", lb_increasing);
    rep.verdicts.emplace_back("eq39_increasing", eq39_increasing);
    rep.wall_seconds = timer.seconds();
    return rep;
}

/// Kernel diagnostics: the sup bound against 2n and the surrogate-residual
/// constant, per n.
inline ExperimentReport run_kernel_diagnostics(const ExperimentConfig& config) {
    detail::WallTimer timer;
    if (!(config.alpha > 0) || !(config.alpha < 1))
        throw std::invalid_argument("run_kernel_diagnostics: alpha must lie in (0,1)");
    if (config.n_list.empty())
        throw std::invalid_argument("run_kernel_diagnostics: empty n-list");
    ExperimentReport rep;
    detail::stamp(rep, config);
    rep.columns = {"n", "alpha", "max_abs_K", "two_n", "fitted_C"};
    bool bound_ok = true;
    double cmin = std::numeric_limits<double>::infinity(), cmax = 0;
    for (std::size_t n : config.n_list) {
        std::vector<double> us(4096);
        for (std::size_t i = 0; i < us.size(); ++i)
            us[i] = pi * static_cast<double>(i) / static_cast<double>(us.size() - 1);
        const std::vector<double> ks = cesaro_kernel_sweep(n, -config.alpha, us);
        double mx = 0;
        for (double k : ks) mx = std::max(mx, std::fabs(k));
        double fitted = 0;
        std::vector<double> vs(2048);
        for (std::size_t i = 0; i < vs.size(); ++i)
            vs[i] = pi / 8 + (pi - pi / 8) * static_cast<double>(i) /
                                 static_cast<double>(vs.size() - 1);
        const std::vector<double> kv = cesaro_kernel_sweep(n, -config.alpha, vs);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const double d = std::fabs(kv[i] - phi_kernel(n, -config.alpha, vs[i]));
            fitted = std::max(fitted, d * static_cast<double>(n) * vs[i] * vs[i]);
        }
        bound_ok = bound_ok && mx <= 2.0 * static_cast<double>(n) * (1.0 + 1e-9);
        cmin = std::min(cmin, fitted);
        cmax = std::max(cmax, fitted);
        rep.add_row({static_cast<double>(n), config.alpha, mx, 2.0 * static_cast<double>(n),
                     fitted});
    }
    rep.verdicts.emplace_back("kernel_bound_2n", bound_ok);
    rep.verdicts.emplace_back("residual_constant_25pct",
                              rep.rows.size() < 2 || cmax <= 1.25 * cmin);
    rep.wall_seconds = timer.seconds();
    return rep;
}

/// Per-u kernel curve (u, K, phi, |K - phi|) for one n; --dump target.
inline ExperimentReport kernel_point_dump(std::size_t n, double alpha, std::size_t samples = 2048) {
    ExperimentReport rep;
    rep.columns = {"u", "K", "phi", "abs_diff"};
    std::vector<double> us(samples);
    for (std::size_t i = 0; i < samples; ++i)
        us[i] = pi * static_cast<double>(i + 1) / static_cast<double>(samples);
    const std::vector<double> ks = cesaro_kernel_sweep(n, -alpha, us);
    for (std::size_t i = 0; i < samples; ++i) {
        const double p = phi_kernel(n, -alpha, us[i]);
        rep.add_row({us[i], ks[i], p, std::fabs(ks[i] - p)});
    }
    return rep;
}

/// Variation functionals of the configured function over the configured grids;
/// rows serialize the witnesses.
inline ExperimentReport run_variation(const ExperimentConfig& config) {
    detail::WallTimer timer;
    const CesaroOrder order = config.order();
    const LambdaSequence lambda = config.lambda();
    const PeriodicFunction2D f = builtin_test_function(config.function_name, order, lambda);
    std::vector<double> xg = config.x_grid, yg = config.y_grid;
    if (xg.empty() || yg.empty())
        throw std::invalid_argument("run_variation: both grids are required");

    VariationMode mode;
    if (config.mode == "exact") mode = VariationMode::exact;
    else if (config.mode == "heuristic") mode = VariationMode::heuristic;
    else mode = (xg.size() <= 16 && yg.size() <= 16) ? VariationMode::exact
                                                     : VariationMode::heuristic;

    ExperimentReport rep;
    detail::stamp(rep, config);
    rep.columns = {"functional", "mode",     "value",    "xa",       "xb",
                   "ya",         "yb",       "lambda_i", "lambda_j", "increment"};
    const double nan = std::numeric_limits<double>::quiet_NaN();
    auto emit_axis = [&](double id, const VariationResult& r, bool vary_x) {
        const double m = r.mode == VariationMode::exact ? 0.0 : 1.0;
        if (r.witness.empty()) {
            rep.add_row({id, m, r.value, nan, nan, nan, nan, 0.0, 0.0, nan});
            return;
        }
        for (const auto& w : r.witness) {
            if (vary_x)
                rep.add_row({id, m, r.value, w.a, w.b, r.fixed_coord, r.fixed_coord,
                             static_cast<double>(w.lambda_index), 0.0, w.increment});
            else
                rep.add_row({id, m, r.value, r.fixed_coord, r.fixed_coord, w.a, w.b, 0.0,
                             static_cast<double>(w.lambda_index), w.increment});
        }
    };
    const VariationResult v1 = lambda_variation_1(f, lambda, xg, yg, mode);
    const VariationResult v2 = lambda_variation_2(f, lambda, xg, yg, mode);
    emit_axis(1, v1, true);
    emit_axis(2, v2, false);
    double v12 = nan;
    if (xg.size() <= 8 && yg.size() <= 8) {
        const VariationResult m12 = lambda_variation_mixed(f, lambda, xg, yg);
        v12 = m12.value;
        if (m12.witness_mixed.empty()) {
            rep.add_row({12, 0.0, m12.value, nan, nan, nan, nan, 0.0, 0.0, nan});
        } else {
            for (const auto& w : m12.witness_mixed)
                rep.add_row({12, 0.0, m12.value, w.xa, w.xb, w.ya, w.yb,
                             static_cast<double>(w.lambda_i), static_cast<double>(w.lambda_j),
                             w.increment});
        }
    }
    double sup = 0;
    for (double x : xg)
        for (double y : yg) sup = std::max(sup, std::fabs(f(x, y)));
    rep.add_row({0, mode == VariationMode::exact ? 0.0 : 1.0, sup + v1.value + v2.value, nan, nan,
                 nan, nan, 0.0, 0.0, nan});
    rep.metadata.emplace_back("v1", format_g17(v1.value));
    rep.metadata.emplace_back("v2", format_g17(v2.value));
    if (std::isfinite(v12)) rep.metadata.emplace_back("v12", format_g17(v12));
    rep.verdicts.emplace_back("witnesses_consistent",
                              std::fabs(v1.re_evaluate(lambda) - v1.value) == 0.0 &&
                                  std::fabs(v2.re_evaluate(lambda) - v2.value) == 0.0);
    rep.wall_seconds = timer.seconds();
    return rep;
}

/// Summability-condition check of the configured weight sequence.
inline ExperimentReport run_check_conditions(const ExperimentConfig& config) {
    detail::WallTimer timer;
    const ConditionReport cond =
        theorem1_condition_check(config.lambda(), config.order(), config.horizon);
    ExperimentReport rep;
    detail::stamp(rep, config);
    rep.metadata.emplace_back("series_class",
                              cond.series_class == SeriesClass::converges   ? "converges"
                              : cond.series_class == SeriesClass::diverges ? "diverges"
                                                                           : "unknown");
    rep.columns = {"k", "lambda_k", "ratio", "partial_sum"};
    const LambdaSequence lambda = config.lambda();
    const double s = config.alpha + config.beta;
    for (std::size_t i = 0; i < cond.checkpoints.size(); ++i) {
        const std::size_t k = cond.checkpoints[i];
        const double lk = lambda.term(k);
        rep.add_row({static_cast<double>(k), lk,
                     lk / std::pow(static_cast<double>(k), 1.0 - s), cond.partial_sums[i]});
    }
    rep.verdicts.emplace_back("ratio_monotone", cond.ratio_monotone);
    rep.wall_seconds = timer.seconds();
    return rep;
}

/// Dispatch on config.scenario.
inline ExperimentReport run_scenario(const ExperimentConfig& config) {
    if (config.scenario == "converge") return run_converge(config);
    if (config.scenario == "diverge") return run_diverge(config);
    if (config.scenario == "kernel-diagnostics") return run_kernel_diagnostics(config);
    if (config.scenario == "variation") return run_variation(config);
    if (config.scenario == "check-conditions") return run_check_conditions(config);
    throw std::invalid_argument("unknown scenario: " + config.scenario);
}

}  // namespace cesaro2d
