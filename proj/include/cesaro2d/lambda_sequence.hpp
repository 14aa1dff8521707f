#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cesaro2d {

/// Convergence class of the series sum_k lambda_k / k^{2-s}.
enum class SeriesClass { converges, diverges, unknown };

/// An increasing positive weight sequence {lambda_n} with lazy term
/// generation. Built-in families carry analytic metadata (monotonicity of
/// lambda_k / k^{1-s}, class of sum lambda_k / k^{2-s}); custom sequences get
/// class `unknown` and are judged from partial sums only.
///
/// The power_log family lambda_n = n^{1-s} / log^{1+eps}(n+1) dips below its
/// first term for small n, so it is normalised by a running maximum; this
/// keeps it within a constant factor of the raw sequence and preserves both
/// condition classes.
///
/// Lazy materialization is not synchronized; to share an instance across
/// threads, materialize the needed prefix first.
class LambdaSequence {
  public:
    enum class Family { constant, harmonic, power_log, custom };

    static LambdaSequence constant(double value) {
        if (!(value > 0)) throw std::domain_error("LambdaSequence: constant must be positive");
        LambdaSequence s;
        s.family_ = Family::constant;
        s.param_ = value;
        s.label_ = "constant:" + format(value);
        return s;
    }

    static LambdaSequence harmonic() {
        LambdaSequence s;
        s.family_ = Family::harmonic;
        s.label_ = "harmonic";
        return s;
    }

    /// lambda_n = n^{1-order_sum} / log^{1+eps}(n+1), running-max normalised.
    /// eps = 0 gives the divergent-class family, eps > 0 the convergent one.
    static LambdaSequence power_log(double order_sum, double eps) {
        if (!(order_sum > 0) || !(order_sum < 1))
            throw std::domain_error("LambdaSequence: order_sum must lie in (0, 1)");
        if (!(eps >= 0)) throw std::domain_error("LambdaSequence: eps must be >= 0");
        LambdaSequence s;
        s.family_ = Family::power_log;
        s.order_sum_ = order_sum;
        s.param_ = eps;
        s.label_ = "power-log:eps=" + format(eps);
        return s;
    }

    static LambdaSequence custom(std::function<double(std::size_t)> term, std::string label) {
        LambdaSequence s;
        s.family_ = Family::custom;
        s.custom_ = std::move(term);
        s.label_ = std::move(label);
        return s;
    }

    Family family() const { return family_; }
    double eps() const { return param_; }
    double constant_value() const { return param_; }
    double order_sum() const { return order_sum_; }
    const std::string& label() const { return label_; }

    /// lambda_n, 1-based.
    double term(std::size_t n) const {
        if (n == 0) throw std::domain_error("LambdaSequence::term: index is 1-based");
        switch (family_) {
            case Family::constant:
                return param_;
            case Family::harmonic:
                return static_cast<double>(n);
            case Family::power_log: {
                materialize(n);
                return cache_[n - 1];
            }
            case Family::custom:
                return custom_(n);
        }
        return 0;
    }

    /// lambda_1 .. lambda_n with the monotonicity invariant checked.
    std::vector<double> prefix(std::size_t n) const {
        std::vector<double> out(n);
        for (std::size_t k = 1; k <= n; ++k) out[k - 1] = term(k);
        validate(out);
        return out;
    }

    static void validate(const std::vector<double>& lam) {
        if (lam.empty()) return;
        if (!(lam[0] > 0))
            throw std::domain_error("LambdaSequence: terms must be positive");
        for (std::size_t k = 1; k < lam.size(); ++k)
            if (lam[k] < lam[k - 1] * (1.0 - 1e-14))
                throw std::domain_error("LambdaSequence: sequence must be nondecreasing");
    }

    /// Analytic class of sum_k lambda_k / k^{2-s} for the given order sum s.
    SeriesClass series_class(double s) const {
        switch (family_) {
            case Family::constant:
                return SeriesClass::converges;  // p-series, 2-s > 1
            case Family::harmonic:
                return SeriesClass::diverges;  // terms k^{s-1}, s > 0
            case Family::power_log: {
                const double ds = s - order_sum_;
                if (ds > 1e-12) return SeriesClass::diverges;
                if (ds < -1e-12) return SeriesClass::converges;
                return param_ > 0 ? SeriesClass::converges : SeriesClass::diverges;
            }
            case Family::custom:
                return SeriesClass::unknown;
        }
        return SeriesClass::unknown;
    }

  private:
    Family family_ = Family::constant;
    double param_ = 1.0;      // constant value, or eps for power_log
    double order_sum_ = 0.0;  // s = alpha + beta baked into power_log
    std::function<double(std::size_t)> custom_;
    std::string label_;
    mutable std::vector<double> cache_;  // power_log running-max prefix

    void materialize(std::size_t n) const {
        const std::size_t from = cache_.size();
        if (from >= n) return;
        cache_.resize(n);
        double run = from == 0 ? 0.0 : cache_[from - 1];
        for (std::size_t k = from + 1; k <= n; ++k) {
            const double raw = std::pow(static_cast<double>(k), 1.0 - order_sum_) /
                               std::pow(std::log(static_cast<double>(k) + 1.0), 1.0 + param_);
            run = std::max(run, raw);
            cache_[k - 1] = run;
        }
    }

    static std::string format(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", v);
        return buf;
    }
};

}  // namespace cesaro2d
