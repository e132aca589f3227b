#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace moritalab {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// Streaming log-sum-exp: value() = log(sum_i exp(x_i)) without leaving
// log space. Exponents in these models grow like beta*N, so plain
// accumulation overflows long before N is interesting.
class LogAccumulator {
  public:
    void add(double x) {
        if (x == neg_inf) return;
        if (x <= peak_) {
            sum_ += std::exp(x - peak_);
        } else {
            sum_ = (peak_ == neg_inf) ? 1.0 : sum_ * std::exp(peak_ - x) + 1.0;
            peak_ = x;
        }
    }

    double value() const {
        if (peak_ == neg_inf) return neg_inf;
        return peak_ + std::log(sum_);
    }

  private:
    double peak_ = neg_inf;
    double sum_ = 0.0;
};

// Two-pass log-sum-exp over a span; summation order is fixed by index,
// so the result is independent of how callers partition work.
inline double log_sum_exp(std::span<const double> xs) {
    double peak = neg_inf;
    for (double x : xs) peak = std::max(peak, x);
    if (peak == neg_inf) return neg_inf;
    double sum = 0.0;
    for (double x : xs) sum += std::exp(x - peak);
    return peak + std::log(sum);
}

} // namespace moritalab
