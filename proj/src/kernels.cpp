#include "moritalab/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace moritalab {

void ReturnKernel::finalize() {
    validate();
    open_after_.assign(std::size_t(n_max) + 1, 0.0);
    long double acc = (long double)tail + (long double)escape;
    open_after_[std::size_t(n_max)] = double(acc);
    for (std::size_t i = std::size_t(n_max); i >= 1; --i) {
        acc += (long double)mass[i];
        open_after_[i - 1] = double(acc);
    }
}

void ReturnKernel::validate() const {
    if (n_max < 1) throw std::invalid_argument("ReturnKernel: n_max too small");
    if (mass.size() != std::size_t(n_max) + 1) throw std::invalid_argument("ReturnKernel: mass size mismatch");
    if (tail < 0.0 || escape < 0.0) throw std::invalid_argument("ReturnKernel: negative tail/escape mass");
    double sum = tail + escape;
    for (std::size_t j = 1; j <= std::size_t(n_max); ++j) {
        if (mass[j] < 0.0) throw std::invalid_argument("ReturnKernel: negative mass");
        sum += mass[j];
    }
    if (sum > 1.0 + 1e-12) throw std::invalid_argument("ReturnKernel: total mass exceeds 1");
}

ReturnKernel srw_return_kernel(int n_max) {
    if (n_max < 2 || n_max % 2 != 0)
        throw std::invalid_argument("srw_return_kernel: n_max must be even and >= 2");
    ReturnKernel k;
    k.n_max = n_max;
    k.mass.assign(std::size_t(n_max) + 1, 0.0);
    // K(2) = 1/2, then K(2m+2) = K(2m) * (2m-1)/(2m+2).
    double cur = 0.5;
    for (int m = 1; 2 * m <= n_max; ++m) {
        k.mass[std::size_t(2 * m)] = cur;
        cur *= double(2 * m - 1) / double(2 * m + 2);
    }
    // No-return probability after 2M steps equals the central binomial
    // binom(2M,M) 4^{-M} = prod (2i-1)/(2i); exact, avoids cancellation.
    long double no_return = 1.0L;
    for (int i = 1; 2 * i <= n_max; ++i) no_return *= (long double)(2 * i - 1) / (long double)(2 * i);
    k.tail = double(no_return);
    k.escape = 0.0;
    k.finalize();
    return k;
}

ReturnKernel positive_return_kernel(int n_max) {
    ReturnKernel k = srw_return_kernel(n_max);
    for (double& m : k.mass) m *= 0.5;
    k.tail *= 0.5;
    k.escape = 0.0; // staying strictly positive forever has probability 0
    k.finalize();
    return k;
}

namespace {

// sum_{n > M} n^{-s} by Euler-Maclaurin; relative error O(M^{-3}) here.
double zeta_tail(double s, double M) {
    return std::pow(M, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(M, -s) - (s / 12.0) * std::pow(M, -s - 1.0);
}

} // namespace

ReturnKernel stable_kernel(double alpha, double p, int n_max) {
    if (!(alpha > 0.0)) throw std::invalid_argument("stable_kernel: alpha must be positive");
    if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("stable_kernel: need 0 < p <= 1");
    if (n_max < 2) throw std::invalid_argument("stable_kernel: n_max too small");
    const double s = 1.0 + alpha;
    long double series = 0.0L;
    for (int n = n_max; n >= 1; --n) series += std::pow((long double)n, -(long double)s);
    double full = double(series) + zeta_tail(s, double(n_max));
    double c = p / full;
    ReturnKernel k;
    k.n_max = n_max;
    k.mass.assign(std::size_t(n_max) + 1, 0.0);
    for (int n = 1; n <= n_max; ++n) k.mass[std::size_t(n)] = c * std::pow(double(n), -s);
    k.tail = c * zeta_tail(s, double(n_max));
    k.escape = 1.0 - p;
    k.finalize();
    return k;
}

} // namespace moritalab
