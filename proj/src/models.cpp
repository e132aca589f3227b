#include "moritalab/models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "moritalab/logsum.hpp"
#include "moritalab/morita.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace moritalab {

std::string family_name(Family f) {
    switch (f) {
        case Family::Pinning: return "pinning";
        case Family::Wetting: return "wetting";
        case Family::Copolymer: return "copolymer";
        case Family::DiagonalToy: return "toy";
    }
    return "?";
}

void ModelSpec::validate() const {
    disorder.validate();
    switch (family) {
        case Family::Pinning:
            if (beta < 0.0 || eps < 0.0) throw std::invalid_argument("pinning: beta, eps must be >= 0");
            kernel.validate();
            break;
        case Family::Wetting:
            if (beta < 0.0 || eps < 0.0) throw std::invalid_argument("wetting: beta, eps must be >= 0");
            kernel.validate();
            if (kernel.total() > 0.5 + 1e-12)
                throw std::invalid_argument("wetting: kernel mass exceeds 1/2");
            break;
        case Family::Copolymer:
            if (lambda < 0.0 || h < 0.0) throw std::invalid_argument("copolymer: lambda, h must be >= 0");
            kernel.validate();
            if (std::abs(disorder.mean()) > 1e-12)
                throw std::invalid_argument("copolymer: charges must be centered");
            break;
        case Family::DiagonalToy:
            break; // beta, eps unrestricted
    }
}

ModelSpec ModelSpec::pinning(double beta, double eps, DisorderSpec d, ReturnKernel k) {
    ModelSpec s{Family::Pinning, beta, eps, 0.0, 0.0, std::move(d), std::move(k)};
    s.validate();
    return s;
}

ModelSpec ModelSpec::wetting(double beta, double eps, DisorderSpec d, ReturnKernel k) {
    ModelSpec s{Family::Wetting, beta, eps, 0.0, 0.0, std::move(d), std::move(k)};
    s.validate();
    return s;
}

ModelSpec ModelSpec::copolymer(double lambda, double h, DisorderSpec d, ReturnKernel k) {
    ModelSpec s{Family::Copolymer, 0.0, 0.0, lambda, h, std::move(d), std::move(k)};
    s.validate();
    return s;
}

ModelSpec ModelSpec::diagonal_toy(double beta, double eps, DisorderSpec d) {
    ModelSpec s{Family::DiagonalToy, beta, eps, 0.0, 0.0, std::move(d), ReturnKernel{}};
    s.disorder.validate();
    return s;
}

// ---------------------------------------------------------------------------
// Path-level Hamiltonians and the exhaustive oracle
// ---------------------------------------------------------------------------

bool path_allowed(const ModelSpec& spec, const std::vector<int>& steps) {
    if (spec.family != Family::Wetting) return true;
    int s = 0;
    for (int st : steps) {
        s += st;
        if (s < 0) return false;
    }
    return true;
}

double path_hamiltonian(const ModelSpec& spec, const std::vector<int>& steps,
                        const std::vector<double>& omega) {
    const std::size_t n = steps.size();
    if (omega.size() < n) throw std::invalid_argument("path_hamiltonian: omega shorter than path");
    double hsum = 0.0;
    int s = 0;
    int sign = +1; // sign(S_m), inherited across zeros (rewards bonds, not sites)
    for (std::size_t m = 1; m <= n; ++m) {
        s += steps[m - 1];
        switch (spec.family) {
            case Family::Pinning:
            case Family::Wetting:
                if (s == 0) hsum += spec.beta * (1.0 + spec.eps * omega[m - 1]);
                break;
            case Family::DiagonalToy:
                if (s == int(m)) hsum += spec.beta * (1.0 + spec.eps * omega[m - 1]);
                break;
            case Family::Copolymer:
                if (s != 0) sign = s > 0 ? +1 : -1;
                if (sign < 0) hsum += -2.0 * spec.lambda * (omega[m - 1] + spec.h);
                break;
        }
    }
    return hsum;
}

double brute_logZ(const ModelSpec& spec, const std::vector<double>& omega, std::size_t n) {
    spec.validate();
    if (n > 12) throw std::invalid_argument("brute_logZ: n > 12 (cost 2^n)");
    if (omega.size() < n) throw std::invalid_argument("brute_logZ: omega shorter than n");
    if (spec.family == Family::Copolymer && n % 2 != 0)
        throw std::invalid_argument("brute_logZ: copolymer needs even n");
    const double log_half = -std::log(2.0);
    LogAccumulator acc;
    std::vector<int> steps(n);
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i) steps[i] = (mask >> i) & 1 ? +1 : -1;
        if (!path_allowed(spec, steps)) continue;
        acc.add(path_hamiltonian(spec, steps, omega) + double(n) * log_half);
    }
    return acc.value();
}

// ---------------------------------------------------------------------------
// Renewal dynamic programs
// ---------------------------------------------------------------------------

namespace {

bool kernel_even_only(const ReturnKernel& k) {
    for (std::size_t j = 1; j <= std::size_t(k.n_max); j += 2)
        if (k.mass[j] != 0.0) return false;
    return true;
}

double toy_logZ(const ModelSpec& spec, const std::vector<double>& omega, std::size_t n) {
    // Initial-ascent decomposition: the ray S_m = m is left forever at the
    // first down step, so Z is an (n+1)-term sum over the ascent length.
    const double log_half = -std::log(2.0);
    LogAccumulator acc;
    double a = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        acc.add(double(m + 1) * log_half + a);
        a += spec.beta * (1.0 + spec.eps * omega[m]);
    }
    acc.add(double(n) * log_half + a);
    return acc.value();
}

double softplus(double x) { // log(1 + e^x), safe for any x
    if (x > 0.0) return x + std::log1p(std::exp(-x));
    return std::log1p(std::exp(x));
}

// log Z for pinning/wetting by direct log-sum-exp over the recursion
// Zc(m) = sum_j K(j) e^{beta(1+eps w_m)} Zc(m-j);  Z = sum_m Zc(m) S(n-m).
double contact_logZ_ref(const ModelSpec& spec, const std::vector<double>& omega, std::size_t n) {
    const ReturnKernel& k = spec.kernel;
    const std::size_t support = k.max_support();
    std::vector<double> logzc(n + 1, neg_inf);
    logzc[0] = 0.0;
    std::vector<double> logk(support + 1, neg_inf);
    for (std::size_t j = 1; j <= support; ++j) {
        double kj = k.effective_mass(j);
        if (kj > 0.0) logk[j] = std::log(kj);
    }
    for (std::size_t m = 1; m <= n; ++m) {
        LogAccumulator acc;
        for (std::size_t j = 1; j <= std::min(m, support); ++j) {
            if (logk[j] == neg_inf || logzc[m - j] == neg_inf) continue;
            acc.add(logk[j] + logzc[m - j]);
        }
        double conv = acc.value();
        if (conv != neg_inf) logzc[m] = conv + spec.beta * (1.0 + spec.eps * omega[m - 1]);
    }
    LogAccumulator total;
    for (std::size_t m = 0; m <= n; ++m) {
        if (logzc[m] == neg_inf) continue;
        double s = k.survival(n - m);
        if (s > 0.0) total.add(logzc[m] + std::log(s));
    }
    return total.value();
}

double copolymer_logZ_ref(const ModelSpec& spec, const std::vector<double>& omega, std::size_t n) {
    const ReturnKernel& k = spec.kernel;
    const std::size_t support = k.max_support();
    std::vector<double> wsum(n + 1, 0.0); // wsum[m] = sum_{i<=m} (w_i + h)
    for (std::size_t m = 1; m <= n; ++m) wsum[m] = wsum[m - 1] + omega[m - 1] + spec.h;
    std::vector<double> logzc(n + 1, neg_inf);
    logzc[0] = 0.0;
    const double log_half = -std::log(2.0);
    for (std::size_t m = 1; m <= n; ++m) {
        LogAccumulator acc;
        for (std::size_t j = 1; j <= std::min(m, support); ++j) {
            double kj = k.effective_mass(j);
            if (kj == 0.0 || logzc[m - j] == neg_inf) continue;
            double seg = -2.0 * spec.lambda * (wsum[m] - wsum[m - j]);
            acc.add(std::log(kj) + log_half + softplus(seg) + logzc[m - j]);
        }
        logzc[m] = acc.value();
    }
    LogAccumulator total;
    total.add(logzc[n]);
    for (std::size_t m = 0; m < n; ++m) {
        if (logzc[m] == neg_inf) continue;
        double s = k.survival(n - m);
        if (s <= 0.0) continue;
        double seg = -2.0 * spec.lambda * (wsum[n] - wsum[m]);
        total.add(logzc[m] + std::log(s) + log_half + softplus(seg));
    }
    return total.value();
}

// Shared machinery of the scaled linear-space renewal convolution: values
// are carried as z[m] = Zc(m) exp(-(C + G m)); the affine exponent basis is
// re-anchored from the exact logzc record every REBASE_PERIOD steps, so the
// inner loop is pure multiply-add.
constexpr std::size_t REBASE_PERIOD = 1024;
constexpr double RESCALE_LIMIT_HI = 1e60;
constexpr double RESCALE_LIMIT_LO = 1e-60;

struct ScaledBasis {
    double c = 0.0;
    double g = 0.0;
    std::size_t anchor = 0;

    double offset(std::size_t m) const { return c + g * double(m); }
};

double contact_logZ_fast(const ModelSpec& spec, const std::vector<double>& omega, std::size_t n) {
    const ReturnKernel& k = spec.kernel;
    const std::size_t support = k.max_support();
    const bool even_only = kernel_even_only(k);
    const std::size_t nmax = std::size_t(k.n_max);

    std::vector<double> z(n + 1, 0.0), logzc(n + 1, neg_inf);
    z[0] = 1.0;
    logzc[0] = 0.0;
    ScaledBasis basis;
    std::vector<double> w(support + 1, 0.0);
    auto refresh_weights = [&] {
        for (std::size_t j = 1; j <= support; ++j) {
            double kj = k.effective_mass(j);
            w[j] = kj > 0.0 ? kj * std::exp(-basis.g * double(j)) : 0.0;
        }
    };
    auto rebase = [&](std::size_t m) {
        double span = double(m - basis.anchor);
        double slope = (span > 0.0 && logzc[basis.anchor] != neg_inf && logzc[m] != neg_inf)
                           ? (logzc[m] - logzc[basis.anchor]) / span
                           : basis.g;
        basis.g = slope;
        basis.c = (logzc[m] != neg_inf ? logzc[m] : 0.0) - basis.g * double(m);
        basis.anchor = m;
        std::size_t lo = m > support ? m - support : 0;
        for (std::size_t i = lo; i <= m; ++i) {
            if (logzc[i] == neg_inf) {
                z[i] = 0.0;
                continue;
            }
            double e = logzc[i] - basis.offset(i);
            if (std::abs(e) > 690.0) throw NonConvergence("renewal DP: exponent spread exceeds double range");
            z[i] = std::exp(e);
        }
        refresh_weights();
    };
    refresh_weights();

    for (std::size_t m = 1; m <= n; ++m) {
        if (even_only && (m % 2 != 0) && m <= nmax) continue; // no odd return times yet
        double conv = 0.0;
        std::size_t jhi = std::min(m, nmax);
        if (even_only) {
            for (std::size_t j = 2; j <= jhi; j += 2) conv += w[j] * z[m - j];
        } else {
            for (std::size_t j = 1; j <= jhi; ++j) conv += w[j] * z[m - j];
        }
        if (support > nmax && m >= nmax + 1) conv += w[nmax + 1] * z[m - nmax - 1];
        if (conv <= 0.0) continue;
        double lw = spec.beta * (1.0 + spec.eps * omega[m - 1]);
        z[m] = conv * std::exp(lw);
        logzc[m] = std::log(conv) + lw + basis.offset(m);
        if (m - basis.anchor >= REBASE_PERIOD || z[m] > RESCALE_LIMIT_HI || z[m] < RESCALE_LIMIT_LO)
            rebase(m);
    }

    LogAccumulator total;
    const double log_escape = k.escape > 0.0 ? std::log(k.escape) : neg_inf;
    for (std::size_t m = 0; m <= n; ++m) {
        if (logzc[m] == neg_inf) continue;
        std::size_t i = n - m;
        if (i > nmax) {
            if (log_escape != neg_inf) total.add(logzc[m] + log_escape);
            continue;
        }
        double s = k.survival(i);
        if (s > 0.0) total.add(logzc[m] + std::log(s));
    }
    return total.value();
}

double copolymer_logZ_fast(const ModelSpec& spec, const std::vector<double>& omega, std::size_t n) {
    const ReturnKernel& k = spec.kernel;
    const std::size_t support = k.max_support();
    const bool even_only = kernel_even_only(k);
    const std::size_t nmax = std::size_t(k.n_max);
    const double log_half = -std::log(2.0);

    std::vector<double> lneg(n + 1, 0.0); // lneg[m] = -2 lambda sum_{i<=m} (w_i + h)
    for (std::size_t m = 1; m <= n; ++m) lneg[m] = lneg[m - 1] - 2.0 * spec.lambda * (omega[m - 1] + spec.h);

    // Two interleaved convolutions: plain excursions on z, sign-weighted on y
    // (y tracks Zc(m) e^{lneg-reversal}); each has its own exponent basis.
    std::vector<double> z(n + 1, 0.0), y(n + 1, 0.0), logzc(n + 1, neg_inf);
    z[0] = 1.0;
    logzc[0] = 0.0;
    y[0] = 1.0; // Zc(0) e^{-lneg[0]} = 1
    ScaledBasis bz, by;
    std::vector<double> wz(support + 1, 0.0), wy(support + 1, 0.0);
    auto refresh = [&](std::vector<double>& w, const ScaledBasis& b) {
        for (std::size_t j = 1; j <= support; ++j) {
            double kj = k.effective_mass(j);
            w[j] = kj > 0.0 ? 0.5 * kj * std::exp(-b.g * double(j)) : 0.0;
        }
    };
    auto logy = [&](std::size_t i) { return logzc[i] == neg_inf ? neg_inf : logzc[i] - lneg[i]; };
    auto rebase = [&](std::size_t m, ScaledBasis& b, std::vector<double>& arr, std::vector<double>& w, bool is_y) {
        auto val = [&](std::size_t i) { return is_y ? logy(i) : logzc[i]; };
        double span = double(m - b.anchor);
        double slope =
            (span > 0.0 && val(b.anchor) != neg_inf && val(m) != neg_inf) ? (val(m) - val(b.anchor)) / span : b.g;
        b.g = slope;
        b.c = (val(m) != neg_inf ? val(m) : 0.0) - b.g * double(m);
        b.anchor = m;
        std::size_t lo = m > support ? m - support : 0;
        for (std::size_t i = lo; i <= m; ++i) {
            if (val(i) == neg_inf) {
                arr[i] = 0.0;
                continue;
            }
            double e = val(i) - b.offset(i);
            if (std::abs(e) > 690.0) throw NonConvergence("copolymer DP: exponent spread exceeds double range");
            arr[i] = std::exp(e);
        }
        refresh(w, b);
    };
    refresh(wz, bz);
    refresh(wy, by);

    for (std::size_t m = 1; m <= n; ++m) {
        if (even_only && (m % 2 != 0) && m <= nmax) continue;
        double cz = 0.0, cy = 0.0;
        std::size_t jhi = std::min(m, nmax);
        if (even_only) {
            for (std::size_t j = 2; j <= jhi; j += 2) {
                cz += wz[j] * z[m - j];
                cy += wy[j] * y[m - j];
            }
        } else {
            for (std::size_t j = 1; j <= jhi; ++j) {
                cz += wz[j] * z[m - j];
                cy += wy[j] * y[m - j];
            }
        }
        if (support > nmax && m >= nmax + 1) {
            cz += wz[nmax + 1] * z[m - nmax - 1];
            cy += wy[nmax + 1] * y[m - nmax - 1];
        }
        if (cz <= 0.0 && cy <= 0.0) continue;
        // Zc(m) = conv_z + e^{lneg[m]} conv_y, combined in log space to keep
        // the two bases from clashing.
        LogAccumulator acc;
        if (cz > 0.0) acc.add(std::log(cz) + bz.offset(m));
        if (cy > 0.0) acc.add(std::log(cy) + by.offset(m) + lneg[m]);
        logzc[m] = acc.value();
        double ez = logzc[m] - bz.offset(m);
        double ey = logzc[m] - lneg[m] - by.offset(m);
        z[m] = std::abs(ez) < 690.0 ? std::exp(ez) : throw NonConvergence("copolymer DP: basis overflow");
        y[m] = std::abs(ey) < 690.0 ? std::exp(ey) : throw NonConvergence("copolymer DP: basis overflow");
        bool force = z[m] > RESCALE_LIMIT_HI || z[m] < RESCALE_LIMIT_LO || y[m] > RESCALE_LIMIT_HI ||
                     y[m] < RESCALE_LIMIT_LO;
        if (m - bz.anchor >= REBASE_PERIOD || force) {
            rebase(m, bz, z, wz, false);
            rebase(m, by, y, wy, true);
        }
    }

    LogAccumulator total;
    total.add(logzc[n]);
    for (std::size_t m = n > nmax ? n - nmax : 0; m < n; ++m) {
        if (logzc[m] == neg_inf) continue;
        double s = k.survival(n - m);
        if (s <= 0.0) continue;
        total.add(logzc[m] + std::log(s) + log_half + softplus(lneg[n] - lneg[m]));
    }
    return total.value();
}

void check_quenched_args(const ModelSpec& spec, const std::vector<double>& omega, std::size_t n) {
    spec.validate();
    if (omega.size() < n) throw std::invalid_argument("quenched_logZ: omega shorter than n");
    if (spec.family == Family::Copolymer && n % 2 != 0)
        throw std::invalid_argument("quenched_logZ: copolymer needs even n");
    if (spec.family != Family::DiagonalToy && spec.kernel.tail == 0.0 && spec.kernel.escape == 0.0 &&
        std::size_t(spec.kernel.n_max) < n && spec.kernel.survival(std::size_t(spec.kernel.n_max)) <= 0.0)
        throw std::invalid_argument("quenched_logZ: kernel has no tracked tail and is shorter than n");
}

} // namespace

double quenched_logZ_ref(const ModelSpec& spec, const std::vector<double>& omega, std::size_t n) {
    check_quenched_args(spec, omega, n);
    if (n == 0) return 0.0;
    switch (spec.family) {
        case Family::DiagonalToy: return toy_logZ(spec, omega, n);
        case Family::Copolymer: return copolymer_logZ_ref(spec, omega, n);
        default: return contact_logZ_ref(spec, omega, n);
    }
}

double quenched_logZ(const ModelSpec& spec, const std::vector<double>& omega, std::size_t n) {
    check_quenched_args(spec, omega, n);
    if (n == 0) return 0.0;
    switch (spec.family) {
        case Family::DiagonalToy: return toy_logZ(spec, omega, n);
        case Family::Copolymer: return copolymer_logZ_fast(spec, omega, n);
        default: return contact_logZ_fast(spec, omega, n);
    }
}

// ---------------------------------------------------------------------------
// Disorder Monte Carlo
// ---------------------------------------------------------------------------

namespace {

QuenchedEstimate summarize(std::vector<double> vals, std::size_t n, std::uint64_t seed) {
    QuenchedEstimate est;
    est.n = n;
    est.samples = vals.size();
    est.seed = seed;
    double mean = 0.0;
    for (double v : vals) mean += v;
    mean /= double(vals.size());
    double var = 0.0;
    for (double v : vals) var += (v - mean) * (v - mean);
    est.mean = mean;
    est.stderr_ = vals.size() > 1 ? std::sqrt(var / double(vals.size() - 1)) / std::sqrt(double(vals.size())) : 0.0;
    est.per_sample = std::move(vals);
    return est;
}

} // namespace

QuenchedEstimate quenched_free_energy(const ModelSpec& spec, std::size_t n, std::size_t samples,
                                      std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("quenched_free_energy: samples >= 1 required");
    std::vector<double> vals(samples);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < (long long)samples; ++i) {
        std::vector<double> omega = sample_disorder(spec.disorder, n, RngStream{seed, std::uint64_t(i)});
        vals[std::size_t(i)] = quenched_logZ(spec, omega, n) / double(n);
    }
    return summarize(std::move(vals), n, seed);
}

QuenchedEstimate quenched_free_energy_serial(const ModelSpec& spec, std::size_t n, std::size_t samples,
                                             std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("quenched_free_energy: samples >= 1 required");
    std::vector<double> vals(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        std::vector<double> omega = sample_disorder(spec.disorder, n, RngStream{seed, i});
        vals[i] = quenched_logZ(spec, omega, n) / double(n);
    }
    return summarize(std::move(vals), n, seed);
}

// ---------------------------------------------------------------------------
// Homogeneous solver and annealed bounds
// ---------------------------------------------------------------------------

double homogeneous_free_energy(const ReturnKernel& kernel, double u) {
    kernel.validate();
    const double target = std::exp(-u);
    const std::size_t support = kernel.max_support();
    auto series = [&](double f) {
        long double s = 0.0L;
        for (std::size_t j = support; j >= 1; --j) {
            double kj = kernel.effective_mass(j);
            if (kj > 0.0) s += kj * std::exp(-f * double(j));
        }
        return double(s);
    };
    double total = kernel.series_total();
    if (target >= total) return 0.0; // delocalized: u <= -log(sum K)
    double lo = 0.0, hi = 1.0;
    while (series(hi) > target) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++it) {
        double mid = 0.5 * (lo + hi);
        if (series(mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

AnnealedResult annealed_free_energy(const ModelSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case Family::Pinning:
        case Family::Wetting: {
            double u = spec.beta + spec.disorder.log_mgf(spec.beta * spec.eps);
            return AnnealedResult{homogeneous_free_energy(spec.kernel, u), u};
        }
        case Family::DiagonalToy: {
            double u = spec.beta + spec.disorder.log_mgf(spec.beta * spec.eps);
            return AnnealedResult{std::max(0.0, u - std::log(2.0)), u};
        }
        case Family::Copolymer: {
            // Annealing the normalized Hamiltonian = the constrained-annealed
            // functional at F = 0.
            LocalFn zero = LocalFn::zero(1, spec.disorder);
            double rate = morita_rate_renewal(spec, zero);
            double u = spec.disorder.log_mgf(-2.0 * spec.lambda) - 2.0 * spec.lambda * spec.h;
            return AnnealedResult{rate, u};
        }
    }
    throw std::logic_error("annealed_free_energy: unreachable");
}

double annealed_critical_beta(const ModelSpec& proto) {
    proto.validate();
    double u_c = 0.0;
    switch (proto.family) {
        case Family::Pinning:
        case Family::Wetting: u_c = -std::log(proto.kernel.series_total()); break;
        case Family::DiagonalToy: u_c = std::log(2.0); break;
        case Family::Copolymer:
            throw std::invalid_argument("annealed_critical_beta: copolymer has no beta parameter");
    }
    auto u_of = [&](double beta) { return beta + proto.disorder.log_mgf(beta * proto.eps); };
    double lo = 0.0, hi = std::max(1.0, 2.0 * u_c);
    while (u_of(hi) < u_c) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++it) {
        double mid = 0.5 * (lo + hi);
        if (u_of(mid) < u_c)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Basic Hypothesis check
// ---------------------------------------------------------------------------

namespace {

// Sample a walk path conditioned to stay in the model's zero-energy region
// by rejection; these regions have polynomially decaying probability, so
// rejection is cheap at the n used here.
std::vector<int> sample_confined_path(const ModelSpec& spec, std::size_t n, RngStream& rng) {
    std::vector<int> steps(n);
    for (std::size_t attempt = 0; attempt < 1000000; ++attempt) {
        int s = 0;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            steps[i] = rng.uniform() < 0.5 ? +1 : -1;
            s += steps[i];
            switch (spec.family) {
                case Family::Pinning:
                    if (s == 0) ok = false;
                    break;
                case Family::Wetting:
                    if (s <= 0) ok = false; // strictly positive: no contacts either
                    break;
                case Family::DiagonalToy:
                    if (s == int(i + 1)) ok = false;
                    break;
                case Family::Copolymer:
                    if (s < 0) ok = false; // sign stays +1 iff never dips below 0
                    break;
            }
        }
        if (ok) return steps;
    }
    throw NonConvergence("basic_hypothesis_check: confined-path sampling failed");
}

// P(confined through i), from the kernel / closed forms.
double log_confinement_prob(const ModelSpec& spec, std::size_t i) {
    switch (spec.family) {
        case Family::Pinning: return std::log(spec.kernel.survival(i));
        case Family::Wetting: return std::log(spec.kernel.survival(i)); // K+ suffix = positive no-contact mass
        case Family::DiagonalToy: return -std::log(2.0); // leave the ray at the first step, forever
        case Family::Copolymer: {
            // Renewal with half-kernel (positive excursions only).
            const ReturnKernel& k = spec.kernel;
            std::size_t support = k.max_support();
            std::vector<double> p(i + 1, 0.0);
            p[0] = 1.0;
            for (std::size_t m = 1; m <= i; ++m) {
                double s = 0.0;
                for (std::size_t j = 1; j <= std::min(m, support); ++j)
                    s += 0.5 * k.effective_mass(j) * p[m - j];
                p[m] = s;
            }
            double tot = 0.0;
            for (std::size_t m = 0; m <= i; ++m) {
                std::size_t rest = i - m;
                double surv = rest == 0 ? 1.0 : 0.5 * k.survival(rest);
                tot += p[m] * surv;
            }
            return std::log(tot);
        }
    }
    throw std::logic_error("log_confinement_prob: unreachable");
}

} // namespace

BasicHypothesisReport basic_hypothesisReport_impl(const ModelSpec& spec, std::size_t n, std::size_t trials,
                                                  std::uint64_t seed);

BasicHypothesisReport basic_hypothesis_check(const ModelSpec& spec, std::size_t n, std::size_t trials,
                                             std::uint64_t seed) {
    spec.validate();
    if (n < 2 || n > 4096) throw std::invalid_argument("basic_hypothesis_check: n out of range [2, 4096]");
    BasicHypothesisReport rep;
    rep.trials = trials;
    rep.hamiltonian_zero_on_confined = true;
    RngStream rng{seed, 0};
    std::vector<double> omega = sample_disorder(spec.disorder, n, RngStream{seed, 1});
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<int> steps = sample_confined_path(spec, n, rng);
        if (path_hamiltonian(spec, steps, omega) != 0.0) rep.hamiltonian_zero_on_confined = false;
    }
    rep.log_prob_rate_n = log_confinement_prob(spec, n) / double(n);
    rep.log_prob_rate_2n = log_confinement_prob(spec, 2 * n) / double(2 * n);
    return rep;
}

} // namespace moritalab
