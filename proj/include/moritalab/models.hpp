#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "moritalab/disorder.hpp"
#include "moritalab/kernels.hpp"

namespace moritalab {

// A numerical run failed to converge (reported as exit code 3 by the CLI).
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Family { Pinning, Wetting, Copolymer, DiagonalToy };

std::string family_name(Family f);

// One disordered linear-chain model instance.
//
//   Pinning      H = beta sum (1 + eps w_n) 1{S_n = 0}
//   Wetting      same reward, paths restricted to S_n >= 0
//   Copolymer    normalized form H = -2 lambda sum (w_n + h) 1{sign(S_n) = -1}
//                (sign inherited across zeros, rewarding bonds)
//   DiagonalToy  H = beta sum (1 + eps w_n) 1{S_n = n}
//
// Pinning/Wetting/Copolymer carry a first-return kernel; the toy model's
// walk enters only through the geometric law of its initial ascent.
struct ModelSpec {
    Family family = Family::Pinning;
    double beta = 0.0;
    double eps = 0.0;
    double lambda = 0.0;
    double h = 0.0;
    DisorderSpec disorder;
    ReturnKernel kernel;

    void validate() const;

    static ModelSpec pinning(double beta, double eps, DisorderSpec d, ReturnKernel k);
    static ModelSpec wetting(double beta, double eps, DisorderSpec d, ReturnKernel k);
    static ModelSpec copolymer(double lambda, double h, DisorderSpec d, ReturnKernel k);
    static ModelSpec diagonal_toy(double beta, double eps, DisorderSpec d);
};

// H_{N,omega}(S) for an explicit +-1 step sequence; shared by the
// brute-force oracle, the Basic Hypothesis check, and tests.
double path_hamiltonian(const ModelSpec& spec, const std::vector<int>& steps,
                        const std::vector<double>& omega);
bool path_allowed(const ModelSpec& spec, const std::vector<int>& steps);

// Exact log Z by enumerating all 2^n step sequences. Oracle only: n <= 12.
double brute_logZ(const ModelSpec& spec, const std::vector<double>& omega, std::size_t n);

// log Z_{N,omega} by the renewal recursion, O(n * min(n, n_max)).
// Reference implementation: straight log-sum-exp, simple and slow.
double quenched_logZ_ref(const ModelSpec& spec, const std::vector<double>& omega, std::size_t n);
// Production implementation: scaled linear-space convolution with running
// exponent rebasing; agrees with the reference to ~1e-12 relative.
double quenched_logZ(const ModelSpec& spec, const std::vector<double>& omega, std::size_t n);

struct QuenchedEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::size_t n = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<double> per_sample;
};

// Monte Carlo over disorder: mean and standard error of (1/n) log Z.
// Samples are distributed over an OpenMP pool; per-sample RNG streams are
// keyed by sample index and aggregation is in index order, so the result
// is independent of the number of workers.
QuenchedEstimate quenched_free_energy(const ModelSpec& spec, std::size_t n, std::size_t samples,
                                      std::uint64_t seed);
// Single-threaded twin kept as the reference for tests and benchmarks.
QuenchedEstimate quenched_free_energy_serial(const ModelSpec& spec, std::size_t n, std::size_t samples,
                                             std::uint64_t seed);

// Unique f >= 0 with sum_n K(n) e^{-f n} = e^{-u} when u exceeds the
// critical input -log(sum K); zero otherwise. Bisection to 1e-13.
double homogeneous_free_energy(const ReturnKernel& kernel, double u);

struct AnnealedResult {
    double value = 0.0;
    double critical_input = 0.0; // effective homogeneous contact exponent u
};

// (1/N) log E[Z_N]: per-contact annealing reduces pinning/wetting to the
// homogeneous solver at u = beta + log M(beta*eps); the toy model is
// closed-form; the copolymer delegates to the constrained-annealing DP
// with F = 0.
AnnealedResult annealed_free_energy(const ModelSpec& spec);

// Root of u(beta) = u_c for the annealed model (pinning/wetting/toy).
double annealed_critical_beta(const ModelSpec& proto);

struct BasicHypothesisReport {
    bool hamiltonian_zero_on_confined = false;
    std::size_t trials = 0;
    double log_prob_rate_n = 0.0;  // (1/n)  log P(S stays in D through n)
    double log_prob_rate_2n = 0.0; // (1/2n) log P(... through 2n)
};

// Checks the two halves of the Basic Hypothesis: H vanishes on paths
// confined to the zero-energy region, and the confinement probability
// decays subexponentially (rate at 2n smaller in modulus than at n).
BasicHypothesisReport basic_hypothesis_check(const ModelSpec& spec, std::size_t n, std::size_t trials,
                                             std::uint64_t seed = 12345);

} // namespace moritalab
