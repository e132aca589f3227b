#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "moritalab/disorder.hpp"
#include "moritalab/linalg.hpp"
#include "moritalab/words.hpp"

namespace moritalab {

// Tilted transfer operator over (k-1)-gram states. Entry (s, s') is
// nu(last symbol of s') * exp(F(s . last(s'))) when s' is the one-step
// shift continuation of s, zero otherwise; iterating it generates
// E[exp(sum_j F(theta_j omega))]. For k = 1 it degenerates to the 1x1
// operator [ sum_g nu(g) exp(F(g)) ].
struct TransferOp {
    int k = 1;
    int alphabet = 2;
    std::size_t dim = 1;
    Mat op;
    DisorderSpec spec;
    std::vector<double> site_weights; // k = 1 only: nu(g) exp(F(g)) per symbol

    WordSpace states() const { return WordSpace{alphabet, k > 1 ? k - 1 : 1}; }
};

// Perron data of a transfer operator; right is normalized to sum 1 and
// left to <left, right> = 1, both strictly positive.
struct PerronData {
    double rho = 0.0;
    std::vector<double> right;
    std::vector<double> left;
    double residual = 0.0;
    std::size_t iterations = 0;
};

// The theta-invariant Gibbs measure of the potential, realized in d = 1
// as the stationary Markov chain P(s,s') = T(s,s') right(s') / (rho right(s)).
struct GibbsChain {
    int k = 1;
    int alphabet = 2;
    Mat transition;
    std::vector<double> stationary;
    // k = 1 has a trivial (single) state; cylinders are products of the
    // tilted single-site law stored here. Empty for k >= 2.
    std::vector<double> site_law;

    // log mu(cylinder of the word w), chain started from the stationary law.
    double log_cylinder(const std::vector<int>& word) const;
};

struct EntropyDensity {
    double value = 0.0;  // L(F) - E[F]
    double l_of_f = 0.0;
    double mean_f = 0.0;
    GibbsChain chain;
};

struct NegligibilityCertificate {
    bool negligible = false;
    double l_of_f = 0.0;
    double tol = 0.0;
    std::array<std::size_t, 4> lengths{8, 16, 32, 64};
    std::array<double, 4> sup_abs{};
};

TransferOp build_transfer(const LocalFn& f, const DisorderSpec& spec);

PerronData perron(const TransferOp& t, double tol = 1e-12);

// L(F) = lim (1/N) log E[exp(A_N)] = log of the Perron root.
double l_of_f(const LocalFn& f, const DisorderSpec& spec);

// Exact sup over disorder words of |sum_{j=0}^{n} F(theta_j omega)|
// (n+1 windows, so words of length n+k), by max-plus dynamic
// programming over suffix (k-1)-grams.
double sup_abs_AN(const LocalFn& f, const DisorderSpec& spec, std::size_t n);

GibbsChain gibbs_chain(const TransferOp& t, const PerronData& p);

EntropyDensity entropy_density(const LocalFn& f, const DisorderSpec& spec);

// True iff L(F) <= tol; a centered F with L(F) = 0 has uniformly
// negligible empirical sums, witnessed by the sup_abs certificate.
NegligibilityCertificate is_negligible(const LocalFn& f, const DisorderSpec& spec, double tol = 1e-9);

// log E[exp(sum of (k-1)-gram chain over n steps)] = log(nu^{k-1} T^n 1),
// evaluated with per-step rescaling. Exact finite-n counterpart of L(F):
// n+1 completed windows over words of length n+k costs n+1 steps.
double log_moment_an(const LocalFn& f, const DisorderSpec& spec, std::size_t n);

} // namespace moritalab
