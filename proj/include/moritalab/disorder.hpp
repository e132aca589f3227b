#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "moritalab/rng.hpp"
#include "moritalab/words.hpp"

namespace moritalab {

// Law of a single charge: finite support with probabilities. Immutable
// after validate(); all operations on it are pure.
struct DisorderSpec {
    std::vector<double> charges;
    std::vector<double> probs;

    void validate() const;

    int alphabet() const { return int(charges.size()); }
    double mean() const;
    double variance() const;

    // M(t) = E[exp(t*omega)], finite for every t on a finite alphabet.
    double mgf(double t) const;
    double log_mgf(double t) const { return std::log(mgf(t)); }

    // Probability of a word under the product law nu^k.
    double word_prob(const std::vector<int>& symbols) const;

    int sample_index(double u) const; // inverse CDF on [0,1)

    static DisorderSpec fair_pm1();
    static DisorderSpec two_point(double a, double b, double prob_a);
};

std::vector<double> sample_disorder(const DisorderSpec& spec, std::size_t n, RngStream stream);
std::vector<int> sample_disorder_indices(const DisorderSpec& spec, std::size_t n, RngStream stream);

// Local function of the disorder with range k, stored as a dense table
// over words of length k (lexicographic index). Centering E[F] = 0 is
// enforced at construction by subtracting the mean, never assumed.
struct LocalFn {
    int k = 1;
    int alphabet = 2;
    std::vector<double> table;

    static LocalFn centered(int k, std::vector<double> raw, const DisorderSpec& spec);
    static LocalFn zero(int k, const DisorderSpec& spec);
    // g(last symbol) - g(first symbol): telescopes to a boundary term.
    static LocalFn gradient(const std::vector<double>& g, const DisorderSpec& spec);

    double operator()(std::size_t word_index) const { return table[word_index]; }
    double mean_under(const DisorderSpec& spec) const;
    double max_abs() const;
    WordSpace words() const { return WordSpace{alphabet, k}; }
};

} // namespace moritalab
