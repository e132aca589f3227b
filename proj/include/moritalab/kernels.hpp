#pragma once

#include <cstddef>
#include <vector>

namespace moritalab {

// First-return mass function K(n) of the underlying walk, truncated at
// n_max. The residual series mass beyond n_max is tracked in `tail` and
// enters every computation as a lump at n_max+1; `escape` is the mass of
// excursions that never end (transient walks, or the wall-side half for
// wetting where it is zero by construction).
//
// survival(i) = mass of excursions still open after i steps; this is the
// free-boundary factor multiplying the last renewal block.
struct ReturnKernel {
    int n_max = 0;
    std::vector<double> mass; // mass[j] for j = 1..n_max; mass[0] unused
    double tail = 0.0;
    double escape = 0.0;

    double series_total() const { return open_after_[0] - escape; }
    double total() const { return open_after_[0]; } // series + escape

    // K as actually summed over: lump of `tail` at n_max+1.
    double effective_mass(std::size_t j) const {
        if (j >= 1 && j <= std::size_t(n_max)) return mass[j];
        if (j == std::size_t(n_max) + 1) return tail;
        return 0.0;
    }
    std::size_t max_support() const { return std::size_t(n_max) + (tail > 0.0 ? 1 : 0); }

    double survival(std::size_t i) const {
        if (i == 0) return 1.0;
        if (i <= std::size_t(n_max)) return open_after_[i];
        return escape;
    }

    void finalize(); // builds suffix sums; call after mutating mass/tail/escape
    void validate() const;

  private:
    std::vector<double> open_after_; // open_after_[i] = sum_{j>i} mass[j] + tail + escape
};

// Simple symmetric 1D walk: K(2m) = binom(2m,m) / ((2m-1) 4^m), K(odd) = 0.
ReturnKernel srw_return_kernel(int n_max);

// Excursions constrained to the nonnegative side: K+(n) = K(n)/2,
// full-series mass 1/2, no escape.
ReturnKernel positive_return_kernel(int n_max);

// K(n) = c n^{-(1+alpha)} normalized so the full series sums to p;
// escape = 1 - p models a transient walk.
ReturnKernel stable_kernel(double alpha, double p, int n_max);

} // namespace moritalab
