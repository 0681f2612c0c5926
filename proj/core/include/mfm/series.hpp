#pragma once

// Power-series evaluation of the generalized hypergeometric function with a
// certified truncation bound, and the fundamental solution system around 0.

#include <span>

#include "mfm/parameters.hpp"

namespace mfm {

inline constexpr double kDefaultSeriesTol = 1e-14;
inline constexpr int kSeriesTermCap = 100000;

struct SeriesValue {
    Complex value;
    int terms_used = 0;
    double tail_bound = 0.0; // absolute bound on the discarded tail
};

// Partial sum of sum_n prod(upper_i, n) / (prod(lower_j, n) n!) x^n, stopped
// once the geometric tail bound drops below tol (absolute). Requires
// |x| <= 0.9 and lower parameters away from {0, -1, -2, ...}.
SeriesValue ghf(std::span<const Complex> upper, std::span<const Complex> lower,
                Complex x, double tol = kDefaultSeriesTol);

SeriesValue ghf(const SeriesParameters& sp, Complex x,
                double tol = kDefaultSeriesTol);

// k-th solution of the fundamental system: k = 0 is the plain series, k >= 1
// carries the branch factor x^{1-b_k} and requires real x in (0, 1).
SeriesValue fundamental_solution(int k, const ParameterSet& p, Complex x,
                                 double tol = kDefaultSeriesTol);

} // namespace mfm
