#pragma once

// Parameter vectors for the order-(m+1) hypergeometric family, the derived
// exponent data, genericity validation, and the parameter transforms used
// by the solution system and the quadratic identities.

#include <cstdint>
#include <vector>

#include "mfm/special.hpp"

namespace mfm {

struct ParameterSet {
    int m = 0;
    std::vector<Complex> a; // a_0 .. a_m
    std::vector<Complex> b; // b_0 .. b_m, b_0 = 0
};

// lambda_j = a_j - b_{j+1} (indices cyclic mod m+1), mu_j = b_j - a_j,
// alpha_j = e^{2 pi i a_j}, beta_j = e^{2 pi i b_j}.
struct ExponentSet {
    std::vector<Complex> lambda;
    std::vector<Complex> mu;
    std::vector<Complex> alpha;
    std::vector<Complex> beta;
};

enum class ViolationKind {
    ab_integer, // a_i - b_j within delta of an integer
    bb_integer, // b_i - b_j within delta of an integer (i < j)
};

struct Violation {
    ViolationKind kind;
    int i;
    int j;
    Complex difference;
};

// Upper/lower parameter vectors for one series evaluation.
struct SeriesParameters {
    std::vector<Complex> upper; // m+1 entries
    std::vector<Complex> lower; // m entries
};

// Throws std::invalid_argument on shape problems (sizes, b_0 != 0).
void check_shape(const ParameterSet& p);

// Empty result iff every non-integrality constraint holds at tolerance
// delta. Violations are data, not errors.
std::vector<Violation> validate(const ParameterSet& p,
                                double delta = kIntegerProximityTol);

ExponentSet exponents(const ParameterSet& p);

// a -> -a, b -> -b (b_0 stays exactly 0). Involution.
ParameterSet negate(const ParameterSet& p);

// Series parameters of the r-th solution of the fundamental system:
// r = 0 gives the cyclically ordered (a_1, ..., a_m, a_0) over (b_1, ..., b_m);
// r >= 1 gives (a_j - b_r + 1) over (b_j - b_r + 1) with 2 - b_r at slot r.
SeriesParameters solution_parameters(int r, const ParameterSet& p);

// Shifted parameter vectors of the quadratic identity:
//   upper_j = 1 + sign (a_j - b_r)   (j = 1..m+1, a_{m+1} = a_0)
//   lower_l = 1 + sign (b_l - b_r)   (l != r), slot r = 2 - sign * b_r.
SeriesParameters corollary_parameters(int r, int sign, const ParameterSet& p);

// Deterministic-from-seed generic draw: Re in (-1, 1), Im in (-0.3, 0.3),
// resampled until validate() is empty and additionally a_i - a_j is not
// within delta of an integer. Throws ExhaustionError after 10000 attempts.
ParameterSet random_generic(int m, std::uint64_t seed,
                            double delta = kIntegerProximityTol);

} // namespace mfm
