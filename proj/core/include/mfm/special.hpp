#pragma once

// Complex gamma machinery and elementary complex helpers shared by the
// whole library. All functions are pure and thread-safe.

#include <complex>

#include "mfm/errors.hpp"

namespace mfm {

using Complex = std::complex<double>;

// Tolerance below which a complex number counts as an integer: w is treated
// as integral iff |Im w| < delta and dist(Re w, Z) < delta.
inline constexpr double kIntegerProximityTol = 1e-8;

bool near_integer(Complex w, double delta = kIntegerProximityTol);
bool near_nonpositive_integer(Complex z, double delta = kIntegerProximityTol);

// Principal-branch log Gamma. Lanczos approximation for Re z >= 0.5,
// reflection formula otherwise. Relative accuracy <= 1e-13 for Re z > 0.
// Throws PoleError within kIntegerProximityTol of a nonpositive integer.
Complex log_gamma(Complex z);

// Gamma(z) = exp(log_gamma(z)). Throws PoleError near poles and
// OverflowError when |Gamma(z)| is not representable.
Complex gamma(Complex z);

// Rising factorial (c)_n = c (c+1) ... (c+n-1), computed as a direct
// product so it stays finite at poles of Gamma. (c)_0 = 1 exactly.
Complex pochhammer(Complex c, int n);

// e^{2 pi i c}.
Complex unit_circle_exp(Complex c);

} // namespace mfm
