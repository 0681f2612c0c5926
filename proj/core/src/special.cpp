#include "mfm/special.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

namespace mfm {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;

// Lanczos g = 7 coefficient set (9 terms, extended-precision digits).
constexpr double kLanczos7[9] = {
    0.99999999999980993227684700473478,
    676.520368121885098567009190444019,
    -1259.13921672240287047156078755283,
    771.3234287776530788486528258894,
    -176.61502916214059906584551354,
    12.507343278686904814458936853,
    -0.13857109526572011689554707,
    9.984369578019570859563e-6,
    1.50563273514931155834e-7,
};

// Valid for Re z >= 0.5.
Complex lanczos_log_gamma(Complex z) {
    const Complex w = z - 1.0;
    Complex s = kLanczos7[0];
    for (int k = 1; k < 9; ++k) {
        s += kLanczos7[k] / (w + static_cast<double>(k));
    }
    const Complex t = w + 7.5;
    return (w + 0.5) * std::log(t) - t + (kLogSqrt2Pi + std::log(s));
}

std::string describe(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
    return os.str();
}

} // namespace

bool near_integer(Complex w, double delta) {
    return std::abs(w.imag()) < delta &&
           std::abs(w.real() - std::round(w.real())) < delta;
}

bool near_nonpositive_integer(Complex z, double delta) {
    return near_integer(z, delta) && std::round(z.real()) <= 0.0;
}

Complex log_gamma(Complex z) {
    if (near_nonpositive_integer(z)) {
        throw PoleError("log_gamma: argument " + describe(z) +
                        " is within tolerance of a nonpositive integer");
    }
    if (z.real() >= 0.5) {
        return lanczos_log_gamma(z);
    }
    // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
    return std::log(Complex(kPi)) - std::log(std::sin(kPi * z)) -
           lanczos_log_gamma(1.0 - z);
}

Complex gamma(Complex z) {
    const Complex lg = log_gamma(z);
    if (std::abs(lg.real()) > 709.0) {
        throw OverflowError("gamma: |log Gamma" + describe(z) +
                            "| exceeds the double exponent range");
    }
    return std::exp(lg);
}

Complex pochhammer(Complex c, int n) {
    assert(n >= 0);
    Complex prod = 1.0;
    for (int k = 0; k < n; ++k) {
        prod *= c + static_cast<double>(k);
    }
    return prod;
}

Complex unit_circle_exp(Complex c) {
    const double theta = 2.0 * kPi * c.real();
    const double radius = std::exp(-2.0 * kPi * c.imag());
    return Complex(radius * std::cos(theta), radius * std::sin(theta));
}

} // namespace mfm
