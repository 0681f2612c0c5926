#pragma once

#include <complex>
#include <random>

#include "mfm/parameters.hpp"

namespace mfm_test {

using mfm::Complex;

inline double rel_err(Complex got, Complex want) {
    const double scale = std::max(std::abs(got), std::abs(want));
    return scale == 0.0 ? std::abs(got - want) : std::abs(got - want) / scale;
}

// Fixed m=1 set used across suites: a = (1/3, 1/2), b = (0, 1/5).
inline mfm::ParameterSet m1_params() {
    mfm::ParameterSet p;
    p.m = 1;
    p.a = {Complex(1.0 / 3.0, 0.0), Complex(0.5, 0.0)};
    p.b = {Complex(0.0, 0.0), Complex(0.2, 0.0)};
    return p;
}

// Deterministic complex draw for hand-rolled property tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(engine_() >> 11) * 0x1.0p-53);
    }

    Complex complex(double re_lo, double re_hi, double im_lo, double im_hi) {
        const double re = uniform(re_lo, re_hi);
        return {re, uniform(im_lo, im_hi)};
    }

private:
    std::mt19937_64 engine_;
};

} // namespace mfm_test
