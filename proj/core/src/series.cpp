#include "mfm/series.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mfm {

SeriesValue ghf(std::span<const Complex> upper, std::span<const Complex> lower,
                Complex x, double tol) {
    if (upper.size() != lower.size() + 1) {
        throw std::invalid_argument("ghf: expected m+1 upper and m lower parameters");
    }
    if (std::abs(x) > 0.9) {
        throw std::invalid_argument("ghf: |x| must be <= 0.9");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("ghf: tol must be positive");
    }
    for (const Complex& l : lower) {
        if (near_nonpositive_integer(l)) {
            std::ostringstream os;
            os << "ghf: lower parameter (" << l.real() << "," << l.imag()
               << ") is at a nonpositive integer";
            throw LowerParameterPoleError(os.str());
        }
    }
    if (x == Complex(0.0, 0.0)) {
        return {Complex(1.0, 0.0), 1, 0.0};
    }

    double upper_mag = 0.0;
    for (const Complex& u : upper) upper_mag = std::max(upper_mag, std::abs(u));
    double lower_mag = 0.0;
    for (const Complex& l : lower) lower_mag = std::max(lower_mag, std::abs(l));

    const double ax = std::abs(x);
    const auto mp1 = static_cast<int>(upper.size());

    Complex term(1.0, 0.0);
    Complex sum = term;
    for (int n = 0; n < kSeriesTermCap; ++n) {
        // Certified bound on |t_{k+1}/t_k| for every k >= n, monotone in n;
        // valid once n clears the largest lower-parameter modulus.
        if (static_cast<double>(n) > 2.0 * lower_mag && n > 0) {
            const double dn = static_cast<double>(n);
            const double rho = ax * std::pow(1.0 + upper_mag / dn, mp1) /
                               std::pow(1.0 - lower_mag / dn, mp1 - 1);
            if (rho < 1.0) {
                const double tail = std::abs(term) * rho / (1.0 - rho);
                if (tail <= tol) {
                    return {sum, n + 1, tail};
                }
            }
        }
        Complex ratio = x / static_cast<double>(n + 1);
        for (const Complex& u : upper) ratio *= u + static_cast<double>(n);
        for (const Complex& l : lower) ratio /= l + static_cast<double>(n);
        term *= ratio;
        if (term == Complex(0.0, 0.0)) {
            return {sum, n + 2, 0.0};
        }
        sum += term;
    }
    throw NonConvergenceError("ghf: term cap reached before the tail bound met tol");
}

SeriesValue ghf(const SeriesParameters& sp, Complex x, double tol) {
    return ghf(std::span<const Complex>(sp.upper), std::span<const Complex>(sp.lower),
               x, tol);
}

SeriesValue fundamental_solution(int k, const ParameterSet& p, Complex x,
                                 double tol) {
    check_shape(p);
    if (k < 0 || k > p.m) {
        throw std::invalid_argument("fundamental_solution: k out of range");
    }
    const SeriesParameters sp = solution_parameters(k, p);
    if (k == 0) {
        return ghf(sp, x, tol);
    }
    if (x.imag() != 0.0 || x.real() <= 0.0 || x.real() >= 1.0) {
        throw BranchError("fundamental_solution: x must be real in (0, 1) for k >= 1");
    }
    // Principal branch x^{1-b_k} with real log, well defined on (0, 1).
    const Complex power = std::exp((1.0 - p.b[k]) * std::log(x.real()));
    SeriesValue sv = ghf(sp, x, tol);
    sv.value *= power;
    sv.tail_bound *= std::abs(power);
    return sv;
}

} // namespace mfm
