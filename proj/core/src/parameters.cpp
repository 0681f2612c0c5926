#include "mfm/parameters.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace mfm {

void check_shape(const ParameterSet& p) {
    if (p.m < 1) {
        throw std::invalid_argument("ParameterSet: m must be >= 1");
    }
    const auto n = static_cast<std::size_t>(p.m) + 1;
    if (p.a.size() != n || p.b.size() != n) {
        throw std::invalid_argument("ParameterSet: a and b must have m+1 entries");
    }
    if (p.b[0] != Complex(0.0, 0.0)) {
        throw std::invalid_argument("ParameterSet: b_0 must be exactly 0");
    }
}

std::vector<Violation> validate(const ParameterSet& p, double delta) {
    check_shape(p);
    std::vector<Violation> out;
    for (int i = 0; i <= p.m; ++i) {
        for (int j = 0; j <= p.m; ++j) {
            const Complex d = p.a[i] - p.b[j];
            if (near_integer(d, delta)) {
                out.push_back({ViolationKind::ab_integer, i, j, d});
            }
        }
    }
    for (int i = 0; i <= p.m; ++i) {
        for (int j = i + 1; j <= p.m; ++j) {
            const Complex d = p.b[i] - p.b[j];
            if (near_integer(d, delta)) {
                out.push_back({ViolationKind::bb_integer, i, j, d});
            }
        }
    }
    return out;
}

ExponentSet exponents(const ParameterSet& p) {
    check_shape(p);
    ExponentSet e;
    const int n = p.m + 1;
    e.lambda.resize(n);
    e.mu.resize(n);
    e.alpha.resize(n);
    e.beta.resize(n);
    for (int j = 0; j < n; ++j) {
        e.lambda[j] = p.a[j] - p.b[(j + 1) % n];
        e.mu[j] = p.b[j] - p.a[j];
        e.alpha[j] = unit_circle_exp(p.a[j]);
        e.beta[j] = unit_circle_exp(p.b[j]);
    }
    return e;
}

ParameterSet negate(const ParameterSet& p) {
    check_shape(p);
    ParameterSet q;
    q.m = p.m;
    q.a.reserve(p.a.size());
    q.b.reserve(p.b.size());
    for (const Complex& v : p.a) q.a.push_back(-v);
    for (const Complex& v : p.b) q.b.push_back(-v);
    q.b[0] = Complex(0.0, 0.0); // keep +0 rather than -0
    return q;
}

SeriesParameters solution_parameters(int r, const ParameterSet& p) {
    check_shape(p);
    if (r < 0 || r > p.m) {
        throw std::invalid_argument("solution_parameters: r out of range");
    }
    SeriesParameters sp;
    if (r == 0) {
        for (int j = 1; j <= p.m; ++j) sp.upper.push_back(p.a[j]);
        sp.upper.push_back(p.a[0]); // a_{m+1} = a_0
        for (int j = 1; j <= p.m; ++j) sp.lower.push_back(p.b[j]);
        return sp;
    }
    const Complex br = p.b[r];
    for (int j = 0; j <= p.m; ++j) sp.upper.push_back(p.a[j] - br + 1.0);
    for (int j = 1; j <= p.m; ++j) {
        sp.lower.push_back(j == r ? 2.0 - br : p.b[j] - br + 1.0);
    }
    return sp;
}

SeriesParameters corollary_parameters(int r, int sign, const ParameterSet& p) {
    check_shape(p);
    if (r < 1 || r > p.m) {
        throw std::invalid_argument("corollary_parameters: r out of range");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("corollary_parameters: sign must be +1 or -1");
    }
    const double s = static_cast<double>(sign);
    const Complex br = p.b[r];
    SeriesParameters sp;
    for (int j = 1; j <= p.m; ++j) sp.upper.push_back(1.0 + s * (p.a[j] - br));
    sp.upper.push_back(1.0 + s * (p.a[0] - br));
    for (int l = 1; l <= p.m; ++l) {
        // Slot r carries the shift (+-1 - b_r), sign matching the outer one,
        // so it collapses to 2 - sign * b_r.
        sp.lower.push_back(l == r ? 2.0 - s * br : 1.0 + s * (p.b[l] - br));
    }
    return sp;
}

namespace {

// Uniform double in [0, 1) from the top 53 bits; identical on every platform,
// unlike std::uniform_real_distribution.
double canonical(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

double span(std::mt19937_64& engine, double lo, double hi) {
    return lo + (hi - lo) * canonical(engine);
}

} // namespace

ParameterSet random_generic(int m, std::uint64_t seed, double delta) {
    if (m < 1) {
        throw std::invalid_argument("random_generic: m must be >= 1");
    }
    std::mt19937_64 engine(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        ParameterSet p;
        p.m = m;
        for (int j = 0; j <= m; ++j) {
            p.a.emplace_back(span(engine, -1.0, 1.0), span(engine, -0.3, 0.3));
        }
        p.b.emplace_back(0.0, 0.0);
        for (int j = 1; j <= m; ++j) {
            p.b.emplace_back(span(engine, -1.0, 1.0), span(engine, -0.3, 0.3));
        }
        if (!validate(p, delta).empty()) continue;
        bool aa_ok = true;
        for (int i = 0; i <= m && aa_ok; ++i) {
            for (int j = i + 1; j <= m && aa_ok; ++j) {
                if (near_integer(p.a[i] - p.a[j], delta)) aa_ok = false;
            }
        }
        if (aa_ok) return p;
    }
    throw ExhaustionError("random_generic: no admissible draw in 10000 attempts (m=" +
                          std::to_string(m) + ")");
}

} // namespace mfm
