#include "mfm/quadrature.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace mfm {

namespace {

constexpr double kHalfPi = 1.57079632679489661923132169163975144;
constexpr double kQuarterPi = 0.78539816339744830961566084581987572;
constexpr double kTruncationFloor = 1e-18;
constexpr double kMaxAbscissaParam = 7.0;

int default_level(int m) {
    switch (m) {
        case 1: return 8;
        case 2: return 6;
        default: return 5;
    }
}

// z^p (1-z)^q with 1-z supplied separately so the factor stays accurate at
// both endpoints.
Complex axis_factor(const TanhSinhNode& node, const AxisExponents& e) {
    const Complex expo = e.p * std::log(node.z) + e.q * std::log(node.one_minus_z);
    return std::exp(expo) * node.weight;
}

void check_integrand(const CubeIntegrand& f) {
    if (f.m > kQuadratureMaxDim) {
        throw DimensionError("cube_integral: dimension " + std::to_string(f.m) +
                             " exceeds the cap of 3");
    }
    if (f.m < 1 || f.axes.size() != static_cast<std::size_t>(f.m)) {
        throw std::invalid_argument("cube_integral: axes must have m entries, m >= 1");
    }
    for (const AxisExponents& e : f.axes) {
        if (e.p.real() <= -1.0 || e.q.real() <= -1.0) {
            throw IntegrabilityError(
                "cube_integral: endpoint exponent real part <= -1 is not integrable");
        }
    }
    if (f.coupling && !(f.coupling->x > 0.0 && f.coupling->x < 1.0)) {
        throw std::invalid_argument("cube_integral: coupling requires 0 < x < 1");
    }
}

} // namespace

double euler_integral_tol(int m) {
    return m <= 2 ? 1e-6 : 1e-5;
}

ParameterSet random_euler_parameters(int m, std::uint64_t seed, double delta) {
    if (m < 1) {
        throw std::invalid_argument("random_euler_parameters: m must be >= 1");
    }
    std::mt19937_64 engine(seed);
    auto draw = [&engine]() {
        return 0.2 + 0.7 * (static_cast<double>(engine() >> 11) * 0x1.0p-53);
    };
    for (int attempt = 0; attempt < 10000; ++attempt) {
        ParameterSet p;
        p.m = m;
        p.a.emplace_back(draw(), 0.0);
        p.b.emplace_back(0.0, 0.0);
        for (int i = 1; i <= m; ++i) {
            const double ai = draw();
            p.a.emplace_back(ai, 0.0);
            p.b.emplace_back(ai + draw(), 0.0);
        }
        if (validate(p, delta).empty()) return p;
    }
    throw ExhaustionError("random_euler_parameters: no admissible draw in 10000 attempts");
}

std::vector<TanhSinhNode> tanh_sinh_nodes(int level, double worst_exponent) {
    if (level < 1 || level > kQuadratureMaxLevel) {
        throw std::invalid_argument("tanh_sinh_nodes: level must be in 1..12");
    }
    const double h = std::pow(0.5, level);
    std::vector<TanhSinhNode> nodes;
    nodes.push_back({0.5, 0.5, h * kQuarterPi});
    for (int k = 1;; ++k) {
        const double t = h * static_cast<double>(k);
        if (t > kMaxAbscissaParam) break;
        const double u = kHalfPi * std::sinh(t);
        const double cu = std::cosh(u);
        const double w = h * kQuarterPi * std::cosh(t) / (cu * cu);
        const double znear = 1.0 / (1.0 + std::exp(2.0 * u)); // min(z, 1-z)
        if (w == 0.0 || znear == 0.0) break;
        if (w * std::pow(znear, worst_exponent) < kTruncationFloor) break;
        nodes.push_back({1.0 - znear, znear, w});
        nodes.push_back({znear, 1.0 - znear, w});
    }
    return nodes;
}

Complex cube_integral(const CubeIntegrand& f, int level) {
    check_integrand(f);
    if (level < 1 || level > kQuadratureMaxLevel) {
        throw std::invalid_argument("cube_integral: level must be in 1..12");
    }
    double worst = 0.0;
    for (const AxisExponents& e : f.axes) {
        worst = std::min({worst, e.p.real(), e.q.real()});
    }
    const std::vector<TanhSinhNode> nodes = tanh_sinh_nodes(level, worst);
    const std::size_t n = nodes.size();

    std::vector<std::vector<Complex>> fac(f.axes.size());
    for (std::size_t axis = 0; axis < f.axes.size(); ++axis) {
        fac[axis].reserve(n);
        for (const TanhSinhNode& node : nodes) {
            fac[axis].push_back(axis_factor(node, f.axes[axis]));
        }
    }

    const bool coupled = f.coupling.has_value();
    const double cx = coupled ? f.coupling->x : 0.0;
    const Complex cs = coupled ? f.coupling->s : Complex(0.0, 0.0);
    auto coupling_factor = [&](double zprod) -> Complex {
        const double base_log = std::log1p(-cx * zprod);
        return std::exp(cs * base_log);
    };

    Complex sum(0.0, 0.0);
    if (f.m == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            Complex v = fac[0][i];
            if (coupled) v *= coupling_factor(nodes[i].z);
            sum += v;
        }
    } else if (f.m == 2) {
        for (std::size_t i = 0; i < n; ++i) {
            const double zi = nodes[i].z;
            Complex inner(0.0, 0.0);
            for (std::size_t j = 0; j < n; ++j) {
                Complex v = fac[1][j];
                if (coupled) v *= coupling_factor(zi * nodes[j].z);
                inner += v;
            }
            sum += fac[0][i] * inner;
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const double zi = nodes[i].z;
            Complex outer(0.0, 0.0);
            for (std::size_t j = 0; j < n; ++j) {
                const double zij = zi * nodes[j].z;
                Complex inner(0.0, 0.0);
                for (std::size_t k = 0; k < n; ++k) {
                    Complex v = fac[2][k];
                    if (coupled) v *= coupling_factor(zij * nodes[k].z);
                    inner += v;
                }
                outer += fac[1][j] * inner;
            }
            sum += fac[0][i] * outer;
        }
    }
    return sum;
}

VerificationReport beta_product_check(const ParameterSet& p, int n, int level) {
    check_shape(p);
    if (n < 0) {
        throw std::invalid_argument("beta_product_check: n must be nonnegative");
    }
    if (p.m > kQuadratureMaxDim) {
        throw DimensionError("beta_product_check: m exceeds the quadrature cap of 3");
    }
    if (level == 0) level = default_level(p.m);

    CubeIntegrand f;
    f.m = p.m;
    const double shift = static_cast<double>(n);
    for (int i = 1; i <= p.m; ++i) {
        f.axes.push_back({p.a[i] + shift - 1.0, p.b[i] - p.a[i] - 1.0});
    }
    const Complex lhs = cube_integral(f, level);

    Complex log_sum(0.0, 0.0);
    for (int i = 1; i <= p.m; ++i) {
        log_sum += log_gamma(p.a[i] + shift) + log_gamma(p.b[i] - p.a[i]) -
                   log_gamma(p.b[i] + shift);
    }
    const Complex rhs = std::exp(log_sum);
    return make_report(Identity::beta_product, lhs, rhs, kBetaProductTol, p.m, 0.0);
}

VerificationReport euler_integral_check(const ParameterSet& p, double x, int level) {
    check_shape(p);
    if (p.m > kQuadratureMaxDim) {
        throw DimensionError("euler_integral_check: m exceeds the quadrature cap of 3");
    }
    if (!(x >= 0.0) || x >= 1.0) {
        throw std::invalid_argument("euler_integral_check: x must lie in [0, 1)");
    }
    for (int i = 1; i <= p.m; ++i) {
        if (p.a[i].real() <= 0.0 || (p.b[i] - p.a[i]).real() <= 0.0) {
            throw ParameterRangeError(
                "euler_integral_check: requires Re a_i > 0 and Re(b_i - a_i) > 0");
        }
    }
    if (level == 0) level = default_level(p.m);

    CubeIntegrand f;
    f.m = p.m;
    for (int i = 1; i <= p.m; ++i) {
        f.axes.push_back({p.a[i] - 1.0, p.b[i] - p.a[i] - 1.0});
    }
    if (x > 0.0) {
        f.coupling = Coupling{x, -p.a[0]};
    }
    const Complex lhs = cube_integral(f, level);

    const std::vector<Complex> upper = p.a;
    const std::vector<Complex> lower(p.b.begin() + 1, p.b.end());
    const Complex series = ghf(std::span<const Complex>(upper),
                               std::span<const Complex>(lower), Complex(x, 0.0))
                               .value;
    const Complex rhs = gamma_prefactor(0, p) * series;
    return make_report(Identity::euler_integral, lhs, rhs, euler_integral_tol(p.m),
                       p.m, x);
}

} // namespace mfm
