#pragma once

// Direct numerical evaluation of unit-cube integrals with endpoint
// singularities z^p (1-z)^q on each axis, via tensor-product tanh-sinh
// (double-exponential) quadrature. Cross-checks the Euler-type integral
// representation and the shifted beta-product identities against the
// gamma and series modules.

#include <optional>

#include "mfm/periods.hpp"

namespace mfm {

inline constexpr int kQuadratureMaxDim = 3;
inline constexpr int kQuadratureMaxLevel = 12;
inline constexpr double kBetaProductTol = 1e-7;

// Identity tolerance of the Euler-integral check: 1e-6 through dimension 2,
// 1e-5 at dimension 3.
double euler_integral_tol(int m);

// Per-axis factor z^p (1-z)^q.
struct AxisExponents {
    Complex p;
    Complex q;
};

// Optional coupling factor (1 - x z_1 ... z_m)^s with real x in (0, 1).
struct Coupling {
    double x;
    Complex s;
};

struct CubeIntegrand {
    int m = 0;
    std::vector<AxisExponents> axes;
    std::optional<Coupling> coupling;
};

struct TanhSinhNode {
    double z;               // abscissa in (0, 1)
    double one_minus_z;     // 1 - z, computed without cancellation
    double weight;
};

// Nodes and weights for step 2^{-level}, truncated where
// weight * min(z, 1-z)^{worst_exponent} drops below 1e-18. Node order is
// fixed (center outward), so summation is deterministic.
std::vector<TanhSinhNode> tanh_sinh_nodes(int level, double worst_exponent);

// Tensor-product estimate at the given level; callers compare successive
// levels for convergence. Throws DimensionError (m > 3) and
// IntegrabilityError (Re p or Re q <= -1).
Complex cube_integral(const CubeIntegrand& f, int level);

// Deterministic real-parameter draw for the quadrature checks:
// a_i and b_i - a_i in (0.2, 0.9) for every i, revalidated against the
// non-integrality condition at the supplied tolerance.
ParameterSet random_euler_parameters(int m, std::uint64_t seed,
                                     double delta = 0.05);

// Quadrature of prod z_i^{a_i+n-1}(1-z_i)^{b_i-a_i-1} against the closed
// Gamma product, at the default level for dimension p.m when level == 0.
VerificationReport beta_product_check(const ParameterSet& p, int n,
                                      int level = 0);

// Quadrature of the Euler-type integrand against Gamma prefactor times the
// series. Requires Re a_i > 0 and Re(b_i - a_i) > 0 for 1 <= i <= m
// (ParameterRangeError otherwise) and real x in [0, 1).
VerificationReport euler_integral_check(const ParameterSet& p, double x,
                                        int level = 0);

} // namespace mfm
