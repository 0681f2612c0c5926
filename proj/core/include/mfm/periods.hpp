#pragma once

// Closed-form period values of the twisted cycles against the distinguished
// cocycle, assembly of period rows, and residual checks of the twisted
// period relation at entry (0,0) and of its quadratic-identity reduction.

#include <cstdint>
#include <string>

#include "mfm/intersection.hpp"
#include "mfm/series.hpp"

namespace mfm {

inline constexpr double kTprTol = 1e-8;
inline constexpr double kCorollaryTol = 1e-9;

enum class Identity { tpr_00, corollary_52, euler_integral, beta_product };

std::string identity_name(Identity id);

struct VerificationReport {
    Identity identity;
    Complex lhs;
    Complex rhs;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    // metadata
    int m = 0;
    double x = 0.0;
    std::uint64_t seed = 0;
};

VerificationReport make_report(Identity id, Complex lhs, Complex rhs, double tol,
                               int m, double x, std::uint64_t seed = 0);

struct PeriodRow {
    std::vector<Complex> entries; // index k = cycle index
    bool dual = false;
    double x = 0.0;
    double tail_bound = 0.0; // max over entries
};

// Largest x at which the cycle construction behind the period formulas is
// guaranteed: (1/3) (3/4)^{m-1}.
double x_max(int m);

// Gamma-product prefactor of the k-th period entry; k >= 1 carries the
// unit-modulus phase e^{-pi i (b_k - a_k - 1)}.
// Throws PoleError naming the offending Gamma argument.
Complex gamma_prefactor(int k, const ParameterSet& p);

// gamma_prefactor(k, p) * fundamental_solution(k, p, x, tol).
Complex period_entry(int k, const ParameterSet& p, double x,
                     double tol = kDefaultSeriesTol);

// Same entry for the dual local system: all parameters negated.
Complex dual_period_entry(int k, const ParameterSet& p, double x,
                          double tol = kDefaultSeriesTol);

PeriodRow period_row(const ParameterSet& p, double x, bool dual,
                     double tol = kDefaultSeriesTol);

// Residual of the period relation at entry (0,0): the diagonal phi pairing
// against the homology-weighted sum of primal times dual period entries.
VerificationReport tpr_residual_00(const ParameterSet& p, double x,
                                   double tol = kDefaultSeriesTol);

// Residual of the quadratic series identity obtained from the (0,0) relation.
// Throws DegenerateParameterError when some b_r is within tolerance of
// {0, +1, -1}.
VerificationReport corollary_residual(const ParameterSet& p, double x,
                                      double tol = kDefaultSeriesTol);

} // namespace mfm
