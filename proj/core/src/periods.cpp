#include "mfm/periods.hpp"

#include <cmath>
#include <stdexcept>

namespace mfm {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void check_x(double x, int m, const char* what) {
    if (!(x > 0.0) || x > x_max(m)) {
        throw std::invalid_argument(std::string(what) + ": x must lie in (0, x_max(m)]");
    }
}

} // namespace

std::string identity_name(Identity id) {
    switch (id) {
        case Identity::tpr_00: return "tpr_00";
        case Identity::corollary_52: return "corollary_52";
        case Identity::euler_integral: return "euler_integral";
        default: return "beta_product";
    }
}

VerificationReport make_report(Identity id, Complex lhs, Complex rhs, double tol,
                               int m, double x, std::uint64_t seed) {
    VerificationReport r;
    r.identity = id;
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_residual = std::abs(lhs - rhs);
    r.rel_residual = r.abs_residual /
                     std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    r.tol = tol;
    r.pass = r.rel_residual <= tol;
    r.m = m;
    r.x = x;
    r.seed = seed;
    return r;
}

double x_max(int m) {
    return (1.0 / 3.0) * std::pow(0.75, m - 1);
}

Complex gamma_prefactor(int k, const ParameterSet& p) {
    check_shape(p);
    if (k < 0 || k > p.m) {
        throw std::invalid_argument("gamma_prefactor: k out of range");
    }
    Complex log_sum(0.0, 0.0);
    if (k == 0) {
        for (int i = 1; i <= p.m; ++i) {
            log_sum += log_gamma(p.a[i]) + log_gamma(p.b[i] - p.a[i]) -
                       log_gamma(p.b[i]);
        }
        return std::exp(log_sum);
    }
    const int r = k;
    log_sum += log_gamma(p.b[r] - 1.0) + log_gamma(1.0 - p.a[0]) -
               log_gamma(p.b[r] - p.a[0]);
    for (int j = 1; j <= p.m; ++j) {
        if (j == r) continue;
        log_sum += log_gamma(p.a[j] - p.b[r] + 1.0) + log_gamma(p.b[j] - p.a[j]) -
                   log_gamma(p.b[j] - p.b[r] + 1.0);
    }
    const Complex phase = std::exp(Complex(0.0, -kPi) * (p.b[r] - p.a[r] - 1.0));
    if (log_sum.real() > 709.0) {
        throw OverflowError("gamma_prefactor: product exceeds the double range");
    }
    return phase * std::exp(log_sum);
}

Complex period_entry(int k, const ParameterSet& p, double x, double tol) {
    check_x(x, p.m, "period_entry");
    return gamma_prefactor(k, p) *
           fundamental_solution(k, p, Complex(x, 0.0), tol).value;
}

Complex dual_period_entry(int k, const ParameterSet& p, double x, double tol) {
    return period_entry(k, negate(p), x, tol);
}

PeriodRow period_row(const ParameterSet& p, double x, bool dual, double tol) {
    check_x(x, p.m, "period_row");
    const ParameterSet q = dual ? negate(p) : p;
    PeriodRow row;
    row.dual = dual;
    row.x = x;
    for (int k = 0; k <= q.m; ++k) {
        const Complex pref = gamma_prefactor(k, q);
        const SeriesValue sv = fundamental_solution(k, q, Complex(x, 0.0), tol);
        row.entries.push_back(pref * sv.value);
        row.tail_bound = std::max(row.tail_bound, std::abs(pref) * sv.tail_bound);
    }
    return row;
}

VerificationReport tpr_residual_00(const ParameterSet& p, double x, double tol) {
    check_shape(p);
    check_x(x, p.m, "tpr_residual_00");
    const Complex lhs =
        cohomology_pairing({CocycleFamily::phi, 0}, {CocycleFamily::phi, 0}, p);
    Complex rhs(0.0, 0.0);
    for (int k = 0; k <= p.m; ++k) {
        rhs += period_entry(k, p, x, tol) * dual_period_entry(k, p, x, tol) /
               homology_self(k, p);
    }
    return make_report(Identity::tpr_00, lhs, rhs, kTprTol, p.m, x);
}

VerificationReport corollary_residual(const ParameterSet& p, double x, double tol) {
    check_shape(p);
    check_x(x, p.m, "corollary_residual");
    for (int r = 1; r <= p.m; ++r) {
        if (near_integer(p.b[r]) && std::abs(std::round(p.b[r].real())) <= 1.0) {
            throw DegenerateParameterError(
                "corollary_residual: b_r within tolerance of {0, +1, -1}");
        }
    }
    Complex lhs(1.0, 0.0);
    for (int l = 1; l <= p.m; ++l) {
        lhs *= (p.b[l] - p.b[0]) / (p.a[l] - p.b[0]);
    }

    const Complex fx(x, 0.0);
    Complex rhs(1.0, 0.0);
    for (int l = 1; l <= p.m; ++l) {
        rhs *= p.b[l] / p.a[l];
    }
    rhs *= ghf(solution_parameters(0, p), fx, tol).value *
           ghf(solution_parameters(0, negate(p)), fx, tol).value;

    for (int r = 1; r <= p.m; ++r) {
        const Complex br = p.b[r];
        Complex coef = (x * x) * p.a[0] * (p.a[0] - br) * (br - p.a[r]) /
                       (br * (br * br - 1.0));
        for (int l = 1; l <= p.m; ++l) {
            if (l == r) continue;
            coef *= (p.a[l] - br) / (p.b[l] - br);
        }
        coef *= ghf(corollary_parameters(r, +1, p), fx, tol).value *
                ghf(corollary_parameters(r, -1, p), fx, tol).value;
        rhs += coef;
    }
    return make_report(Identity::corollary_52, lhs, rhs, kCorollaryTol, p.m, x);
}

} // namespace mfm
