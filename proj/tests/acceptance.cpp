// Acceptance suite: every identity the library claims to verify is exercised
// end to end at its pinned tolerance, one line of output per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "mfm/quadrature.hpp"

namespace {

using mfm::Complex;

struct Criterion {
    Criterion(std::string label_, double tol_)
        : label(std::move(label_)), tol(tol_) {}

    std::string label;
    double tol = 0.0;
    double worst = 0.0;
    int runs = 0;
    bool pass = true;
    std::string note;

    void record(double rel) {
        ++runs;
        worst = std::max(worst, rel);
        if (rel > tol) pass = false;
    }
    void record_exact(bool ok) {
        ++runs;
        if (!ok) pass = false;
    }
};

double rel_diff(Complex got, Complex want) {
    const double scale = std::max(std::abs(got), std::abs(want));
    return scale == 0.0 ? std::abs(got - want) : std::abs(got - want) / scale;
}

constexpr double kDrawMargin = 0.05;
constexpr std::uint64_t kBaseSeed = 1;

std::uint64_t sweep_seed(int m, int i) {
    return kBaseSeed + 1000 * static_cast<std::uint64_t>(m) + i;
}

std::vector<double> sweep_xs(int m) {
    return {0.05, 0.1, std::min(0.2, mfm::x_max(m))};
}

// 1. Twisted period relation at entry (0,0).
Criterion criterion_tpr() {
    Criterion c{"twisted period relation (0,0), m=1..4 x 20 seeds x 3 x", 1e-8};
    for (int m = 1; m <= 4; ++m) {
        for (int i = 0; i < 20; ++i) {
            const mfm::ParameterSet p =
                mfm::random_generic(m, sweep_seed(m, i), kDrawMargin);
            for (double x : sweep_xs(m)) {
                c.record(mfm::tpr_residual_00(p, x, 1e-14).rel_residual);
            }
        }
    }
    return c;
}

// 2. Quadratic identity reduction of the same relation.
Criterion criterion_corollary() {
    Criterion c{"quadratic series identity, same sweep", 1e-9};
    for (int m = 1; m <= 4; ++m) {
        for (int i = 0; i < 20; ++i) {
            const mfm::ParameterSet p =
                mfm::random_generic(m, sweep_seed(m, i), kDrawMargin);
            for (double x : sweep_xs(m)) {
                c.record(mfm::corollary_residual(p, x, 1e-14).rel_residual);
            }
        }
    }
    return c;
}

// 3. Brute-force subset sums equal the closed diagonal product.
Criterion criterion_subset_sum() {
    Criterion c{"subset-sum identity, m=1..8, all k, 20 seeds", 1e-10};
    for (int m = 1; m <= 8; ++m) {
        for (int i = 0; i < 20; ++i) {
            const mfm::ParameterSet p =
                mfm::random_generic(m, sweep_seed(m, i), kDrawMargin);
            for (int k = 0; k <= m; ++k) {
                Complex closed(1.0, 0.0);
                for (int l = 0; l <= m; ++l) {
                    if (l == k) continue;
                    closed *= (p.b[l] - p.b[k]) /
                              ((p.a[l] - p.b[k]) * (p.b[l] - p.a[l]));
                }
                c.record(rel_diff(mfm::subset_sum_oracle(k, p), closed));
            }
        }
    }
    return c;
}

// 4. Determinant closed form against LU of the diagonal matrix.
Criterion criterion_det() {
    Criterion c{"det(C) closed form, m=1..5 x 50 seeds", 1e-10};
    for (int m = 1; m <= 5; ++m) {
        for (int i = 0; i < 50; ++i) {
            const mfm::ParameterSet p =
                mfm::random_generic(m, sweep_seed(m, i), kDrawMargin);
            const Complex lu = mfm::determinant(
                mfm::cohomology_matrix(p, mfm::MatrixKind::cohomology_phi));
            c.record(rel_diff(lu, mfm::det_c_closed_form(p)));
        }
    }
    return c;
}

// 5. Euler-type integral representation against quadrature.
Criterion criterion_euler() {
    Criterion c{"Euler integral representation, m=1..3, x in {0,0.1,0.25}", 1e-5};
    double worst_low_dim = 0.0;
    for (int m = 1; m <= 3; ++m) {
        const double tol = mfm::euler_integral_tol(m);
        for (int i = 0; i < 3; ++i) {
            const mfm::ParameterSet p =
                mfm::random_euler_parameters(m, sweep_seed(m, i));
            for (double x : {0.0, 0.1, 0.25}) {
                const auto r = mfm::euler_integral_check(p, x);
                ++c.runs;
                if (r.rel_residual > tol) c.pass = false;
                if (m <= 2) {
                    worst_low_dim = std::max(worst_low_dim, r.rel_residual);
                } else {
                    c.worst = std::max(c.worst, r.rel_residual);
                }
            }
        }
    }
    c.note = "m<=2 worst " + std::to_string(worst_low_dim) + " (tol 1e-6)";
    return c;
}

// 6. Shifted beta-product identities against quadrature.
Criterion criterion_beta() {
    Criterion c{"beta-product identities, n in {0,1,3}, m in {1,2}", 1e-7};
    for (int m = 1; m <= 2; ++m) {
        for (int i = 0; i < 3; ++i) {
            const mfm::ParameterSet p =
                mfm::random_euler_parameters(m, sweep_seed(m, 50 + i));
            for (int n : {0, 1, 3}) {
                c.record(mfm::beta_product_check(p, n).rel_residual);
            }
        }
    }
    return c;
}

// 7. Special-function unit suite: Gamma identities, the logarithmic Gauss
// value, and the termwise operator recurrence on every solution's series.
Criterion criterion_special() {
    Criterion c{"special-function suite (Gamma, log closed form, operator)", 1e-12};
    constexpr double kPi = 3.14159265358979323846264338327950288;
    std::mt19937_64 engine(2026);
    auto draw = [&engine](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(engine() >> 11) * 0x1.0p-53);
    };
    int sampled = 0;
    while (sampled < 1000) {
        const Complex z(draw(-20.0, 20.0), draw(-20.0, 20.0));
        if (std::abs(z) > 20.0) continue;
        if (mfm::near_integer(z) || mfm::near_integer(1.0 - z)) continue;
        ++sampled;
        const Complex gz = mfm::gamma(z);
        const Complex gz1 = mfm::gamma(z + 1.0);
        c.record(std::abs(gz1 - z * gz) / std::abs(gz1));
        const Complex rhs = kPi / std::sin(kPi * z);
        c.record(std::abs(gz * mfm::gamma(1.0 - z) - rhs) / std::abs(rhs));
    }

    for (double x : {0.1, 0.3, 0.5, 0.7}) {
        const std::vector<Complex> upper = {Complex(1.0, 0.0), Complex(1.0, 0.0)};
        const std::vector<Complex> lower = {Complex(2.0, 0.0)};
        const Complex got = mfm::ghf(std::span<const Complex>(upper),
                                     std::span<const Complex>(lower),
                                     Complex(x, 0.0))
                                .value;
        c.record(rel_diff(got, Complex(-std::log1p(-x) / x, 0.0)));
    }

    for (int m = 1; m <= 3; ++m) {
        const mfm::ParameterSet p = mfm::random_generic(m, 900 + m, kDrawMargin);
        for (int k = 0; k <= m; ++k) {
            const mfm::SeriesParameters sp = mfm::solution_parameters(k, p);
            const Complex rho = k == 0 ? Complex(0.0, 0.0) : 1.0 - p.b[k];
            std::vector<Complex> coeff = {Complex(1.0, 0.0)};
            for (int n = 1; n <= 50; ++n) {
                Complex ratio(1.0, 0.0);
                for (const Complex& u : sp.upper) ratio *= u + (n - 1.0);
                for (const Complex& l : sp.lower) ratio /= l + (n - 1.0);
                coeff.push_back(coeff.back() * ratio / static_cast<double>(n));
            }
            for (int n = 1; n <= 50; ++n) {
                const double dn = n;
                Complex lhs = (dn + rho) * coeff[n];
                for (int i = 1; i <= m; ++i) lhs *= dn + rho + p.b[i] - 1.0;
                Complex rhs = coeff[n - 1];
                for (int j = 0; j <= m; ++j) rhs *= dn + rho - 1.0 + p.a[j];
                c.record(rel_diff(lhs, rhs));
            }
        }
    }
    return c;
}

// 8. Structural facts: exact zeros, the sign table, exact mixed symmetry,
// and x-independence of the period-relation right side.
Criterion criterion_structure() {
    Criterion c{"structure suite (exact zeros, sign table, x-independence)", 1e-8};
    using mfm::CocycleFamily;
    for (int m = 1; m <= 4; ++m) {
        const mfm::ParameterSet p = mfm::random_generic(m, 800 + m, kDrawMargin);
        const auto phi = mfm::cohomology_matrix(p, mfm::MatrixKind::cohomology_phi);
        const auto psi = mfm::cohomology_matrix(p, mfm::MatrixKind::cohomology_psi);
        const auto hom = mfm::homology_matrix(p);
        for (int i = 0; i <= m; ++i) {
            for (int j = 0; j <= m; ++j) {
                if (i != j) {
                    c.record_exact(phi.at(i, j) == Complex(0.0, 0.0));
                    c.record_exact(psi.at(i, j) == Complex(0.0, 0.0));
                    c.record_exact(hom.at(i, j) == Complex(0.0, 0.0));
                }
                const int expected = (i != j && (i == 0 || j == 0)) ? -1 : 1;
                c.record_exact(mfm::epsilon(i, j) == expected);
                c.record_exact(
                    mfm::cohomology_pairing({CocycleFamily::phi, i},
                                            {CocycleFamily::psi, j}, p) ==
                    mfm::cohomology_pairing({CocycleFamily::psi, j},
                                            {CocycleFamily::phi, i}, p));
            }
        }
        const auto ra = mfm::tpr_residual_00(p, 0.05, 1e-14);
        const auto rb = mfm::tpr_residual_00(p, std::min(0.2, mfm::x_max(m)), 1e-14);
        c.record(rel_diff(ra.rhs, rb.rhs));
    }
    return c;
}

} // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Criterion> results;
    results.push_back(criterion_tpr());
    results.push_back(criterion_corollary());
    results.push_back(criterion_subset_sum());
    results.push_back(criterion_det());
    results.push_back(criterion_euler());
    results.push_back(criterion_beta());
    results.push_back(criterion_special());
    results.push_back(criterion_structure());

    int failed = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const Criterion& c = results[i];
        if (!c.pass) ++failed;
        std::printf("[%s] %zu. %s: max rel %.3e over %d runs (tol %.1e)%s%s\n",
                    c.pass ? "PASS" : "FAIL", i + 1, c.label.c_str(), c.worst,
                    c.runs, c.tol, c.note.empty() ? "" : "; ", c.note.c_str());
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::printf("acceptance: %zu/%zu criteria passed in %lld ms\n",
                results.size() - failed, results.size(),
                static_cast<long long>(elapsed));
    return failed == 0 ? 0 : 1;
}
