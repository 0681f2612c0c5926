#include "mfm/intersection.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mfm {

namespace {

constexpr double kTwoPi = 6.28318530717958647692528676655900577;

void check_index(int i, int m, const char* what) {
    if (i < 0 || i > m) {
        throw std::invalid_argument(std::string(what) + ": index out of range");
    }
}

Complex guarded_div(Complex num, Complex den, double delta, const char* label) {
    if (std::abs(den) < delta) {
        std::ostringstream os;
        os << label << ": denominator magnitude " << std::abs(den)
           << " is within tolerance of 0";
        throw DegenerateParameterError(os.str());
    }
    return num / den;
}

} // namespace

int epsilon(int i, int j) {
    return (i != j && (i == 0 || j == 0)) ? -1 : 1;
}

Complex two_pi_i_pow(int m) {
    const double mag = std::pow(kTwoPi, m);
    switch (((m % 4) + 4) % 4) {
        case 0: return Complex(mag, 0.0);
        case 1: return Complex(0.0, mag);
        case 2: return Complex(-mag, 0.0);
        default: return Complex(0.0, -mag);
    }
}

Complex cohomology_pairing(CocycleRef ci, CocycleRef cj, const ParameterSet& p,
                           double delta) {
    check_shape(p);
    check_index(ci.index, p.m, "cohomology_pairing");
    check_index(cj.index, p.m, "cohomology_pairing");
    const int i = ci.index;
    const int j = cj.index;

    if (ci.family == cj.family) {
        if (i != j) {
            return Complex(0.0, 0.0); // identity, not a limit
        }
        const int k = i;
        Complex prod = two_pi_i_pow(p.m);
        if (ci.family == CocycleFamily::phi) {
            for (int l = 0; l <= p.m; ++l) {
                if (l == k) continue;
                prod *= guarded_div(p.b[l] - p.b[k],
                                    (p.a[l] - p.b[k]) * (p.b[l] - p.a[l]), delta,
                                    "cohomology_pairing(phi)");
            }
        } else {
            for (int l = 0; l <= p.m; ++l) {
                if (l == k) continue;
                prod *= guarded_div(p.a[l] - p.a[k],
                                    (p.b[l] - p.a[k]) * (p.b[l] - p.a[l]), delta,
                                    "cohomology_pairing(psi)");
            }
        }
        return prod;
    }

    // Mixed pairing, symmetric in the two arguments: the phi index is i, the
    // psi index is j regardless of argument order.
    const int phi_i = ci.family == CocycleFamily::phi ? i : j;
    const int psi_j = ci.family == CocycleFamily::phi ? j : i;
    Complex value = static_cast<double>(epsilon(phi_i, psi_j)) * two_pi_i_pow(p.m);
    value *= guarded_div((p.b[phi_i] - p.a[phi_i]) * (p.b[psi_j] - p.a[psi_j]),
                         p.b[phi_i] - p.a[psi_j], delta,
                         "cohomology_pairing(mixed)");
    for (int l = 0; l <= p.m; ++l) {
        value = guarded_div(value, p.b[l] - p.a[l], delta,
                            "cohomology_pairing(mixed)");
    }
    return value;
}

IntersectionMatrix cohomology_matrix(const ParameterSet& p, MatrixKind kind,
                                     double delta) {
    check_shape(p);
    if (kind == MatrixKind::homology) {
        throw std::invalid_argument("cohomology_matrix: use homology_matrix");
    }
    IntersectionMatrix mat;
    mat.kind = kind;
    mat.m = p.m;
    mat.entries.assign(static_cast<std::size_t>(p.m + 1) * (p.m + 1),
                       Complex(0.0, 0.0));
    for (int i = 0; i <= p.m; ++i) {
        for (int j = 0; j <= p.m; ++j) {
            CocycleRef ci{CocycleFamily::phi, i};
            CocycleRef cj{CocycleFamily::phi, j};
            switch (kind) {
                case MatrixKind::cohomology_phi:
                    break;
                case MatrixKind::cohomology_psi:
                    ci.family = cj.family = CocycleFamily::psi;
                    break;
                default: // mixed: rows phi, columns psi
                    cj.family = CocycleFamily::psi;
                    break;
            }
            mat.at(i, j) = cohomology_pairing(ci, cj, p, delta);
        }
    }
    return mat;
}

Complex det_c_closed_form(const ParameterSet& p, double delta) {
    check_shape(p);
    Complex value = two_pi_i_pow(p.m * (p.m + 1));
    for (int l = 0; l <= p.m; ++l) {
        const Complex d = p.b[l] - p.a[l];
        for (int rep = 0; rep < p.m; ++rep) {
            value = guarded_div(value, d, delta, "det_c_closed_form");
        }
    }
    for (int i = 0; i <= p.m; ++i) {
        for (int j = 0; j <= p.m; ++j) {
            if (i == j) continue;
            value *= guarded_div(p.b[i] - p.b[j], p.a[i] - p.b[j], delta,
                                 "det_c_closed_form");
        }
    }
    return value;
}

Complex homology_self(int k, const ParameterSet& p, double delta) {
    check_shape(p);
    check_index(k, p.m, "homology_self");
    const ExponentSet e = exponents(p);
    const Complex one(1.0, 0.0);
    Complex prod = one;
    if (k == 0) {
        for (int i = 1; i <= p.m; ++i) {
            prod *= e.alpha[i] * guarded_div(one - e.beta[i],
                                             (one - e.alpha[i]) * (e.alpha[i] - e.beta[i]),
                                             delta, "homology_self");
        }
        return prod;
    }
    for (int j = 1; j <= p.m; ++j) {
        if (j == k) continue;
        prod *= e.alpha[j] * guarded_div(e.beta[k] - e.beta[j],
                                         (e.beta[k] - e.alpha[j]) * (e.alpha[j] - e.beta[j]),
                                         delta, "homology_self");
    }
    prod *= guarded_div(e.alpha[0] - e.beta[k],
                        (one - e.beta[k]) * (e.alpha[0] - one), delta,
                        "homology_self");
    return prod;
}

IntersectionMatrix homology_matrix(const ParameterSet& p, double delta) {
    check_shape(p);
    IntersectionMatrix mat;
    mat.kind = MatrixKind::homology;
    mat.m = p.m;
    mat.entries.assign(static_cast<std::size_t>(p.m + 1) * (p.m + 1),
                       Complex(0.0, 0.0));
    for (int k = 0; k <= p.m; ++k) {
        mat.at(k, k) = homology_self(k, p, delta);
    }
    return mat;
}

Complex subset_sum_oracle(int k, const ParameterSet& p) {
    check_shape(p);
    check_index(k, p.m, "subset_sum_oracle");
    if (p.m > 20) {
        throw SizeError("subset_sum_oracle: m > 20 would enumerate 2^m > 2^20 subsets");
    }
    std::vector<int> idx;
    idx.reserve(p.m);
    for (int l = 0; l <= p.m; ++l) {
        if (l != k) idx.push_back(l);
    }
    Complex total(0.0, 0.0);
    const std::uint32_t subsets = 1u << p.m;
    for (std::uint32_t bits = 0; bits < subsets; ++bits) {
        Complex term(1.0, 0.0);
        for (int pos = 0; pos < p.m; ++pos) {
            const int l = idx[static_cast<std::size_t>(pos)];
            if (bits >> pos & 1u) {
                term /= p.b[l] - p.a[l];
            } else {
                term /= p.a[l] - p.b[k];
            }
        }
        total += term;
    }
    return total;
}

Complex determinant(const IntersectionMatrix& mat) {
    const int n = mat.dim();
    std::vector<Complex> a = mat.entries;
    auto at = [&](int i, int j) -> Complex& {
        return a[static_cast<std::size_t>(i) * n + j];
    };
    Complex det(1.0, 0.0);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(at(col, col));
        for (int row = col + 1; row < n; ++row) {
            const double mag = std::abs(at(row, col));
            if (mag > best) {
                best = mag;
                pivot = row;
            }
        }
        if (best == 0.0) {
            return Complex(0.0, 0.0);
        }
        if (pivot != col) {
            for (int j = col; j < n; ++j) std::swap(at(pivot, j), at(col, j));
            det = -det;
        }
        det *= at(col, col);
        for (int row = col + 1; row < n; ++row) {
            const Complex factor = at(row, col) / at(col, col);
            for (int j = col; j < n; ++j) {
                at(row, j) -= factor * at(col, j);
            }
        }
    }
    return det;
}

} // namespace mfm
