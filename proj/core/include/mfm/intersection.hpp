#pragma once

// Closed-form intersection numbers of the twisted (co)homology bases: the
// two cocycle families phi/psi, the diagonal homology pairing of the cycles
// attached to the solution system, determinant formulas, and the brute-force
// subset-sum oracle used to cross-check the diagonal cohomology values.

#include <vector>

#include "mfm/parameters.hpp"

namespace mfm {

enum class CocycleFamily { phi, psi };

struct CocycleRef {
    CocycleFamily family;
    int index; // 0..m
};

enum class MatrixKind {
    cohomology_phi,
    cohomology_psi,
    cohomology_mixed,
    homology,
};

struct IntersectionMatrix {
    MatrixKind kind;
    int m = 0;
    std::vector<Complex> entries; // (m+1) x (m+1), row-major

    int dim() const { return m + 1; }
    Complex& at(int i, int j) { return entries[static_cast<std::size_t>(i) * dim() + j]; }
    const Complex& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * dim() + j];
    }
};

// Sign table of the mixed pairing: -1 iff i != j and (i = 0 or j = 0).
int epsilon(int i, int j);

// (2 pi i)^m as (2 pi)^m times an exact quadrant for i^m.
Complex two_pi_i_pow(int m);

// Pairing of two cocycles. Off-diagonal phi-phi and psi-psi pairs are exact
// zeros; the remaining cases are rational closed forms in the parameters.
// Throws DegenerateParameterError if a denominator is within delta of 0.
Complex cohomology_pairing(CocycleRef ci, CocycleRef cj, const ParameterSet& p,
                           double delta = kIntegerProximityTol);

IntersectionMatrix cohomology_matrix(const ParameterSet& p, MatrixKind kind,
                                     double delta = kIntegerProximityTol);

// Closed form of det of the phi-basis cohomology matrix.
Complex det_c_closed_form(const ParameterSet& p,
                          double delta = kIntegerProximityTol);

// Self-intersection number of the k-th twisted cycle against its dual.
Complex homology_self(int k, const ParameterSet& p,
                      double delta = kIntegerProximityTol);

// Diagonal matrix of homology_self values.
IntersectionMatrix homology_matrix(const ParameterSet& p,
                                   double delta = kIntegerProximityTol);

// Brute-force evaluation of the 2^m subset sum
//   sum_{I subset of {0..m}\{k}} prod_{i in I} 1/(b_i - a_i)
//                              * prod_{j not in I} 1/(a_j - b_k),
// which equals the diagonal phi pairing divided by (2 pi i)^m.
// Throws SizeError for m > 20.
Complex subset_sum_oracle(int k, const ParameterSet& p);

// Determinant by LU with partial pivoting.
Complex determinant(const IntersectionMatrix& mat);

} // namespace mfm
