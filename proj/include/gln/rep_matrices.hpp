#pragma once

#include "gln/gz.hpp"
#include "gln/sparse.hpp"

namespace gln {

/// Self-adjoint odd element sum_j alpha_j e_{0j} + conj(alpha_j) e_{j0}.
struct OddElement {
  std::vector<Complex> alpha; // size n
};

/// Eigenvalue of e_{kk} (k = 0..n) on a single pattern.
Rational diagonal_action(int k, const GzPattern& p);

/// Diagonal matrix of e_{kk} over the basis, entries embedded as surds.
SurdMatrix diagonal_matrix(int k, const BasisIndex& basis);

/// Matrix of e_{k-1,k} (raise) or e_{k,k-1} (lower), 2 <= k <= n.
SurdMatrix adjacent_even_matrix(int k, bool raise, const BasisIndex& basis);

/// Matrix of e_{0j} (odd annihilation side) or e_{j0}, 1 <= j <= n.
SurdMatrix odd_matrix(int j, bool e0j, const BasisIndex& basis);

/// Matrix of an arbitrary basis element e_{ij}. Diagonal, adjacent-even and
/// odd elements come from the exact routines; the remaining even elements
/// are built from commutators of adjacent ones.
CMatrix element_matrix(int i, int j, const BasisIndex& basis);

CMatrix assemble_odd(const OddElement& element, const BasisIndex& basis);

inline bool is_odd_element(int i, int j) { return (i == 0) != (j == 0); }

} // namespace gln
