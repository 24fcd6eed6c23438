#pragma once

#include "gln/rep_matrices.hpp"

#include <Eigen/Dense>

namespace gln {

/// Hessenberg unitary whose last row carries the (conjugated, normalized)
/// coefficients of the target odd element; rows above follow the
/// partial-norm pattern so that U_{jl} = 0 for l > j+1.
struct RotationU {
  Eigen::MatrixXcd U;           // n x n, U U^dagger = 1 within 1e-12
  std::vector<Complex> c;       // last row: c_l = conj(alpha_l)/|alpha|
  double alpha_norm = 0.0;
};

RotationU build_rotation(const std::vector<Complex>& alpha);

/// One gl(1|1) (+) gl(n-1) summand of the branching decomposition.
struct BranchingComponent {
  Rational a;                      // top gl(1|1) weight (a, b)
  Rational b;
  Rational ab;                     // a + b (shared by the whole theta family)
  std::vector<Rational> label;     // [m]_{n-1}
  int N = 0;                       // theta-freedom count; |A| = 2^N
  Int dimV = 1;                    // dim V([m]_{n-1})
  bool atypical_singlet = false;   // a + b = 0 component
  std::vector<std::pair<int, Int>> binom_split; // (weight shift i, C(N-1,i))
};

std::vector<BranchingComponent> branch(const HighestWeight& hw);

/// Brute-force enumeration of allowed theta assignments (the set A) for a
/// fixed gl(n-1) label; used by branch() and exposed for cross-checks.
std::vector<std::vector<int>> allowed_thetas(const HighestWeight& hw,
                                             const std::vector<Rational>& label);

struct SpectrumLevel {
  double value = 0.0;
  Int multiplicity = 0;
};

struct SpectrumReport {
  double scale = 0.0;                 // |alpha|; eigenvalues are scale*sqrt(a+b)
  std::vector<SpectrumLevel> levels;  // sorted ascending by value
};

/// Eigenvalues of the odd element from the branching theorem (no matrices).
SpectrumReport spectrum(const HighestWeight& hw, const std::vector<Complex>& alpha);

/// The rotated highest-weight vector |Lambda)_E expanded over the basis.
Eigen::VectorXcd rotated_highest_weight(const HighestWeight& hw, const RotationU& rot,
                                        const BasisIndex& basis);

struct EigvecSet {
  std::vector<double> eigenvalues;  // one per column of `vectors`
  Eigen::MatrixXcd vectors;         // orthonormal columns, basis coefficients
  bool oracle_fallback = false;
  std::string fallback_reason;
};

/// Matrices of the rotated odd generators E_{0j} / E_{j0} and even E_{ij}.
Eigen::MatrixXcd rotated_odd_dense(int j, bool E0j, const RotationU& rot, const BasisIndex& basis);
Eigen::MatrixXcd rotated_even_dense(int i, int j, const RotationU& rot, const BasisIndex& basis);

/// Complete orthonormal eigenbasis of the odd element via the gl(1|1)
/// doublet structure: v spans ker E_{0n} split by a+b, w = E_{n0} v.
EigvecSet eigenvectors(const HighestWeight& hw, const std::vector<Complex>& alpha,
                       const BasisIndex& basis);

/// Momentum-flavored combination (v +- i w)/sqrt(2) with eigenvalues
/// -+ scale*sqrt(a+b); `alpha` here is the full momentum coefficient vector.
EigvecSet momentum_eigenvectors(const HighestWeight& hw, const std::vector<Complex>& alpha,
                                const BasisIndex& basis);

SpectrumReport momentum_spectrum(const HighestWeight& hw, const std::vector<Complex>& alpha);

/// Dense Hermitian eigendecomposition with multiplicity clustering; the
/// independent oracle against the branching-theorem route.
SpectrumReport oracle_spectrum(const Eigen::MatrixXcd& matrix);
EigvecSet oracle_eigenvectors(const Eigen::MatrixXcd& matrix);

bool telescoping_identity_check(const std::vector<Rational>& x, const std::vector<Rational>& y,
                                int j);

} // namespace gln
