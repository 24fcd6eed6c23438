#pragma once

#include "gln/scalars.hpp"

#include <map>
#include <optional>
#include <vector>

namespace gln {

/// Highest weight [m_{0,n+1}, m_{1,n+1}, ..., m_{n,n+1}] of a gl(1|n)
/// representation. Labels are rationals; the differences m_{i,n+1}-m_{j,n+1}
/// (1 <= i < j <= n) must be nonnegative integers.
struct HighestWeight {
  int n = 0;
  std::vector<Rational> top; // size n+1, index i holds m_{i,n+1}

  HighestWeight() = default;
  HighestWeight(int n_, std::vector<Rational> labels);

  static HighestWeight fock(int n, const Rational& p);   // [p,0,...,0]
  static HighestWeight ladder(int n, const Rational& p); // [1,p-1,0,...,0]

  bool labels_admissible() const; // integer-difference condition
};

enum class UnitaryKind { Typical, Atypical, NotUnitary };

struct UnitarityClass {
  UnitaryKind kind = UnitaryKind::NotUnitary;
  int k = 0; // atypicality type, 1..n, valid when kind == Atypical
};

UnitarityClass classify_unitary(const HighestWeight& hw);

/// One Gel'fand-Zetlin pattern of W([m]_{n+1}). The top row is stored in
/// `top`; `rows[k-1]` holds [m_{1k},...,m_{kk}] for k = 1..n.
struct GzPattern {
  std::vector<Rational> top;
  std::vector<std::vector<Rational>> rows;

  int n() const { return static_cast<int>(rows.size()); }

  // m_{ik}; k == n+1 addresses the top row (i = 0..n), else 1 <= i <= k <= n.
  const Rational& m(int i, int k) const {
    if (k == n() + 1) return top[i];
    return rows[k - 1][i - 1];
  }
  Rational& m(int i, int k) {
    if (k == n() + 1) return top[i];
    return rows[k - 1][i - 1];
  }

  int theta(int i) const { return static_cast<int>(to_int(m(i, n()) - top[i])); }
  int theta_sum(int upto) const; // theta_1 + ... + theta_upto

  std::vector<Rational> flat_key() const; // row n down to row 1, concatenated

  bool operator==(const GzPattern& o) const { return top == o.top && rows == o.rows; }
};

/// Independent validator of (GZ1)-(GZ4); coded separately from the
/// enumerator so the two can cross-check each other.
bool validate_pattern(const HighestWeight& hw, const GzPattern& p);

GzPattern highest_weight_pattern(const HighestWeight& hw);

/// Ordered GZ basis with a deterministic descending-lexicographic ordering
/// on the row-major label sequence. Immutable after construction.
class BasisIndex {
public:
  BasisIndex(HighestWeight hw, std::vector<GzPattern> patterns);

  const HighestWeight& highest_weight() const { return hw_; }
  int n() const { return hw_.n; }
  size_t size() const { return patterns_.size(); }
  const GzPattern& pattern(size_t i) const { return patterns_[i]; }
  const std::vector<GzPattern>& patterns() const { return patterns_; }

  std::optional<size_t> index_of(const GzPattern& p) const;

private:
  HighestWeight hw_;
  std::vector<GzPattern> patterns_;
  std::map<std::vector<Rational>, size_t> lookup_;
};

inline constexpr size_t kDefaultDimensionCap = 1000000;

// Cap can be overridden by the GLN_DIM_CAP environment variable.
size_t dimension_cap();

BasisIndex enumerate_basis(const HighestWeight& hw, size_t cap = dimension_cap());

/// Stationary-state energy of a pattern for mode parameters beta_j.
double hamiltonian_energy(const GzPattern& p, const std::vector<double>& beta);

/// Exact rational version of the same sum (the beta weights as rationals).
Rational hamiltonian_energy_exact(const GzPattern& p, const std::vector<Rational>& beta);

/// Weyl dimension formula for a gl(L) highest weight (weakly decreasing,
/// integer-spaced labels).
Int gl_dimension(const std::vector<Rational>& label);

} // namespace gln
