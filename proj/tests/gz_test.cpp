#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gln/gz.hpp"

using namespace gln;

namespace {

Int fock_count(int n, int p) {
  Int total = 0;
  for (int k = 0; k <= std::min(p, n); ++k) total += binomial(n, k);
  return total;
}

Int ladder_count(int n, int p) {
  return binomial(p + n - 1, n - 1) + binomial(p + n - 2, n - 1);
}

} // namespace

TEST_CASE("unitarity classification") {
  CHECK(classify_unitary(HighestWeight(2, {Rational(3), Rational(1), Rational(0)})).kind ==
        UnitaryKind::Typical);
  auto at = classify_unitary(HighestWeight(3, {Rational(1), Rational(1), Rational(0), Rational(0)}));
  CHECK(at.kind == UnitaryKind::Atypical);
  CHECK(at.k == 2);
  CHECK(classify_unitary(HighestWeight(2, {Rational(1, 4), Rational(1), Rational(0)})).kind ==
        UnitaryKind::NotUnitary);
  // real (rational) overall shifts are allowed
  CHECK(classify_unitary(HighestWeight(2, {Rational(5, 2), Rational(1), Rational(0)})).kind ==
        UnitaryKind::Typical);
  CHECK_THROWS_AS(
      classify_unitary(HighestWeight(2, {Rational(1), Rational(0), Rational(1)})),
      std::invalid_argument);
}

TEST_CASE("gl(1|1) basis sizes") {
  CHECK(enumerate_basis(HighestWeight(1, {Rational(2), Rational(1)})).size() == 2); // typical
  CHECK(enumerate_basis(HighestWeight(1, {Rational(0), Rational(0)})).size() == 1); // atypical
}

TEST_CASE("Fock and ladder pattern counts match closed forms") {
  for (int n = 2; n <= 4; ++n) {
    for (int p = 1; p <= n + 2; ++p) {
      CHECK(Int(enumerate_basis(HighestWeight::fock(n, p)).size()) == fock_count(n, p));
      CHECK(Int(enumerate_basis(HighestWeight::ladder(n, p)).size()) == ladder_count(n, p));
    }
  }
  CHECK(enumerate_basis(HighestWeight::fock(3, 1)).size() == 4);
  CHECK(enumerate_basis(HighestWeight::ladder(2, 2)).size() == 5);
}

TEST_CASE("enumerator output passes the independent validator") {
  std::vector<HighestWeight> hws = {
      HighestWeight(2, {Rational(3), Rational(1), Rational(0)}),
      HighestWeight(3, {Rational(1), Rational(1), Rational(0), Rational(0)}),
      HighestWeight(3, {Rational(7, 2), Rational(2), Rational(1), Rational(0)}),
      HighestWeight::fock(3, 2),
      HighestWeight::ladder(3, 3),
  };
  for (const auto& hw : hws) {
    BasisIndex basis = enumerate_basis(hw);
    for (const auto& pat : basis.patterns()) CHECK(validate_pattern(hw, pat));
    // the highest-weight pattern is present
    CHECK(basis.index_of(highest_weight_pattern(hw)).has_value());
    // corrupting a label must fail validation
    GzPattern bad = basis.pattern(0);
    bad.m(1, 1) += 100;
    CHECK_FALSE(validate_pattern(hw, bad));
  }
}

TEST_CASE("validator and enumerator agree on a brute-force sweep") {
  // For W([2,1,0]) every triangular array with labels in a small window
  // should be enumerated iff it validates.
  HighestWeight hw(2, {Rational(2), Rational(1), Rational(0)});
  BasisIndex basis = enumerate_basis(hw);
  int valid_count = 0;
  for (int m12 = -1; m12 <= 3; ++m12)
    for (int m22 = -1; m22 <= 3; ++m22)
      for (int m11 = -1; m11 <= 3; ++m11) {
        GzPattern p;
        p.top = hw.top;
        p.rows = {{Rational(m11)}, {Rational(m12), Rational(m22)}};
        bool ok = validate_pattern(hw, p);
        if (ok) ++valid_count;
        CHECK(ok == basis.index_of(p).has_value());
      }
  CHECK(valid_count == static_cast<int>(basis.size()));
}

TEST_CASE("atypical representations freeze theta_k..theta_n") {
  HighestWeight hw(3, {Rational(1), Rational(1), Rational(0), Rational(0)});
  auto cls = classify_unitary(hw);
  REQUIRE(cls.kind == UnitaryKind::Atypical);
  BasisIndex basis = enumerate_basis(hw);
  for (const auto& pat : basis.patterns())
    for (int i = cls.k; i <= hw.n; ++i) CHECK(pat.theta(i) == 0);
}

TEST_CASE("deterministic ordering") {
  BasisIndex a = enumerate_basis(HighestWeight::fock(3, 2));
  BasisIndex b = enumerate_basis(HighestWeight::fock(3, 2));
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a.pattern(i) == b.pattern(i));
  for (size_t i = 0; i + 1 < a.size(); ++i)
    CHECK(a.pattern(i).flat_key() > a.pattern(i + 1).flat_key());
}

TEST_CASE("dimension cap triggers") {
  CHECK_THROWS_AS(enumerate_basis(HighestWeight::fock(4, 5), 3), std::runtime_error);
}

TEST_CASE("stationary energies") {
  // Highest-weight pattern of W([p,0,...,0]) has energy p * sum(beta).
  HighestWeight hw = HighestWeight::fock(3, 4);
  GzPattern top = highest_weight_pattern(hw);
  std::vector<double> beta = {0.3, 0.5, 0.7};
  CHECK(hamiltonian_energy(top, beta) == doctest::Approx(4 * (0.3 + 0.5 + 0.7)).epsilon(1e-14));
  CHECK(hamiltonian_energy(top, {0.0, 0.0, 0.0}) == 0.0);

  // gl(1|1): theta = 0 pattern has energy (a+b) beta_1.
  HighestWeight g11(1, {Rational(3), Rational(1)});
  GzPattern v = highest_weight_pattern(g11);
  CHECK(hamiltonian_energy(v, {2.0}) == doctest::Approx(2.0 * 4).epsilon(1e-14));

  // exact and floating versions agree
  BasisIndex basis = enumerate_basis(hw);
  std::vector<Rational> rb = {Rational(1, 3), Rational(1, 2), Rational(2)};
  std::vector<double> db = {to_double(rb[0]), to_double(rb[1]), to_double(rb[2])};
  for (const auto& pat : basis.patterns())
    CHECK(hamiltonian_energy(pat, db) ==
          doctest::Approx(to_double(hamiltonian_energy_exact(pat, rb))).epsilon(1e-12));
}

TEST_CASE("Weyl dimension formula") {
  CHECK(gl_dimension({Rational(1), Rational(0), Rational(0)}) == 3);
  CHECK(gl_dimension({Rational(1), Rational(1), Rational(0)}) == 3);
  CHECK(gl_dimension({}) == 1);
  CHECK(gl_dimension({Rational(5)}) == 1);
  for (int n = 3; n <= 5; ++n)
    for (int K = 0; K <= 4; ++K) {
      std::vector<Rational> row(n - 1, Rational(0));
      row[0] = K;
      CHECK(gl_dimension(row) == binomial(n - 2 + K, n - 2)); // symmetric power
      std::vector<Rational> ones(n - 1, Rational(0));
      for (int i = 0; i < std::min(K, n - 1); ++i) ones[i] = 1;
      if (K <= n - 1) CHECK(gl_dimension(ones) == binomial(n - 1, K)); // antisymmetric power
    }
}
