#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gln/odd_element.hpp"

#include <cmath>
#include <random>

using namespace gln;

namespace {

const std::vector<HighestWeight>& test_reps() {
  static std::vector<HighestWeight> reps = {
      HighestWeight(1, {Rational(7, 3), Rational(2, 3)}),
      HighestWeight(2, {Rational(3), Rational(1), Rational(0)}),
      HighestWeight(3, {Rational(1), Rational(1), Rational(0), Rational(0)}),
      HighestWeight::fock(3, 2),
      HighestWeight::fock(3, 5),
      HighestWeight::ladder(3, 3),
      HighestWeight(3, {Rational(7, 2), Rational(2), Rational(1), Rational(0)}),
  };
  return reps;
}

std::vector<Complex> random_alpha(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<Complex> alpha(n);
  for (int j = 0; j < n; ++j) alpha[j] = Complex(unif(rng), unif(rng));
  return alpha;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

Int dim_of_component(const BranchingComponent& c) {
  if (c.atypical_singlet) return c.dimV;
  return (Int(1) << c.N) * c.dimV;
}

} // namespace

TEST_CASE("rotation construction") {
  // unit coordinate alpha = e_n gives the identity rotation
  RotationU id = build_rotation({Complex(0, 0), Complex(0, 0), Complex(1, 0)});
  CHECK((id.U - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-14);

  std::mt19937_64 rng(99);
  for (int t = 0; t < 25; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    auto alpha = random_alpha(n, rng);
    if (t % 3 == 0) alpha[rng() % n] = Complex(0, 0); // exercise zero components
    RotationU rot = build_rotation(alpha);
    CHECK((rot.U * rot.U.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() <=
          1e-12);
    // Hessenberg zero pattern
    for (int j = 1; j <= n; ++j)
      for (int l = j + 2; l <= n; ++l) CHECK(std::abs(rot.U(j - 1, l - 1)) == 0.0);
    // last row carries conj(alpha)/norm
    double norm = 0.0;
    for (const auto& a : alpha) norm += std::norm(a);
    norm = std::sqrt(norm);
    for (int l = 1; l <= n; ++l)
      CHECK(std::abs(rot.U(n - 1, l - 1) - std::conj(alpha[l - 1]) / norm) <= 1e-14);
  }
  CHECK_THROWS_AS(build_rotation({Complex(0, 0), Complex(0, 0)}), std::invalid_argument);
}

TEST_CASE("branching of Fock representations") {
  // typical W(p), p > n-1: K = 0..n-1, labels with K ones, N = 1
  auto comps = branch(HighestWeight::fock(3, 5));
  REQUIRE(comps.size() == 3);
  for (const auto& c : comps) {
    CHECK(c.N == 1);
    CHECK_FALSE(c.atypical_singlet);
    Int ones = 0;
    for (const auto& v : c.label) {
      CHECK((v == 0 || v == 1));
      if (v == 1) ++ones;
    }
    CHECK(c.ab == Rational(5) - ones);
    CHECK(c.dimV == binomial(2, ones));
  }
}

TEST_CASE("branching of ladder representations") {
  // V(p): one atypical singlet W([0,0]) x V([p,0,...]) plus K = 0..p-1 typical
  auto comps = branch(HighestWeight::ladder(3, 3));
  REQUIRE(comps.size() == 4);
  int singlets = 0;
  for (const auto& c : comps) {
    if (c.atypical_singlet) {
      ++singlets;
      CHECK(c.ab == 0);
      CHECK(c.label[0] == 3);
      CHECK(c.dimV == binomial(3 + 3 - 2, 3 - 2)); // C(n-2+p, n-2)
    } else {
      CHECK(c.N == 1);
      Rational K = c.label[0];
      CHECK(c.ab == Rational(3) - K);
      CHECK(c.dimV == binomial(3 + to_int(K) - 2, to_int(K)));
    }
  }
  CHECK(singlets == 1);
}

TEST_CASE("branching dimension bookkeeping") {
  for (const auto& hw : test_reps()) {
    BasisIndex basis = enumerate_basis(hw);
    auto comps = branch(hw);
    Int total = 0;
    for (const auto& c : comps) {
      total += dim_of_component(c);
      // |A| from brute-force theta enumeration matches 2^N
      auto thetas = allowed_thetas(hw, c.label);
      CHECK(Int(thetas.size()) == (Int(1) << c.N));
    }
    CHECK(total == Int(basis.size()));
  }
}

TEST_CASE("a+b values form a unit-step ladder") {
  for (const auto& hw : test_reps()) {
    auto comps = branch(hw);
    std::vector<Rational> abs_vals;
    for (const auto& c : comps) abs_vals.push_back(c.ab);
    std::sort(abs_vals.begin(), abs_vals.end());
    abs_vals.erase(std::unique(abs_vals.begin(), abs_vals.end()), abs_vals.end());
    for (size_t i = 0; i + 1 < abs_vals.size(); ++i)
      CHECK(abs_vals[i + 1] - abs_vals[i] == 1);
    auto cls = classify_unitary(hw);
    if (cls.kind == UnitaryKind::Atypical) CHECK(abs_vals.front() == 0);
    else CHECK(abs_vals.front() > 0);
  }
}

TEST_CASE("theorem spectrum matches the diagonalization oracle") {
  std::mt19937_64 rng(2024);
  for (const auto& hw : test_reps()) {
    BasisIndex basis = enumerate_basis(hw);
    for (int t = 0; t < 5; ++t) {
      auto alpha = random_alpha(hw.n, rng);
      SpectrumReport a = spectrum(hw, alpha);
      SpectrumReport b = oracle_spectrum(to_dense(assemble_odd(OddElement{alpha}, basis)));
      REQUIRE(a.levels.size() == b.levels.size());
      double radius = std::max(std::abs(a.levels.front().value), std::abs(a.levels.back().value));
      for (size_t i = 0; i < a.levels.size(); ++i) {
        CHECK(std::abs(a.levels[i].value - b.levels[i].value) <= 1e-8 * std::max(1.0, radius));
        CHECK(a.levels[i].multiplicity == b.levels[i].multiplicity);
      }
    }
  }
}

TEST_CASE("spectrum depends on alpha only through its norm") {
  HighestWeight hw = HighestWeight::ladder(3, 2);
  std::mt19937_64 rng(7);
  auto alpha = random_alpha(3, rng);
  double norm = 0.0;
  for (auto& a : alpha) norm += std::norm(a);
  norm = std::sqrt(norm);
  // a differently-directed alpha with the same norm
  std::vector<Complex> beta = {Complex(norm / std::sqrt(2.0), 0),
                               Complex(0, -norm / std::sqrt(2.0)), Complex(0, 0)};
  SpectrumReport a = spectrum(hw, alpha);
  SpectrumReport b = spectrum(hw, beta);
  REQUIRE(a.levels.size() == b.levels.size());
  for (size_t i = 0; i < a.levels.size(); ++i) {
    CHECK(a.levels[i].value == doctest::Approx(b.levels[i].value).epsilon(1e-12));
    CHECK(a.levels[i].multiplicity == b.levels[i].multiplicity);
  }
}

TEST_CASE("rotated highest-weight vector is annihilated and normalized") {
  std::mt19937_64 rng(31337);
  for (const auto& hw : test_reps()) {
    BasisIndex basis = enumerate_basis(hw);
    for (int t = 0; t < 3; ++t) {
      auto alpha = random_alpha(hw.n, rng);
      RotationU rot = build_rotation(alpha);
      // rotated_highest_weight throws internally if E_{0j} or E_{j,j+1}
      // residuals exceed 1e-8; tighter explicit checks follow.
      Eigen::VectorXcd v = rotated_highest_weight(hw, rot, basis);
      CHECK(std::abs(v.norm() - 1.0) <= 1e-12);
      for (int j = 1; j <= hw.n; ++j) {
        Eigen::MatrixXcd E0j = rotated_odd_dense(j, true, rot, basis);
        CHECK((E0j * v).norm() <= 1e-10 * std::max(1.0, E0j.norm()));
      }
      for (int j = 1; j <= hw.n - 1; ++j) {
        Eigen::MatrixXcd E = rotated_even_dense(j, j + 1, rot, basis);
        CHECK((E * v).norm() <= 1e-10 * std::max(1.0, E.norm()));
      }
    }
  }
}

TEST_CASE("rotated even generators satisfy the anticommutation identity") {
  // {E_{j0}, E_{0j}} = M(e_00) + sum_{l,k} U_{jl} U*_{jk} M(e_{lk})
  HighestWeight hw = HighestWeight::fock(3, 2);
  BasisIndex basis = enumerate_basis(hw);
  std::mt19937_64 rng(5);
  auto alpha = random_alpha(3, rng);
  RotationU rot = build_rotation(alpha);
  const int dim = static_cast<int>(basis.size());
  for (int j = 1; j <= 3; ++j) {
    Eigen::MatrixXcd a = rotated_odd_dense(j, false, rot, basis);
    Eigen::MatrixXcd b = rotated_odd_dense(j, true, rot, basis);
    Eigen::MatrixXcd rhs = to_dense(diagonal_matrix(0, basis));
    for (int l = 1; l <= 3; ++l)
      for (int k = 1; k <= 3; ++k) {
        Complex coef = rot.U(j - 1, l - 1) * std::conj(rot.U(j - 1, k - 1));
        if (coef != Complex(0, 0)) rhs += coef * to_dense(element_matrix(l, k, basis));
      }
    CHECK(max_abs(a * b + b * a - rhs) <= 1e-10 * std::max(1.0, max_abs(rhs)));
    (void)dim;
  }
}

TEST_CASE("rotated odd generators anticommute among themselves") {
  HighestWeight hw = HighestWeight::ladder(3, 2);
  BasisIndex basis = enumerate_basis(hw);
  std::mt19937_64 rng(6);
  RotationU rot = build_rotation(random_alpha(3, rng));
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k) {
      Eigen::MatrixXcd a = rotated_odd_dense(j, false, rot, basis);
      Eigen::MatrixXcd b = rotated_odd_dense(k, false, rot, basis);
      CHECK(max_abs(a * b + b * a) <= 1e-10 * std::max(1.0, max_abs(a) * max_abs(b)));
    }
}

TEST_CASE("eigenvector construction: residuals, orthonormality, completeness") {
  std::mt19937_64 rng(424242);
  for (const auto& hw : test_reps()) {
    BasisIndex basis = enumerate_basis(hw);
    const int dim = static_cast<int>(basis.size());
    auto alpha = random_alpha(hw.n, rng);
    EigvecSet set = eigenvectors(hw, alpha, basis);
    CHECK_FALSE(set.oracle_fallback);
    Eigen::MatrixXcd M = to_dense(assemble_odd(OddElement{alpha}, basis));
    double mnorm = M.norm();
    for (int i = 0; i < dim; ++i)
      CHECK((M * set.vectors.col(i) - set.eigenvalues[i] * set.vectors.col(i)).norm() <=
            1e-10 * std::max(1.0, mnorm));
    Eigen::MatrixXcd gram = set.vectors.adjoint() * set.vectors;
    CHECK(max_abs(gram - Eigen::MatrixXcd::Identity(dim, dim)) <= 1e-10);
    // eigenvalue multiset agrees with the spectrum report
    SpectrumReport rep = spectrum(hw, alpha);
    size_t idx = 0;
    for (const auto& lv : rep.levels) {
      for (Int q = 0; q < lv.multiplicity; ++q, ++idx) {
        REQUIRE(idx < set.eigenvalues.size());
        CHECK(set.eigenvalues[idx] == doctest::Approx(lv.value).epsilon(1e-9));
      }
    }
    CHECK(idx == set.eigenvalues.size());
  }
}

TEST_CASE("momentum pairing flips the eigenvalue sign") {
  std::mt19937_64 rng(1717);
  for (const auto& hw : test_reps()) {
    BasisIndex basis = enumerate_basis(hw);
    const int dim = static_cast<int>(basis.size());
    auto alpha = random_alpha(hw.n, rng);
    EigvecSet set = momentum_eigenvectors(hw, alpha, basis);
    CHECK_FALSE(set.oracle_fallback);
    Eigen::MatrixXcd M = to_dense(assemble_odd(OddElement{alpha}, basis));
    double mnorm = M.norm();
    for (int i = 0; i < dim; ++i)
      CHECK((M * set.vectors.col(i) - set.eigenvalues[i] * set.vectors.col(i)).norm() <=
            1e-10 * std::max(1.0, mnorm));
    Eigen::MatrixXcd gram = set.vectors.adjoint() * set.vectors;
    CHECK(max_abs(gram - Eigen::MatrixXcd::Identity(dim, dim)) <= 1e-10);
  }
}

TEST_CASE("oracle on explicit small matrices") {
  Eigen::MatrixXcd doublet(2, 2);
  double s = std::sqrt(3.0);
  doublet << 0, s, s, 0;
  SpectrumReport rep = oracle_spectrum(doublet);
  REQUIRE(rep.levels.size() == 2);
  CHECK(rep.levels[0].value == doctest::Approx(-s).epsilon(1e-14));
  CHECK(rep.levels[1].value == doctest::Approx(s).epsilon(1e-14));

  SpectrumReport zero = oracle_spectrum(Eigen::MatrixXcd::Zero(4, 4));
  REQUIRE(zero.levels.size() == 1);
  CHECK(zero.levels[0].value == 0.0);
  CHECK(zero.levels[0].multiplicity == 4);

  Eigen::MatrixXcd bad(2, 2);
  bad << 0, 1, 2, 0;
  CHECK_THROWS_AS(oracle_spectrum(bad), std::invalid_argument);
}

TEST_CASE("telescoping identity") {
  // j = 1 is the base case x_1 - y_1
  CHECK(telescoping_identity_check({Rational(5)}, {Rational(2)}, 1));
  // worked two-variable instance
  CHECK(telescoping_identity_check({Rational(3), Rational(5)}, {Rational(1), Rational(2)}, 2));
  // random exact instances
  std::mt19937_64 rng(987);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  int done = 0;
  while (done < 200) {
    int j = 1 + static_cast<int>(rng() % 8);
    std::vector<Rational> x(j), y(j);
    for (int i = 0; i < j; ++i) {
      x[i] = Rational(num(rng), den(rng));
      y[i] = Rational(num(rng), den(rng));
    }
    bool valid = true;
    for (int i = 1; i <= j - 1; ++i)
      if (x[i - 1] == y[i]) valid = false;
    if (!valid) continue;
    CHECK(telescoping_identity_check(x, y, j));
    ++done;
  }
  CHECK_THROWS(telescoping_identity_check({Rational(1), Rational(2)}, {Rational(0), Rational(1)}, 2));
}
