#include "gln/rep_matrices.hpp"

#include <stdexcept>

namespace gln {

namespace {

// l_{ik} = m_{ik} - i; k = n+1 addresses the top row (i = 0..n).
Rational lval(const GzPattern& p, int i, int k) { return p.m(i, k) - i; }

CMatrix from_dense(const Eigen::MatrixXcd& d) {
  CMatrix out(static_cast<int>(d.rows()), static_cast<int>(d.cols()));
  for (int c = 0; c < d.cols(); ++c)
    for (int r = 0; r < d.rows(); ++r)
      if (d(r, c) != Complex(0.0, 0.0)) out.insert(r, c, d(r, c));
  return out;
}

struct RadicandAccum {
  Rational num = 1;
  Rational den = 1;
  void mul_num(const Rational& f) { num *= f; }
  void mul_den(const Rational& f) { den *= f; }
  Rational value() const {
    if (den == 0)
      throw std::logic_error("rep_matrices: zero denominator on a GZ-valid target (transcription bug)");
    return num / den;
  }
};

} // namespace

Rational diagonal_action(int k, const GzPattern& p) {
  const int n = p.n();
  if (k == 0) {
    Rational v = p.top[0];
    for (int j = 1; j <= n; ++j) v -= p.theta(j);
    return v;
  }
  Rational v = 0;
  for (int j = 1; j <= k; ++j) v += p.m(j, k);
  for (int j = 1; j <= k - 1; ++j) v -= p.m(j, k - 1);
  return v;
}

SurdMatrix diagonal_matrix(int k, const BasisIndex& basis) {
  const int dim = static_cast<int>(basis.size());
  SurdMatrix out(dim, dim);
  for (int c = 0; c < dim; ++c) {
    Rational v = diagonal_action(k, basis.pattern(c));
    if (v != 0) out.insert(c, c, Surd::from_rational(v));
  }
  return out;
}

SurdMatrix adjacent_even_matrix(int k, bool raise, const BasisIndex& basis) {
  const int n = basis.n();
  if (k < 2 || k > n) throw std::invalid_argument("adjacent_even_matrix: k out of range");
  const int dim = static_cast<int>(basis.size());
  SurdMatrix out(dim, dim);
  const int shift = raise ? 1 : -1;
  for (int c = 0; c < dim; ++c) {
    const GzPattern& src = basis.pattern(c);
    for (int j = 1; j <= k - 1; ++j) {
      GzPattern tgt = src;
      tgt.m(j, k - 1) += shift;
      auto row = basis.index_of(tgt);
      if (!row) continue; // structural zero: target violates (GZ1)-(GZ4)
      RadicandAccum acc;
      if (raise) {
        for (int i = 1; i <= k; ++i) acc.mul_num(lval(src, i, k) - lval(src, j, k - 1));
        for (int i = 1; i <= k - 2; ++i) acc.mul_num(lval(src, i, k - 2) - lval(src, j, k - 1) - 1);
        for (int i = 1; i <= k - 1; ++i) {
          if (i == j) continue;
          acc.mul_den(lval(src, i, k - 1) - lval(src, j, k - 1));
          acc.mul_den(lval(src, i, k - 1) - lval(src, j, k - 1) - 1);
        }
      } else {
        for (int i = 1; i <= k; ++i) acc.mul_num(lval(src, i, k) - lval(src, j, k - 1) + 1);
        for (int i = 1; i <= k - 2; ++i) acc.mul_num(lval(src, i, k - 2) - lval(src, j, k - 1));
        for (int i = 1; i <= k - 1; ++i) {
          if (i == j) continue;
          acc.mul_den(lval(src, i, k - 1) - lval(src, j, k - 1));
          acc.mul_den(lval(src, i, k - 1) - lval(src, j, k - 1) + 1);
        }
      }
      Rational radicand = -acc.value();
      if (radicand == 0) continue;
      if (radicand < 0)
        throw std::logic_error("adjacent_even_matrix: negative radicand on GZ-valid target");
      out.insert(static_cast<int>(*row), c, Surd::sqrt_of(radicand));
    }
  }
  return out;
}

namespace {

// One term of the nested sums in the odd-generator actions: the chain
// (i_j, ..., i_n) fixes which label in each of the rows j..n is shifted.
void odd_term(const BasisIndex& basis, int j, bool e0j, int col, const GzPattern& src,
              std::vector<int>& chain, int r, SurdMatrix& out) {
  const int n = basis.n();
  if (r < j) {
    const int shift = e0j ? -1 : 1;
    GzPattern tgt = src;
    for (int row = j; row <= n; ++row) tgt.m(chain[row - j], row) += shift;
    auto idx = basis.index_of(tgt);
    if (!idx) return;
    const int i_n = chain[n - j];
    int prefactor = e0j ? src.theta(i_n) : (1 - src.theta(i_n));
    if (prefactor == 0) return;
    int sign = (src.theta_sum(i_n - 1) % 2 == 0) ? 1 : -1;
    RadicandAccum acc;
    acc.mul_num(lval(src, i_n, n + 1) + lval(src, 0, n + 1) + 1);
    for (int rr = j + 1; rr <= n; ++rr) {
      const int ir = chain[rr - j];
      const int irm1 = chain[rr - 1 - j];
      if (ir > irm1) sign = -sign; // S(i_r, i_{r-1})
      const Rational corr = e0j ? Rational(1) : Rational(-1);
      for (int k = 1; k <= rr - 1; ++k) {
        if (k == irm1) continue;
        acc.mul_num(lval(src, k, rr - 1) - lval(src, ir, rr) + (e0j ? 0 : -1));
        acc.mul_den(lval(src, k, rr - 1) - lval(src, irm1, rr - 1) + corr);
      }
      for (int k = 1; k <= rr; ++k) {
        if (k == ir) continue;
        acc.mul_num(lval(src, k, rr) - lval(src, irm1, rr - 1) + (e0j ? 1 : 0));
        acc.mul_den(lval(src, k, rr) - lval(src, ir, rr));
      }
    }
    for (int k = 1; k <= n; ++k) {
      if (k == i_n) continue;
      acc.mul_num(lval(src, k, n) - lval(src, i_n, n));
      acc.mul_den(lval(src, k, n + 1) - lval(src, i_n, n + 1));
    }
    const int i_j = chain[0];
    for (int k = 1; k <= j - 1; ++k)
      acc.mul_num(lval(src, k, j - 1) - lval(src, i_j, j) + (e0j ? 0 : -1));
    for (int k = 1; k <= j; ++k) {
      if (k == i_j) continue;
      acc.mul_den(lval(src, k, j) - lval(src, i_j, j));
    }
    Rational radicand = acc.value();
    if (radicand == 0) return;
    if (radicand < 0)
      throw std::logic_error("odd_matrix: negative radicand on GZ-valid target");
    out.insert(static_cast<int>(*idx), col, Surd::signed_sqrt(sign, radicand));
    return;
  }
  for (int i = 1; i <= r; ++i) {
    chain[r - j] = i;
    odd_term(basis, j, e0j, col, src, chain, r - 1, out);
  }
}

} // namespace

SurdMatrix odd_matrix(int j, bool e0j, const BasisIndex& basis) {
  const int n = basis.n();
  if (j < 1 || j > n) throw std::invalid_argument("odd_matrix: j out of range");
  const int dim = static_cast<int>(basis.size());
  SurdMatrix out(dim, dim);
  std::vector<int> chain(n - j + 1);
  for (int c = 0; c < dim; ++c) {
    odd_term(basis, j, e0j, c, basis.pattern(c), chain, n, out);
  }
  return out;
}

CMatrix element_matrix(int i, int j, const BasisIndex& basis) {
  if (i == j) return to_complex(diagonal_matrix(i, basis));
  if (i == 0) return to_complex(odd_matrix(j, /*e0j=*/true, basis));
  if (j == 0) return to_complex(odd_matrix(i, /*e0j=*/false, basis));
  if (j == i + 1) return to_complex(adjacent_even_matrix(j, /*raise=*/true, basis));
  if (j == i - 1) return to_complex(adjacent_even_matrix(i, /*raise=*/false, basis));
  // Non-adjacent even elements via commutators of adjacent ones:
  //   i < j: e_{ij} = [e_{i,j-1}, e_{j-1,j}];  i > j: e_{ij} = [e_{i,j+1}, e_{j+1,j}].
  Eigen::MatrixXcd a, b;
  if (i < j) {
    a = to_dense(element_matrix(i, j - 1, basis));
    b = to_dense(element_matrix(j - 1, j, basis));
  } else {
    a = to_dense(element_matrix(i, j + 1, basis));
    b = to_dense(element_matrix(j + 1, j, basis));
  }
  return from_dense(a * b - b * a);
}

CMatrix assemble_odd(const OddElement& element, const BasisIndex& basis) {
  const int n = basis.n();
  if (static_cast<int>(element.alpha.size()) != n)
    throw std::invalid_argument("assemble_odd: expected n coefficients");
  const int dim = static_cast<int>(basis.size());
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  for (int j = 1; j <= n; ++j) {
    const Complex aj = element.alpha[j - 1];
    if (aj == Complex(0.0, 0.0)) continue;
    acc += aj * to_dense(odd_matrix(j, /*e0j=*/true, basis));
    acc += std::conj(aj) * to_dense(odd_matrix(j, /*e0j=*/false, basis));
  }
  return from_dense(acc);
}

} // namespace gln
