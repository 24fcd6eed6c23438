#include "gln/gz.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gln {

HighestWeight::HighestWeight(int n_, std::vector<Rational> labels) : n(n_), top(std::move(labels)) {
  if (n < 1) throw std::invalid_argument("HighestWeight: n must be >= 1");
  if (static_cast<int>(top.size()) != n + 1)
    throw std::invalid_argument("HighestWeight: expected n+1 labels");
}

HighestWeight HighestWeight::fock(int n, const Rational& p) {
  std::vector<Rational> labels(n + 1, Rational(0));
  labels[0] = p;
  return HighestWeight(n, labels);
}

HighestWeight HighestWeight::ladder(int n, const Rational& p) {
  std::vector<Rational> labels(n + 1, Rational(0));
  labels[0] = 1;
  labels[1] = p - 1;
  return HighestWeight(n, labels);
}

bool HighestWeight::labels_admissible() const {
  for (int i = 1; i < n; ++i) {
    if (!is_nonneg_integer(top[i] - top[i + 1])) return false;
  }
  return true;
}

UnitarityClass classify_unitary(const HighestWeight& hw) {
  if (!hw.labels_admissible())
    throw std::invalid_argument("classify_unitary: labels violate the integer-difference condition");
  const int n = hw.n;
  if (hw.top[0] + hw.top[n] - n + 1 > 0) return {UnitaryKind::Typical, 0};
  for (int k = 1; k <= n; ++k) {
    if (hw.top[0] + hw.top[k] != k - 1) continue;
    bool tail_equal = true;
    for (int j = k; j < n; ++j)
      if (hw.top[j] != hw.top[j + 1]) { tail_equal = false; break; }
    if (tail_equal) return {UnitaryKind::Atypical, k};
  }
  return {UnitaryKind::NotUnitary, 0};
}

int GzPattern::theta_sum(int upto) const {
  int s = 0;
  for (int i = 1; i <= upto; ++i) s += theta(i);
  return s;
}

std::vector<Rational> GzPattern::flat_key() const {
  std::vector<Rational> key;
  for (int k = n(); k >= 1; --k)
    for (const auto& v : rows[k - 1]) key.push_back(v);
  return key;
}

bool validate_pattern(const HighestWeight& hw, const GzPattern& p) {
  const int n = hw.n;
  if (p.n() != n || p.top != hw.top) return false;
  for (int k = 1; k <= n; ++k)
    if (static_cast<int>(p.rows[k - 1].size()) != k) return false;
  // (GZ1)
  if (!hw.labels_admissible()) return false;
  // (GZ2)
  for (int i = 1; i <= n; ++i) {
    Rational d = p.m(i, n) - hw.top[i];
    if (d != 0 && d != 1) return false;
  }
  // (GZ3)
  for (int k = 1; k <= n; ++k) {
    if (hw.top[0] + hw.top[k] == k - 1 && p.m(k, n) != hw.top[k]) return false;
  }
  // (GZ4)
  for (int j = 1; j <= n - 1; ++j) {
    for (int i = 1; i <= j; ++i) {
      if (!is_nonneg_integer(p.m(i, j + 1) - p.m(i, j))) return false;
      if (!is_nonneg_integer(p.m(i, j) - p.m(i + 1, j + 1))) return false;
    }
  }
  return true;
}

GzPattern highest_weight_pattern(const HighestWeight& hw) {
  GzPattern p;
  p.top = hw.top;
  p.rows.resize(hw.n);
  for (int k = 1; k <= hw.n; ++k) {
    p.rows[k - 1].assign(hw.top.begin() + 1, hw.top.begin() + 1 + k);
  }
  return p;
}

BasisIndex::BasisIndex(HighestWeight hw, std::vector<GzPattern> patterns)
    : hw_(std::move(hw)), patterns_(std::move(patterns)) {
  std::sort(patterns_.begin(), patterns_.end(),
            [](const GzPattern& a, const GzPattern& b) { return a.flat_key() > b.flat_key(); });
  for (size_t i = 0; i < patterns_.size(); ++i) lookup_[patterns_[i].flat_key()] = i;
}

std::optional<size_t> BasisIndex::index_of(const GzPattern& p) const {
  auto it = lookup_.find(p.flat_key());
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

size_t dimension_cap() {
  if (const char* env = std::getenv("GLN_DIM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<size_t>(v);
  }
  return kDefaultDimensionCap;
}

namespace {

// Fill rows k = next down to 1 given the row above, respecting betweenness.
void fill_lower_rows(GzPattern& p, int k, std::vector<GzPattern>& out, size_t cap) {
  if (k == 0) {
    if (out.size() >= cap)
      throw std::runtime_error("enumerate_basis: dimension cap exceeded");
    out.push_back(p);
    return;
  }
  const std::vector<Rational>& above = p.rows[k]; // row k+1
  p.rows[k - 1].assign(k, Rational(0));
  // Recursive column fill within the row.
  struct Filler {
    GzPattern& p;
    int k;
    const std::vector<Rational>& above;
    std::vector<GzPattern>& out;
    size_t cap;
    void column(int i) {
      if (i > k) {
        fill_lower_rows(p, k - 1, out, cap);
        return;
      }
      Rational lo = above[i]; // m_{i+1,k+1}
      Rational hi = above[i - 1]; // m_{i,k+1}
      if (!is_integer(hi - lo) || hi < lo) return;
      for (Rational v = lo; v <= hi; v += 1) {
        // also m_{i-1,k} >= m_{i,k+1} is imposed by the previous column choice
        if (i > 1 && p.rows[k - 1][i - 2] < v) continue;
        p.rows[k - 1][i - 1] = v;
        column(i + 1);
      }
    }
  } filler{p, k, above, out, cap};
  filler.column(1);
}

} // namespace

BasisIndex enumerate_basis(const HighestWeight& hw, size_t cap) {
  if (!hw.labels_admissible())
    throw std::invalid_argument("enumerate_basis: labels violate the integer-difference condition");
  const int n = hw.n;
  std::vector<GzPattern> out;
  GzPattern p;
  p.top = hw.top;
  p.rows.resize(n);
  // Row n: the theta choices, gated by (GZ3).
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    p.rows[n - 1].assign(n, Rational(0));
    for (int i = 1; i <= n && ok; ++i) {
      int theta = (mask >> (i - 1)) & 1;
      if (theta == 1 && hw.top[0] + hw.top[i] == i - 1) ok = false;
      p.rows[n - 1][i - 1] = hw.top[i] + theta;
    }
    if (!ok) continue;
    fill_lower_rows(p, n - 1, out, cap);
  }
  return BasisIndex(hw, std::move(out));
}

Rational hamiltonian_energy_exact(const GzPattern& p, const std::vector<Rational>& beta) {
  const int n = p.n();
  if (static_cast<int>(beta.size()) != n)
    throw std::invalid_argument("hamiltonian_energy: expected n beta values");
  Rational beta_sum = 0;
  for (const auto& b : beta) beta_sum += b;
  Rational top_sum = 0;
  for (int l = 0; l <= n; ++l) top_sum += p.top[l];
  Rational row_n_sum = 0;
  for (int l = 1; l <= n; ++l) row_n_sum += p.m(l, n);
  Rational e = beta_sum * (top_sum - row_n_sum);
  for (int j = 1; j <= n; ++j) {
    Rational diag = 0;
    for (int l = 1; l <= j; ++l) diag += p.m(l, j);
    for (int l = 1; l <= j - 1; ++l) diag -= p.m(l, j - 1);
    e += beta[j - 1] * diag;
  }
  return e;
}

double hamiltonian_energy(const GzPattern& p, const std::vector<double>& beta) {
  const int n = p.n();
  if (static_cast<int>(beta.size()) != n)
    throw std::invalid_argument("hamiltonian_energy: expected n beta values");
  double beta_sum = 0;
  for (double b : beta) beta_sum += b;
  double top_sum = 0;
  for (int l = 0; l <= n; ++l) top_sum += to_double(p.top[l]);
  double row_n_sum = 0;
  for (int l = 1; l <= n; ++l) row_n_sum += to_double(p.m(l, n));
  double e = beta_sum * (top_sum - row_n_sum);
  for (int j = 1; j <= n; ++j) {
    double diag = 0;
    for (int l = 1; l <= j; ++l) diag += to_double(p.m(l, j));
    for (int l = 1; l <= j - 1; ++l) diag -= to_double(p.m(l, j - 1));
    e += beta[j - 1] * diag;
  }
  return e;
}

Int gl_dimension(const std::vector<Rational>& label) {
  const int L = static_cast<int>(label.size());
  for (int i = 0; i + 1 < L; ++i)
    if (!is_nonneg_integer(label[i] - label[i + 1]))
      throw std::invalid_argument("gl_dimension: label not weakly decreasing with integer steps");
  Rational dim = 1;
  for (int i = 1; i <= L; ++i) {
    for (int j = i + 1; j <= L; ++j) {
      dim *= (label[i - 1] - label[j - 1] + (j - i)) / Rational(j - i);
    }
  }
  return to_int(dim);
}

} // namespace gln
