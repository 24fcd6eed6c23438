#include "gln/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gln {

namespace {

constexpr double kPi = 3.14159265358979323846;

void validate_config(const ChainConfig& cfg) {
  if (cfg.n < 2) throw std::invalid_argument("chain: need at least two oscillators");
  if (!(cfg.mu > 0.0)) throw std::invalid_argument("chain: mass must be positive");
  if (!(cfg.omega > 0.0)) throw std::invalid_argument("chain: frequency must be positive");
  if (!(cfg.hbar > 0.0)) throw std::invalid_argument("chain: hbar must be positive");
  if (cfg.c < 0.0) throw std::invalid_argument("chain: coupling must be nonnegative");
}

double min_beta(int n, double omega, double c) {
  std::vector<double> wj(n);
  double sum = 0.0;
  for (int j = 1; j <= n; ++j) {
    double s = std::sin(kPi * j / n);
    wj[j - 1] = std::sqrt(omega * omega + 4.0 * c * s * s);
    sum += wj[j - 1];
  }
  double mb = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= n; ++j) mb = std::min(mb, -wj[j - 1] + sum / (n - 1));
  return mb;
}

} // namespace

ModeData mode_data(const ChainConfig& cfg) {
  validate_config(cfg);
  const int n = cfg.n;
  ModeData md;
  md.omega_j.resize(n);
  md.beta_j.resize(n);
  md.gamma_j.resize(n);
  double sum = 0.0;
  for (int j = 1; j <= n; ++j) {
    double s = std::sin(kPi * j / n);
    md.omega_j[j - 1] = std::sqrt(cfg.omega * cfg.omega + 4.0 * cfg.c * s * s);
    sum += md.omega_j[j - 1];
  }
  for (int j = 1; j <= n; ++j) {
    double b = -md.omega_j[j - 1] + sum / (n - 1);
    if (b < -1e-12 * sum)
      throw std::invalid_argument("mode_data: coupling beyond the critical value (negative beta)");
    md.beta_j[j - 1] = std::max(b, 0.0);
    md.gamma_j[j - 1] = std::sqrt(md.beta_j[j - 1]) / md.omega_j[j - 1];
    md.beta += md.beta_j[j - 1];
    md.gamma += md.gamma_j[j - 1] * md.gamma_j[j - 1];
  }
  return md;
}

double critical_coupling(int n, double omega) {
  if (n < 2) throw std::invalid_argument("critical_coupling: need at least two oscillators");
  if (!(omega > 0.0)) throw std::invalid_argument("critical_coupling: frequency must be positive");
  double hi = omega * omega;
  const double cap = 1e12 * omega * omega;
  while (min_beta(n, omega, hi) > 0.0) {
    hi *= 2.0;
    if (hi > cap) return std::numeric_limits<double>::infinity();
  }
  double lo = 0.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (min_beta(n, omega, mid) > 0.0) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

OperatorSpec position_operator(const ChainConfig& cfg, int r) {
  ModeData md = mode_data(cfg);
  const int n = cfg.n;
  OperatorSpec spec;
  spec.element.alpha.resize(n);
  const double pref = std::sqrt(cfg.hbar / (cfg.mu * n));
  for (int j = 1; j <= n; ++j) {
    double phase = -2.0 * kPi * j * r / n;
    spec.element.alpha[j - 1] =
        pref * md.gamma_j[j - 1] * Complex(std::cos(phase), std::sin(phase));
  }
  spec.scale = std::sqrt(cfg.hbar * md.gamma / (cfg.mu * n));
  return spec;
}

OperatorSpec momentum_operator(const ChainConfig& cfg, int r) {
  ModeData md = mode_data(cfg);
  const int n = cfg.n;
  OperatorSpec spec;
  spec.element.alpha.resize(n);
  const double pref = std::sqrt(cfg.mu * cfg.hbar / n);
  for (int j = 1; j <= n; ++j) {
    double phase = -2.0 * kPi * j * r / n;
    spec.element.alpha[j - 1] = Complex(0.0, 1.0) * pref * std::sqrt(md.beta_j[j - 1]) *
                                Complex(std::cos(phase), std::sin(phase));
  }
  spec.scale = std::sqrt(cfg.mu * cfg.hbar * md.beta / n);
  return spec;
}

std::vector<double> hamiltonian_diagonal(const BasisIndex& basis, const ModeData& md,
                                         double hbar) {
  std::vector<double> out(basis.size());
  for (size_t i = 0; i < basis.size(); ++i)
    out[i] = hbar * hamiltonian_energy(basis.pattern(i), md.beta_j);
  return out;
}

// --- Fock representations ----------------------------------------------------

namespace {

void require_fock(const HighestWeight& hw, int p) {
  HighestWeight ref = HighestWeight::fock(hw.n, p);
  if (hw.top != ref.top)
    throw std::invalid_argument("chain: basis does not belong to W([p,0,...,0])");
}

void require_ladder(const HighestWeight& hw, int p) {
  HighestWeight ref = HighestWeight::ladder(hw.n, p);
  if (hw.top != ref.top)
    throw std::invalid_argument("chain: basis does not belong to W([1,p-1,0,...,0])");
}

int occupation_total(const std::vector<int>& phi) {
  int s = 0;
  for (int b : phi) {
    if (b != 0 && b != 1) throw std::invalid_argument("chain: occupation entries must be 0 or 1");
    s += b;
  }
  return s;
}

} // namespace

GzPattern fock_pattern(const HighestWeight& hw, const std::vector<int>& phi) {
  const int n = hw.n;
  if (static_cast<int>(phi.size()) != n)
    throw std::invalid_argument("fock_pattern: expected n occupation numbers");
  occupation_total(phi);
  GzPattern pat;
  pat.top = hw.top;
  pat.rows.resize(n);
  int s = 0;
  for (int k = 1; k <= n; ++k) {
    s += phi[k - 1];
    pat.rows[k - 1].assign(k, Rational(0));
    for (int i = 1; i <= std::min(s, k); ++i) pat.rows[k - 1][i - 1] = 1;
  }
  if (!validate_pattern(hw, pat))
    throw std::invalid_argument("fock_pattern: occupation exceeds the representation label");
  return pat;
}

std::vector<int> fock_occupation(const GzPattern& p) {
  const int n = p.n();
  std::vector<int> phi(n);
  Rational prev = 0;
  for (int i = 1; i <= n; ++i) {
    Rational cur = 0;
    for (int j = 1; j <= i; ++j) cur += p.m(j, i);
    phi[i - 1] = static_cast<int>(to_int(cur - prev));
    prev = cur;
  }
  return phi;
}

std::optional<std::pair<Surd, std::vector<int>>> fock_action(int i, int j, int p,
                                                             const std::vector<int>& phi) {
  const int n = static_cast<int>(phi.size());
  const int total = occupation_total(phi);
  auto parity_sign = [&](int k) {
    int s = 0;
    for (int l = 1; l <= k - 1; ++l) s += phi[l - 1];
    return (s % 2 == 0) ? 1 : -1;
  };
  if (i == 0 && j == 0) {
    if (p == total) return std::nullopt;
    return std::make_pair(Surd::from_rational(Rational(p - total)), phi);
  }
  if (i == j && i >= 1 && i <= n) {
    if (phi[i - 1] == 0) return std::nullopt;
    return std::make_pair(Surd::from_rational(Rational(1)), phi);
  }
  if (j == 0 && i >= 1 && i <= n) { // e_{k0}
    const int k = i;
    if (phi[k - 1] == 1 || total == p) return std::nullopt;
    std::vector<int> out = phi;
    out[k - 1] = 1;
    return std::make_pair(Surd::signed_sqrt(parity_sign(k), Rational(p - total)), out);
  }
  if (i == 0 && j >= 1 && j <= n) { // e_{0k}
    const int k = j;
    if (phi[k - 1] == 0) return std::nullopt;
    std::vector<int> out = phi;
    out[k - 1] = 0;
    return std::make_pair(Surd::signed_sqrt(parity_sign(k), Rational(p - total + 1)), out);
  }
  throw std::invalid_argument("fock_action: only diagonal and odd elements have closed forms");
}

std::map<double, double> fock_probabilities(int p, const ChainConfig& cfg,
                                            const std::vector<int>& phi, int r,
                                            bool momentum) {
  validate_config(cfg);
  (void)r; // probabilities are independent of the oscillator position
  const int n = cfg.n;
  if (static_cast<int>(phi.size()) != n)
    throw std::invalid_argument("fock_probabilities: expected n occupation numbers");
  const int total = occupation_total(phi);
  if (total > std::min(p, n))
    throw std::invalid_argument("fock_probabilities: occupation exceeds the representation label");
  ModeData md = mode_data(cfg);
  std::vector<double> weight(n);
  double scale;
  if (momentum) {
    for (int j = 0; j < n; ++j) weight[j] = md.beta_j[j] / md.beta;
    scale = std::sqrt(cfg.mu * cfg.hbar * md.beta / n);
  } else {
    for (int j = 0; j < n; ++j) weight[j] = md.gamma_j[j] * md.gamma_j[j] / md.gamma;
    scale = std::sqrt(cfg.hbar * md.gamma / (cfg.mu * n));
  }
  const bool typical = p > n - 1;
  const int kmax = typical ? n - 1 : p;
  std::map<double, double> out;
  for (int K = 0; K <= kmax; ++K) {
    double prob = 0.0;
    if (total == K) {
      for (int j = 0; j < n; ++j) prob += 0.5 * (1 - phi[j]) * weight[j];
    } else if (total == K + 1) {
      for (int j = 0; j < n; ++j) prob += 0.5 * phi[j] * weight[j];
    }
    double x = scale * std::sqrt(static_cast<double>(p - K));
    out[x] += prob;
    out[-x] += prob; // for x == 0 the two labels merge into one outcome
  }
  return out;
}

namespace {

double falling_factorial(int p, int k) {
  double f = 1.0;
  for (int i = 0; i < k; ++i) f *= static_cast<double>(p - i);
  return f;
}

void check_unit(const Eigen::VectorXcd& v, const char* what) {
  if (std::abs(v.norm() - 1.0) > 1e-8) throw std::logic_error(what);
}

EigvecSet collect_sorted(std::vector<std::pair<double, Eigen::VectorXcd>>& vecs, size_t dim) {
  if (vecs.size() != dim)
    throw std::logic_error("chain: eigenvector count does not match the dimension");
  std::stable_sort(vecs.begin(), vecs.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  EigvecSet out;
  out.vectors.resize(dim, dim);
  out.eigenvalues.resize(dim);
  for (size_t i = 0; i < dim; ++i) {
    out.eigenvalues[i] = vecs[i].first;
    out.vectors.col(i) = vecs[i].second;
  }
  return out;
}

} // namespace

EigvecSet fock_eigenvectors(int p, const ChainConfig& cfg, int r, const BasisIndex& basis) {
  validate_config(cfg);
  const int n = cfg.n;
  const HighestWeight& hw = basis.highest_weight();
  require_fock(hw, p);
  OperatorSpec op = position_operator(cfg, r);
  RotationU rot = build_rotation(op.element.alpha);
  Eigen::VectorXcd top = rotated_highest_weight(hw, rot, basis);

  std::vector<Eigen::MatrixXcd> Ej0(n + 1);
  for (int j = 1; j <= n; ++j) Ej0[j] = rotated_odd_dense(j, /*E0j=*/false, rot, basis);

  // v(phi) = E_{10}^{phi_1} ... E_{n0}^{phi_n} |Lambda)_E / sqrt(p(p-1)...),
  // applied right to left; keyed by the occupation bitmask.
  const int pmax = std::min(p, n);
  std::vector<Eigen::VectorXcd> v(size_t(1) << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int total = __builtin_popcount(mask);
    if (total > pmax) continue;
    Eigen::VectorXcd vec = top;
    for (int j = n; j >= 1; --j)
      if ((mask >> (j - 1)) & 1) vec = Ej0[j] * vec;
    vec /= std::sqrt(falling_factorial(p, total));
    check_unit(vec, "fock_eigenvectors: v(phi) is not normalized (internal)");
    v[mask] = std::move(vec);
  }

  std::vector<std::pair<double, Eigen::VectorXcd>> vecs;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    int K = __builtin_popcount(mask);
    if (K > pmax) continue;
    unsigned with_n = mask | (1u << (n - 1));
    if (K <= p - 1) {
      double sgn = (K % 2 == 0) ? 1.0 : -1.0;
      double x = op.scale * std::sqrt(static_cast<double>(p - K));
      vecs.emplace_back(x, inv_sqrt2 * (v[mask] + sgn * v[with_n]));
      vecs.emplace_back(-x, inv_sqrt2 * (v[mask] - sgn * v[with_n]));
    } else { // atypical zero modes: |phi| = p with phi_n = 0
      vecs.emplace_back(0.0, v[mask]);
    }
  }
  return collect_sorted(vecs, basis.size());
}

// --- Ladder representations --------------------------------------------------

GzPattern ladder_pattern(const HighestWeight& hw, const LadderState& st) {
  const int n = hw.n;
  const int p = static_cast<int>(to_int(hw.top[1] + 1));
  if (static_cast<int>(st.s.size()) != n)
    throw std::invalid_argument("ladder_pattern: expected n mode numbers");
  if (st.theta != 0 && st.theta != 1)
    throw std::invalid_argument("ladder_pattern: theta must be 0 or 1");
  int sum = st.theta;
  for (int v : st.s) {
    if (v < 0) throw std::invalid_argument("ladder_pattern: negative mode number");
    sum += v;
  }
  if (sum != p) throw std::invalid_argument("ladder_pattern: theta + sum(s) must equal p");
  GzPattern pat;
  pat.top = hw.top;
  pat.rows.resize(n);
  int acc = 0;
  for (int k = 1; k <= n; ++k) {
    acc += st.s[k - 1];
    pat.rows[k - 1].assign(k, Rational(0));
    pat.rows[k - 1][0] = acc;
  }
  if (!validate_pattern(hw, pat))
    throw std::logic_error("ladder_pattern: constructed pattern fails validation (internal)");
  return pat;
}

LadderState ladder_state(int p, const GzPattern& pattern) {
  const int n = pattern.n();
  LadderState st;
  st.theta = p - static_cast<int>(to_int(pattern.m(1, n)));
  st.s.resize(n);
  Rational prev = 0;
  for (int k = 1; k <= n; ++k) {
    st.s[k - 1] = static_cast<int>(to_int(pattern.m(1, k) - prev));
    prev = pattern.m(1, k);
  }
  return st;
}

std::optional<std::pair<Surd, LadderState>> ladder_action(int i, int j, int p,
                                                          const LadderState& st) {
  const int n = static_cast<int>(st.s.size());
  if (i == 0 && j == 0) {
    if (st.theta == 0) return std::nullopt;
    return std::make_pair(Surd::from_rational(Rational(1)), st);
  }
  if (i == j && i >= 1 && i <= n) {
    if (st.s[i - 1] == 0) return std::nullopt;
    return std::make_pair(Surd::from_rational(Rational(st.s[i - 1])), st);
  }
  if (j == 0 && i >= 1 && i <= n) { // e_{k0}
    if (st.theta == 0) return std::nullopt;
    LadderState out = st;
    out.theta = 0;
    out.s[i - 1] += 1;
    return std::make_pair(Surd::sqrt_of(Rational(st.s[i - 1] + 1)), out);
  }
  if (i == 0 && j >= 1 && j <= n) { // e_{0k}
    if (st.theta == 1 || st.s[j - 1] == 0) return std::nullopt;
    LadderState out = st;
    out.theta = 1;
    out.s[j - 1] -= 1;
    return std::make_pair(Surd::sqrt_of(Rational(st.s[j - 1])), out);
  }
  (void)p;
  throw std::invalid_argument("ladder_action: only diagonal and odd elements have closed forms");
}

LadderResult ladder_eigen(int p, const ChainConfig& cfg, int r, const BasisIndex& basis) {
  validate_config(cfg);
  const int n = cfg.n;
  if (p < 1) throw std::invalid_argument("ladder_eigen: p must be a positive integer");
  const HighestWeight& hw = basis.highest_weight();
  require_ladder(hw, p);
  OperatorSpec op = position_operator(cfg, r);
  RotationU rot = build_rotation(op.element.alpha);
  Eigen::VectorXcd top = rotated_highest_weight(hw, rot, basis);

  Eigen::MatrixXcd E10 = rotated_odd_dense(1, /*E0j=*/false, rot, basis);
  std::vector<Eigen::MatrixXcd> Elower(n); // Elower[k] = E_{k+1,k}, k = 1..n-1
  for (int k = 1; k <= n - 1; ++k) Elower[k] = rotated_even_dense(k + 1, k, rot, basis);

  // v(phi;t) built from the E highest-weight vector; t_n is fixed by the
  // constraint phi + sum(t) = p, so index by phi and (t_1,...,t_{n-1}).
  auto build_v = [&](int phi, const std::vector<int>& t_head) {
    int head = 0;
    for (int v : t_head) head += v;
    const int t_n = p - phi - head;
    if (t_n < 0) throw std::logic_error("ladder_eigen: negative t_n (internal)");
    Eigen::VectorXcd vec = top;
    double norm2 = std::pow(static_cast<double>(p), 1 - phi);
    if (phi == 0) vec = E10 * vec;
    int partial = 0;
    for (int k = 1; k <= n - 1; ++k) {
      partial += t_head[k - 1];
      const int a = p - phi - partial; // exponent of E_{k+1,k}
      for (int q = 0; q < a; ++q) vec = Elower[k] * vec;
      double f = 1.0;
      for (int q = 1; q <= a; ++q) f *= q;                        // a!
      for (int q = 0; q < a; ++q) f *= (t_head[k - 1] + 1 + q);   // (t_k+1)_a
      norm2 *= f;
    }
    vec /= std::sqrt(norm2);
    check_unit(vec, "ladder_eigen: v(phi;t) is not normalized (internal)");
    return vec;
  };

  std::vector<std::pair<double, Eigen::VectorXcd>> vecs;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<int> t_head(n - 1, 0);
  auto rec = [&](auto&& self, int k, int used) -> void {
    if (k == n) {
      const int K = used;
      if (K <= p - 1) {
        double x = op.scale * std::sqrt(static_cast<double>(p - K));
        Eigen::VectorXcd v1 = build_v(1, t_head); // t_n = p-1-K
        Eigen::VectorXcd v0 = build_v(0, t_head); // t_n = p-K
        vecs.emplace_back(x, inv_sqrt2 * (v1 + v0));
        vecs.emplace_back(-x, inv_sqrt2 * (v1 - v0));
      } else if (K == p) {
        vecs.emplace_back(0.0, build_v(0, t_head)); // t_n = 0
      }
      return;
    }
    for (int v = 0; used + v <= p; ++v) {
      t_head[k - 1] = v;
      self(self, k + 1, used + v);
    }
  };
  rec(rec, 1, 0);

  LadderResult res;
  res.vectors = collect_sorted(vecs, basis.size());
  res.spectrum.scale = op.scale;
  for (int K = p; K >= 0; --K) {
    Int mult = binomial(Int(n - 2 + K), Int(K));
    double x = op.scale * std::sqrt(static_cast<double>(p - K));
    if (K == p) {
      res.spectrum.levels.push_back({0.0, mult});
    } else {
      res.spectrum.levels.push_back({-x, mult});
      res.spectrum.levels.push_back({x, mult});
    }
  }
  std::sort(res.spectrum.levels.begin(), res.spectrum.levels.end(),
            [](const SpectrumLevel& a, const SpectrumLevel& b) { return a.value < b.value; });
  return res;
}

} // namespace gln
