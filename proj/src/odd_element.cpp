#include "gln/odd_element.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace gln {

namespace {

RotationU rotation_from_last_row(std::vector<Complex> c, double alpha_norm) {
  const int n = static_cast<int>(c.size());
  RotationU rot;
  rot.c = c;
  rot.alpha_norm = alpha_norm;
  rot.U = Eigen::MatrixXcd::Zero(n, n);
  for (int l = 0; l < n; ++l) rot.U(n - 1, l) = c[l];
  for (int j = 1; j <= n - 1; ++j) {
    double G = 0.0;
    for (int l = 0; l < j; ++l) G += std::norm(c[l]);
    if (G == 0.0) {
      // c_1..c_j all vanish: the axis e_j is orthogonal to everything else
      rot.U(j - 1, j - 1) = 1.0;
    } else if (c[j] == Complex(0.0, 0.0)) {
      rot.U(j - 1, j) = 1.0;
    } else {
      Eigen::VectorXcd u = Eigen::VectorXcd::Zero(n);
      for (int l = 0; l < j; ++l) u(l) = c[l];
      u(j) = -Complex(G, 0.0) / std::conj(c[j]);
      u /= u.norm();
      rot.U.row(j - 1) = u.transpose();
    }
  }
  double unitarity = (rot.U * rot.U.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (unitarity > 1e-12) throw std::logic_error("build_rotation: unitarity defect above 1e-12");
  return rot;
}

} // namespace

RotationU build_rotation(const std::vector<Complex>& alpha) {
  const int n = static_cast<int>(alpha.size());
  if (n < 1) throw std::invalid_argument("build_rotation: empty coefficient vector");
  double norm2 = 0.0;
  for (const auto& a : alpha) norm2 += std::norm(a);
  if (norm2 == 0.0) throw std::invalid_argument("build_rotation: zero odd element");
  const double norm = std::sqrt(norm2);
  std::vector<Complex> c(n);
  for (int l = 0; l < n; ++l) c[l] = std::conj(alpha[l]) / norm;
  return rotation_from_last_row(std::move(c), norm);
}

std::vector<std::vector<int>> allowed_thetas(const HighestWeight& hw,
                                             const std::vector<Rational>& label) {
  const int n = hw.n;
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> theta(n);
    std::vector<Rational> row_n(n);
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      theta[i - 1] = (mask >> (i - 1)) & 1;
      if (theta[i - 1] == 1 && hw.top[0] + hw.top[i] == i - 1) ok = false; // (GZ3)
      row_n[i - 1] = hw.top[i] + theta[i - 1];
    }
    if (!ok) continue;
    for (int i = 1; i <= n - 1 && ok; ++i) { // (GZ4) between rows n and n-1
      if (!is_nonneg_integer(row_n[i - 1] - label[i - 1])) ok = false;
      else if (!is_nonneg_integer(label[i - 1] - row_n[i])) ok = false;
    }
    if (ok) out.push_back(theta);
  }
  return out;
}

std::vector<BranchingComponent> branch(const HighestWeight& hw) {
  auto cls = classify_unitary(hw);
  if (cls.kind == UnitaryKind::NotUnitary)
    throw std::invalid_argument("branch: representation is not unitary");
  const int n = hw.n;
  std::vector<BranchingComponent> out;

  std::vector<std::vector<Rational>> labels;
  if (n == 1) {
    labels.push_back({});
  } else {
    // All [m]_{n-1} with m_{i,n+1}+1 >= m_{i,n-1} >= m_{i+1,n+1}.
    std::vector<Rational> label(n - 1);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == n) {
        labels.push_back(label);
        return;
      }
      Rational lo = hw.top[i + 1];
      Rational hi = hw.top[i] + 1;
      for (Rational v = lo; v <= hi; v += 1) {
        if (i > 1 && label[i - 2] < v) continue; // weakly decreasing
        label[i - 1] = v;
        self(self, i + 1);
      }
    };
    rec(rec, 1);
  }

  Rational top_sum = 0;
  for (const auto& t : hw.top) top_sum += t;

  for (const auto& label : labels) {
    auto thetas = allowed_thetas(hw, label);
    if (thetas.empty()) continue;
    BranchingComponent comp;
    comp.label = label;
    comp.dimV = gl_dimension(label);
    size_t count = thetas.size();
    comp.N = 0;
    while ((size_t(1) << comp.N) < count) ++comp.N;
    if ((size_t(1) << comp.N) != count)
      throw std::logic_error("branch: |A| is not a power of two (internal)");
    int min_theta_sum = n + 1;
    for (const auto& th : thetas) {
      int s = 0;
      for (int t : th) s += t;
      min_theta_sum = std::min(min_theta_sum, s);
    }
    comp.a = hw.top[0] - min_theta_sum;
    Rational label_sum = 0;
    for (const auto& v : label) label_sum += v;
    comp.ab = top_sum - label_sum;
    comp.b = comp.ab - comp.a;
    if (comp.ab == 0) {
      comp.atypical_singlet = true;
      if (comp.N != 0)
        throw std::logic_error("branch: singlet component with N > 0 (internal)");
    } else if (comp.ab < 0) {
      throw std::logic_error("branch: negative a+b in a unitary representation (internal)");
    } else if (comp.N == 0) {
      throw std::logic_error("branch: lone theta choice with a+b > 0 (internal)");
    } else {
      for (int i = 0; i <= comp.N - 1; ++i)
        comp.binom_split.emplace_back(i, binomial(comp.N - 1, i));
    }
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

double alpha_norm_of(const std::vector<Complex>& alpha) {
  double norm2 = 0.0;
  for (const auto& a : alpha) norm2 += std::norm(a);
  if (norm2 == 0.0) throw std::invalid_argument("spectrum: zero odd element");
  return std::sqrt(norm2);
}

SpectrumReport spectrum_from_components(const std::vector<BranchingComponent>& comps,
                                        double scale) {
  std::map<Rational, Int> mult; // keyed by exact a+b
  for (const auto& c : comps) {
    if (c.atypical_singlet) {
      mult[Rational(0)] += c.dimV;
    } else {
      Int per_sign = (Int(1) << (c.N - 1)) * c.dimV;
      mult[c.ab] += per_sign;
    }
  }
  SpectrumReport rep;
  rep.scale = scale;
  for (const auto& [ab, m] : mult) {
    double x = scale * std::sqrt(to_double(ab));
    if (ab == 0) {
      rep.levels.push_back({0.0, m});
    } else {
      rep.levels.push_back({-x, m});
      rep.levels.push_back({x, m});
    }
  }
  std::sort(rep.levels.begin(), rep.levels.end(),
            [](const SpectrumLevel& a, const SpectrumLevel& b) { return a.value < b.value; });
  return rep;
}

} // namespace

SpectrumReport spectrum(const HighestWeight& hw, const std::vector<Complex>& alpha) {
  return spectrum_from_components(branch(hw), alpha_norm_of(alpha));
}

SpectrumReport momentum_spectrum(const HighestWeight& hw, const std::vector<Complex>& alpha) {
  // Same multiset as the position-flavored element of equal norm.
  return spectrum(hw, alpha);
}

Eigen::MatrixXcd rotated_odd_dense(int j, bool E0j, const RotationU& rot,
                                   const BasisIndex& basis) {
  const int n = basis.n();
  const int dim = static_cast<int>(basis.size());
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  for (int l = 1; l <= n; ++l) {
    Complex u = rot.U(j - 1, l - 1);
    if (u == Complex(0.0, 0.0)) continue;
    if (E0j)
      acc += std::conj(u) * to_dense(odd_matrix(l, /*e0j=*/true, basis));
    else
      acc += u * to_dense(odd_matrix(l, /*e0j=*/false, basis));
  }
  return acc;
}

Eigen::MatrixXcd rotated_even_dense(int i, int j, const RotationU& rot,
                                    const BasisIndex& basis) {
  if (i == 0 && j == 0) return to_dense(diagonal_matrix(0, basis));
  if (i == 0) return rotated_odd_dense(j, /*E0j=*/true, rot, basis);
  if (j == 0) return rotated_odd_dense(i, /*E0j=*/false, rot, basis);
  Eigen::MatrixXcd a = rotated_odd_dense(i, /*E0j=*/false, rot, basis);
  Eigen::MatrixXcd b = rotated_odd_dense(j, /*E0j=*/true, rot, basis);
  Eigen::MatrixXcd anti = a * b + b * a; // {E_{i0}, E_{0j}}
  if (i == j) anti -= to_dense(diagonal_matrix(0, basis));
  return anti;
}

Eigen::VectorXcd rotated_highest_weight(const HighestWeight& hw, const RotationU& rot,
                                        const BasisIndex& basis) {
  const int n = hw.n;
  const int dim = static_cast<int>(basis.size());
  Eigen::VectorXcd vec = Eigen::VectorXcd::Zero(dim);

  // Enumerate the free bottom-diagonal labels d = (m_{11},...,m_{n-1,n-1});
  // every other label of |m(d))_e is frozen to the top row.
  GzPattern base = highest_weight_pattern(hw);
  std::vector<Rational> d(std::max(n - 1, 0));
  auto emit = [&](const std::vector<Rational>& dvals) {
    GzPattern p = base;
    for (int k = 1; k <= n - 1; ++k) p.m(k, k) = dvals[k - 1];
    auto idx = basis.index_of(p);
    if (!idx) throw std::logic_error("rotated_highest_weight: m(d) pattern missing from basis");
    // sign (-1)^{sum d} up to a d-independent global phase
    Int parity = 0;
    for (int i = 1; i <= n - 1; ++i) parity += to_int(hw.top[i] - dvals[i - 1]);
    double sign = (parity % 2 == 0) ? 1.0 : -1.0;
    // square-rooted binomial product
    Rational binom_prod = 1;
    for (int i = 1; i <= n - 1; ++i) {
      Rational upper = hw.top[i] - ((i + 1 <= n - 1) ? dvals[i] : hw.top[n]);
      Rational lower = hw.top[i] - dvals[i - 1];
      binom_prod *= Rational(binomial(to_int(upper), to_int(lower)));
    }
    // monomial in the (conjugated) rotation coefficients
    Complex mono(1.0, 0.0);
    for (int l = 1; l <= n; ++l) {
      Rational expo;
      if (l == 1) expo = hw.top[1] - dvals[0];
      else if (l <= n - 1) expo = dvals[l - 2] - dvals[l - 1];
      else expo = dvals[n - 2] - hw.top[n];
      Int e = to_int(expo);
      Complex base_c = std::conj(rot.c[l - 1]);
      for (Int q = 0; q < e; ++q) mono *= base_c;
    }
    vec(static_cast<int>(*idx)) += sign * std::sqrt(to_double(binom_prod)) * mono;
  };
  if (n == 1) {
    auto idx = basis.index_of(base);
    if (!idx) throw std::logic_error("rotated_highest_weight: highest-weight pattern missing");
    vec(static_cast<int>(*idx)) = 1.0;
  } else {
    auto rec = [&](auto&& self, int i) -> void {
      // d_i ranges from d_{i+1} (or m_{n,n+1}) up to m_{i,n+1}, filled from i = n-1 down.
      if (i == 0) {
        emit(d);
        return;
      }
      Rational lo = (i == n - 1) ? hw.top[n] : d[i];
      Rational hi = hw.top[i];
      for (Rational v = lo; v <= hi; v += 1) {
        d[i - 1] = v;
        self(self, i - 1);
      }
    };
    rec(rec, n - 1);
  }
  double nrm = vec.norm();
  if (nrm == 0.0) throw std::logic_error("rotated_highest_weight: vanishing vector");
  vec /= nrm;

  // The closed form is only trusted after the annihilation conditions hold.
  for (int j = 1; j <= n; ++j) {
    Eigen::MatrixXcd E0j = rotated_odd_dense(j, /*E0j=*/true, rot, basis);
    double res = (E0j * vec).norm() / std::max(1.0, E0j.norm());
    if (res > 1e-8)
      throw std::logic_error("rotated_highest_weight: E_{0j} annihilation residual above 1e-8");
  }
  for (int j = 1; j <= n - 1; ++j) {
    Eigen::MatrixXcd Ejj1 = rotated_even_dense(j, j + 1, rot, basis);
    double res = (Ejj1 * vec).norm() / std::max(1.0, Ejj1.norm());
    if (res > 1e-8)
      throw std::logic_error("rotated_highest_weight: E_{j,j+1} annihilation residual above 1e-8");
  }
  return vec;
}

namespace {

struct DoubletBasis {
  std::vector<Rational> ab;     // a+b per kernel vector (exact, snapped)
  Eigen::MatrixXcd v;           // columns: gl(1|1) top vectors
  Eigen::MatrixXcd w;           // columns: lowered partners (unit norm); unused where ab = 0
};

// Kernel of E_{0n} split into (a+b)-eigenspaces of {E_{n0}, E_{0n}}.
DoubletBasis doublet_basis(const std::vector<BranchingComponent>& comps,
                           const Eigen::MatrixXcd& E0n, const Eigen::MatrixXcd& En0) {
  const int dim = static_cast<int>(E0n.rows());
  Int expected = 0;
  std::vector<Rational> ab_values;
  for (const auto& c : comps) {
    expected += (c.atypical_singlet ? Int(1) : (Int(1) << (c.N - 1))) * c.dimV;
    ab_values.push_back(c.ab);
  }
  std::sort(ab_values.begin(), ab_values.end());
  ab_values.erase(std::unique(ab_values.begin(), ab_values.end()), ab_values.end());
  const int k = expected.convert_to<int>();

  // JacobiSVD: BDCSVD can return inaccurate singular vectors for complex
  // matrices with high-multiplicity zero singular values.
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(E0n, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() ? sv(0) : 0.0;
  // kernel vectors come last in the singular-value ordering
  for (int i = dim - k; i < dim; ++i) {
    if (sv(i) > 1e-8 * std::max(smax, 1.0))
      throw std::runtime_error("eigenvectors: kernel of E_{0n} smaller than the branching predicts");
  }
  if (dim - k - 1 >= 0 && sv(dim - k - 1) <= 1e-8 * std::max(smax, 1.0))
    throw std::runtime_error("eigenvectors: kernel of E_{0n} larger than the branching predicts");
  Eigen::MatrixXcd K = svd.matrixV().rightCols(k);

  Eigen::MatrixXcd C = En0 * E0n + E0n * En0; // E_{00} + E_{nn} on the whole space
  Eigen::MatrixXcd M = K.adjoint() * C * K;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);

  DoubletBasis out;
  out.v = K * es.eigenvectors();
  out.w = Eigen::MatrixXcd::Zero(dim, k);
  out.ab.resize(k);
  double radius = std::max(1.0, C.norm());
  for (int i = 0; i < k; ++i) {
    double lam = es.eigenvalues()(i);
    const Rational* best = nullptr;
    double best_err = 0.0;
    for (const auto& ab : ab_values) {
      double err = std::abs(lam - to_double(ab));
      if (!best || err < best_err) { best = &ab; best_err = err; }
    }
    if (!best || best_err > 1e-7 * radius)
      throw std::runtime_error("eigenvectors: a+b eigenvalue does not match the branching");
    out.ab[i] = *best;
    if (*best != 0) {
      Eigen::VectorXcd wraw = En0 * out.v.col(i);
      double wn = wraw.norm();
      if (std::abs(wn * wn - to_double(*best)) > 1e-6 * radius)
        throw std::runtime_error("eigenvectors: |E_{n0} v|^2 != a+b");
      out.w.col(i) = wraw / wn;
    }
  }
  return out;
}

} // namespace

EigvecSet eigenvectors(const HighestWeight& hw, const std::vector<Complex>& alpha,
                       const BasisIndex& basis) {
  auto comps = branch(hw);
  RotationU rot = build_rotation(alpha);
  const double scale = rot.alpha_norm;
  Eigen::MatrixXcd E0n = rotated_odd_dense(hw.n, /*E0j=*/true, rot, basis);
  Eigen::MatrixXcd En0 = rotated_odd_dense(hw.n, /*E0j=*/false, rot, basis);
  EigvecSet out;
  try {
    DoubletBasis db = doublet_basis(comps, E0n, En0);
    const int k = static_cast<int>(db.ab.size());
    const int dim = static_cast<int>(basis.size());
    std::vector<std::pair<double, Eigen::VectorXcd>> vecs;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < k; ++i) {
      if (db.ab[i] == 0) {
        vecs.emplace_back(0.0, db.v.col(i));
      } else {
        double lam = scale * std::sqrt(to_double(db.ab[i]));
        vecs.emplace_back(-lam, inv_sqrt2 * (db.v.col(i) - db.w.col(i)));
        vecs.emplace_back(lam, inv_sqrt2 * (db.v.col(i) + db.w.col(i)));
      }
    }
    if (static_cast<int>(vecs.size()) != dim)
      throw std::runtime_error("eigenvectors: incomplete eigenbasis");
    std::stable_sort(vecs.begin(), vecs.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    out.vectors.resize(dim, dim);
    out.eigenvalues.resize(dim);
    for (int i = 0; i < dim; ++i) {
      out.eigenvalues[i] = vecs[i].first;
      out.vectors.col(i) = vecs[i].second;
    }
  } catch (const std::runtime_error& e) {
    out = oracle_eigenvectors(to_dense(assemble_odd(OddElement{alpha}, basis)));
    out.oracle_fallback = true;
    out.fallback_reason = e.what();
  }
  return out;
}

EigvecSet momentum_eigenvectors(const HighestWeight& hw, const std::vector<Complex>& alpha,
                                const BasisIndex& basis) {
  auto comps = branch(hw);
  const double scale = alpha_norm_of(alpha);
  // For the momentum pairing the rotation row is i*conj(alpha)/|alpha|, so
  // that the element reads i*scale*(E_{0n} - E_{n0}).
  std::vector<Complex> c(alpha.size());
  for (size_t l = 0; l < alpha.size(); ++l) c[l] = Complex(0.0, 1.0) * std::conj(alpha[l]) / scale;
  RotationU rot = rotation_from_last_row(std::move(c), scale);
  Eigen::MatrixXcd E0n = rotated_odd_dense(hw.n, /*E0j=*/true, rot, basis);
  Eigen::MatrixXcd En0 = rotated_odd_dense(hw.n, /*E0j=*/false, rot, basis);
  EigvecSet out;
  try {
    DoubletBasis db = doublet_basis(comps, E0n, En0);
    const int dim = static_cast<int>(basis.size());
    std::vector<std::pair<double, Eigen::VectorXcd>> vecs;
    const Complex i_unit(0.0, 1.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (size_t i = 0; i < db.ab.size(); ++i) {
      if (db.ab[i] == 0) {
        vecs.emplace_back(0.0, db.v.col(i));
      } else {
        double lam = scale * std::sqrt(to_double(db.ab[i]));
        // (v + i w)/sqrt(2) has eigenvalue -lam; (v - i w)/sqrt(2) has +lam.
        vecs.emplace_back(-lam, inv_sqrt2 * (db.v.col(i) + i_unit * db.w.col(i)));
        vecs.emplace_back(lam, inv_sqrt2 * (db.v.col(i) - i_unit * db.w.col(i)));
      }
    }
    if (static_cast<int>(vecs.size()) != dim)
      throw std::runtime_error("momentum_eigenvectors: incomplete eigenbasis");
    std::stable_sort(vecs.begin(), vecs.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    out.vectors.resize(dim, dim);
    out.eigenvalues.resize(dim);
    for (int i = 0; i < dim; ++i) {
      out.eigenvalues[i] = vecs[i].first;
      out.vectors.col(i) = vecs[i].second;
    }
  } catch (const std::runtime_error& e) {
    out = oracle_eigenvectors(to_dense(assemble_odd(OddElement{alpha}, basis)));
    out.oracle_fallback = true;
    out.fallback_reason = e.what();
  }
  return out;
}

namespace {

void require_hermitian(const Eigen::MatrixXcd& m) {
  double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (defect > 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("oracle: matrix is not Hermitian within 1e-12");
}

} // namespace

SpectrumReport oracle_spectrum(const Eigen::MatrixXcd& matrix) {
  require_hermitian(matrix);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  SpectrumReport rep;
  rep.scale = 1.0;
  if (ev.size() == 0) return rep;
  double radius = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  double gap = 1e-8 * std::max(radius, 1e-300);
  int start = 0;
  for (int i = 1; i <= ev.size(); ++i) {
    if (i == ev.size() || ev(i) - ev(i - 1) > gap) {
      double mean = 0.0;
      for (int j = start; j < i; ++j) mean += ev(j);
      mean /= (i - start);
      rep.levels.push_back({mean, Int(i - start)});
      start = i;
    }
  }
  return rep;
}

EigvecSet oracle_eigenvectors(const Eigen::MatrixXcd& matrix) {
  require_hermitian(matrix);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix);
  EigvecSet out;
  out.vectors = es.eigenvectors();
  out.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return out;
}

bool telescoping_identity_check(const std::vector<Rational>& x, const std::vector<Rational>& y,
                                int j) {
  if (j < 1 || static_cast<int>(x.size()) < j || static_cast<int>(y.size()) < j)
    throw std::invalid_argument("telescoping_identity_check: need at least j entries");
  for (int i = 1; i <= j - 1; ++i)
    if (x[i - 1] == y[i]) throw std::invalid_argument("telescoping_identity_check: zero denominator");
  Rational lhs;
  {
    Rational num = 1, den = 1;
    for (int i = 1; i <= j; ++i) num *= (x[i - 1] - y[i - 1]);
    for (int i = 1; i <= j - 1; ++i) den *= (x[i - 1] - y[i]);
    lhs = num / den;
  }
  for (int l = 1; l <= j - 1; ++l) {
    Rational num = 1, den = 1;
    for (int i = l + 1; i <= j; ++i) num *= (x[i - 1] - y[i - 1]);
    for (int i = l; i <= j - 1; ++i) den *= (x[i - 1] - y[i]);
    lhs += (y[l - 1] - y[l]) * num / den;
  }
  return lhs == x[j - 1] - y[j - 1];
}

} // namespace gln
