#pragma once

#include "gln/odd_element.hpp"

#include <map>
#include <optional>

namespace gln {

/// Parameters of the coupled oscillator chain (periodic boundary).
struct ChainConfig {
  int n = 2;
  double mu = 1.0;
  double omega = 1.0;
  double c = 0.0;
  double hbar = 1.0;
};

struct ModeData {
  std::vector<double> omega_j; // sqrt(omega^2 + 4c sin^2(pi j/n))
  std::vector<double> beta_j;  // -omega_j + sum(omega)/(n-1), all >= 0
  std::vector<double> gamma_j; // sqrt(beta_j)/omega_j
  double gamma = 0.0;          // sum gamma_j^2
  double beta = 0.0;           // sum beta_j
};

ModeData mode_data(const ChainConfig& cfg);

/// Supremum of couplings keeping all beta_j >= 0; +infinity when unbounded.
double critical_coupling(int n, double omega);

struct OperatorSpec {
  OddElement element;
  double scale = 0.0; // sqrt(hbar*gamma/(mu n)) or sqrt(mu hbar beta/n)
};

OperatorSpec position_operator(const ChainConfig& cfg, int r);
OperatorSpec momentum_operator(const ChainConfig& cfg, int r);

/// Diagonal of the Hamiltonian over the basis: hbar * E~_m per pattern.
std::vector<double> hamiltonian_diagonal(const BasisIndex& basis, const ModeData& md,
                                         double hbar);

// --- Fock representations W(p) = W([p,0,...,0]) ------------------------------

GzPattern fock_pattern(const HighestWeight& hw, const std::vector<int>& phi);
std::vector<int> fock_occupation(const GzPattern& p);

/// Measurement probabilities of the position operator in the stationary
/// state w(phi), keyed by eigenvalue.
std::map<double, double> fock_probabilities(int p, const ChainConfig& cfg,
                                            const std::vector<int>& phi, int r,
                                            bool momentum = false);

EigvecSet fock_eigenvectors(int p, const ChainConfig& cfg, int r, const BasisIndex& basis);

/// Closed-form action of e_{ij} on w(phi), defined for diagonal and odd
/// elements; nullopt encodes the zero vector.
std::optional<std::pair<Surd, std::vector<int>>> fock_action(int i, int j, int p,
                                                             const std::vector<int>& phi);

// --- Ladder representations V(p) = W([1,p-1,0,...,0]) ------------------------

struct LadderState {
  int theta = 0;
  std::vector<int> s; // size n, theta + sum(s) = p
};

GzPattern ladder_pattern(const HighestWeight& hw, const LadderState& st);
LadderState ladder_state(int p, const GzPattern& pattern);

struct LadderResult {
  SpectrumReport spectrum;
  EigvecSet vectors;
};

LadderResult ladder_eigen(int p, const ChainConfig& cfg, int r, const BasisIndex& basis);

std::optional<std::pair<Surd, LadderState>> ladder_action(int i, int j, int p,
                                                          const LadderState& st);

} // namespace gln
