#pragma once

#include "gln/scalars.hpp"

#include <Eigen/Dense>
#include <ostream>
#include <utility>
#include <vector>

namespace gln {

/// Column-keyed sparse matrix. Construction proceeds column by column
/// (each column of a generator matrix depends on a single source pattern),
/// and matrix-vector products iterate columns.
template <typename T>
struct Sparse {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, T>>> entries; // entries[col] = {(row, value)}

  Sparse() = default;
  Sparse(int r, int c) : rows(r), cols(c), entries(c) {}

  void insert(int r, int c, T v) { entries[c].emplace_back(r, std::move(v)); }
};

using SurdMatrix = Sparse<Surd>;
using CMatrix = Sparse<Complex>;

inline CMatrix to_complex(const SurdMatrix& m) {
  CMatrix out(m.rows, m.cols);
  for (int c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.entries[c]) out.insert(r, c, to_complex(v));
  return out;
}

inline Eigen::MatrixXcd to_dense(const CMatrix& m) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m.rows, m.cols);
  for (int c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.entries[c]) out(r, c) += v;
  return out;
}

inline Eigen::MatrixXcd to_dense(const SurdMatrix& m) { return to_dense(to_complex(m)); }

/// Exact transpose check: m equals the (conjugate-free) transpose of mt.
/// Surd entries are real, so this is the star condition for surd matrices.
bool surd_transpose_equal(const SurdMatrix& m, const SurdMatrix& mt);

void write_coordinate(std::ostream& os, const CMatrix& m);       // "row col re im"
void write_coordinate_exact(std::ostream& os, const SurdMatrix& m); // "row col sign num den"

} // namespace gln
