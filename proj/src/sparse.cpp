#include "gln/sparse.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace gln {

bool surd_transpose_equal(const SurdMatrix& m, const SurdMatrix& mt) {
  if (m.rows != mt.cols || m.cols != mt.rows) return false;
  std::map<std::pair<int, int>, Surd> a, b;
  for (int c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.entries[c])
      if (!v.is_zero()) a[{r, c}] = v;
  for (int c = 0; c < mt.cols; ++c)
    for (const auto& [r, v] : mt.entries[c])
      if (!v.is_zero()) b[{c, r}] = v;
  return a == b;
}

void write_coordinate(std::ostream& os, const CMatrix& m) {
  char buf[96];
  for (int c = 0; c < m.cols; ++c) {
    for (const auto& [r, v] : m.entries[c]) {
      std::snprintf(buf, sizeof(buf), "%d %d %.17g %.17g\n", r, c, v.real(), v.imag());
      os << buf;
    }
  }
}

void write_coordinate_exact(std::ostream& os, const SurdMatrix& m) {
  for (int c = 0; c < m.cols; ++c) {
    for (const auto& [r, v] : m.entries[c]) {
      os << r << ' ' << c << ' ' << v.sign << ' ' << numerator(v.radicand) << ' '
         << denominator(v.radicand) << '\n';
    }
  }
}

} // namespace gln
