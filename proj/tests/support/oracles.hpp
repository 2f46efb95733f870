#pragma once

// Reference computations used as test oracles. They are deliberately naive
// and share no code with the library beyond the Rational type.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace oracle {

using Q = mpq_class;
using QVec = std::vector<Q>;

/// Number of families of proper subsets of [n] with >= 2 elements that are
/// pairwise nested, by testing every family of the power set (n <= 4).
inline long nested_family_count(int n) {
  std::vector<std::uint32_t> subsets;
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t s = 1; s < full; ++s)
    if (__builtin_popcount(s) >= 2) subsets.push_back(s);
  long count = 0;
  const std::uint64_t families = std::uint64_t(1) << subsets.size();
  for (std::uint64_t f = 0; f < families; ++f) {
    bool ok = true;
    for (std::size_t a = 0; a < subsets.size() && ok; ++a)
      for (std::size_t b = a + 1; b < subsets.size() && ok; ++b) {
        if (!((f >> a) & 1) || !((f >> b) & 1)) continue;
        const std::uint32_t x = subsets[a], y = subsets[b], c = x & y;
        ok = c == 0 || c == x || c == y;
      }
    count += ok;
  }
  return count;
}

/// The listed points (0-based indices into pts), centered and divided by the
/// sum of absolute values of all coordinates.
inline std::vector<QVec> centered_restriction(const std::vector<QVec>& pts, const std::vector<int>& which) {
  const std::size_t dim = pts.front().size();
  QVec mean(dim, 0);
  for (int i : which)
    for (std::size_t k = 0; k < dim; ++k) mean[k] += pts[i][k];
  for (auto& m : mean) m /= static_cast<long>(which.size());
  std::vector<QVec> out;
  Q l1 = 0;
  for (int i : which) {
    QVec v(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      v[k] = pts[i][k] - mean[k];
      l1 += abs(v[k]);
    }
    out.push_back(v);
  }
  for (auto& v : out)
    for (auto& x : v) x /= l1;
  return out;
}

inline QVec matvec(const std::vector<QVec>& m, const QVec& v) {
  QVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

}  // namespace oracle
