#pragma once

// Test-only helpers: enumerators and brute-force reference computations
// that do not go through the library's min-plus routines.

#include <functional>
#include <vector>

#include "sgo/tiled.hpp"

namespace sgo::testing {

/// Independent closure check by scanning every triple.
inline bool brute_force_closed(const IntMatrix& l) {
  const auto n = l.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (l(i, i) != 0) return false;
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        if (l(i, k) + l(k, j) < l(i, j)) return false;
  }
  return true;
}

/// Calls f on every closed n x n exponent matrix with zero diagonal and
/// off-diagonal entries in [0, max_entry].
inline void for_each_tiled_order(int n, int max_entry, const std::function<void(const IntMatrix&)>& f) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) cells.emplace_back(i, j);
  IntMatrix l = IntMatrix::Zero(n, n);
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == cells.size()) {
      if (brute_force_closed(l)) f(l);
      return;
    }
    for (int v = 0; v <= max_entry; ++v) {
      l(cells[c].first, cells[c].second) = v;
      rec(c + 1);
    }
  };
  rec(0);
}

/// Plain triple-loop min-plus product over finite entries.
inline IntMatrix naive_minplus(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Int best = a(i, 0) + b(0, j);
      for (Eigen::Index k = 1; k < a.cols(); ++k) best = std::min(best, a(i, k) + b(k, j));
      out(i, j) = best;
    }
  return out;
}

/// All compositions of n (ordered block-size lists).
inline std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = 1; k <= rest; ++k) {
      cur.push_back(k);
      rec(rest - k);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

}  // namespace sgo::testing
