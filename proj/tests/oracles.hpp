#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library's node, tableau or degree code; everything is recomputed
// from the definitions on plain integer tuples.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using Cell = std::tuple<int, int, int>;  // (row, col, comp), 1-based
using Shape = std::vector<std::vector<int>>;  // parts per component

inline std::set<Cell> cells_of(const Shape& shape) {
  std::set<Cell> out;
  for (int m = 0; m < static_cast<int>(shape.size()); ++m) {
    for (int a = 0; a < static_cast<int>(shape[m].size()); ++a) {
      for (int b = 0; b < shape[m][a]; ++b) out.insert({a + 1, b + 1, m + 1});
    }
  }
  return out;
}

// Is the cell set a Young diagram of an l-multipartition?
inline bool is_diagram(const std::set<Cell>& cells) {
  for (auto [a, b, m] : cells) {
    if (a > 1 && !cells.count({a - 1, b, m})) return false;
    if (b > 1 && !cells.count({a, b - 1, m})) return false;
  }
  return true;
}

inline int residue(const Cell& c, const std::vector<int>& kappa) {
  auto [a, b, m] = c;
  return (((kappa[m - 1] + b - a) % 2) + 2) % 2;
}

inline bool below(const Cell& second, const Cell& first) {
  auto [a2, b2, m2] = second;
  auto [a1, b1, m1] = first;
  return m2 > m1 || (m2 == m1 && a2 > a1);
}

// Addable / removable nodes found by trying every candidate cell.
inline std::vector<Cell> addable(const std::set<Cell>& cells, int level) {
  int max_extent = 1;
  for (auto [a, b, m] : cells) max_extent = std::max({max_extent, a + 1, b + 1});
  std::vector<Cell> out;
  for (int m = 1; m <= level; ++m) {
    for (int a = 1; a <= max_extent; ++a) {
      for (int b = 1; b <= max_extent; ++b) {
        Cell c{a, b, m};
        if (cells.count(c)) continue;
        auto grown = cells;
        grown.insert(c);
        if (is_diagram(grown)) out.push_back(c);
      }
    }
  }
  return out;
}

inline std::vector<Cell> removable(const std::set<Cell>& cells) {
  std::vector<Cell> out;
  for (const auto& c : cells) {
    auto shrunk = cells;
    shrunk.erase(c);
    if (is_diagram(shrunk)) out.push_back(c);
  }
  return out;
}

inline int d_N(const std::set<Cell>& cells, const std::vector<int>& kappa, const Cell& n) {
  const int i = residue(n, kappa);
  int count = 0;
  for (const auto& c : addable(cells, static_cast<int>(kappa.size()))) {
    if (residue(c, kappa) == i && below(c, n)) ++count;
  }
  for (const auto& c : removable(cells)) {
    if (residue(c, kappa) == i && below(c, n)) --count;
  }
  return count;
}

// Degree of a tableau given as the cell occupied by each entry 1..d.
inline int degree(const std::vector<Cell>& placement, const std::vector<int>& kappa) {
  int deg = 0;
  std::set<Cell> cells;
  for (const auto& c : placement) {
    cells.insert(c);
    deg += d_N(cells, kappa, c);
  }
  return deg;
}

// All standard tableaux by permuting entries over cells and applying the
// entrywise condition: within a component, a <= a' and b <= b' implies the
// entry at (a,b) is at most the entry at (a',b'). Feasible for d <= 8.
inline std::vector<std::vector<Cell>> brute_force_standard(const Shape& shape) {
  const auto cell_set = cells_of(shape);
  const std::vector<Cell> cells(cell_set.begin(), cell_set.end());
  std::vector<int> perm(cells.size());
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<Cell>> out;
  do {
    bool ok = true;
    for (std::size_t x = 0; x < cells.size() && ok; ++x) {
      for (std::size_t y = 0; y < cells.size() && ok; ++y) {
        auto [a, b, m] = cells[x];
        auto [a2, b2, m2] = cells[y];
        if (m == m2 && a <= a2 && b <= b2 && perm[x] > perm[y]) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<Cell> placement(cells.size());
    for (std::size_t x = 0; x < cells.size(); ++x) placement[perm[x] - 1] = cells[x];
    out.push_back(placement);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// f^λ = d! / Π hook lengths.
inline std::int64_t hook_length_count(const std::vector<int>& parts) {
  int d = std::accumulate(parts.begin(), parts.end(), 0);
  std::int64_t num = 1;
  for (int k = 2; k <= d; ++k) num *= k;
  std::int64_t den = 1;
  for (int a = 0; a < static_cast<int>(parts.size()); ++a) {
    for (int b = 0; b < parts[a]; ++b) {
      int leg = 0;
      for (int r = a + 1; r < static_cast<int>(parts.size()) && parts[r] > b; ++r) ++leg;
      den *= parts[a] - b - 1 + leg + 1;
    }
  }
  return num / den;
}

// Number of partitions of n via Euler's pentagonal-number recurrence.
inline std::int64_t partition_count(int n) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k) {
    std::int64_t sum = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      const int g2 = j * (3 * j + 1) / 2;
      if (g1 > k) break;
      const std::int64_t sign = (j % 2 == 1) ? 1 : -1;
      sum += sign * p[k - g1];
      if (g2 <= k) sum += sign * p[k - g2];
    }
    p[k] = sum;
  }
  return p[n];
}

// Number of l-multipartitions of d by dynamic counting.
inline std::int64_t multipartition_count(int d, int level) {
  std::vector<std::int64_t> ways(static_cast<std::size_t>(d) + 1, 0);
  ways[0] = 1;
  for (int m = 0; m < level; ++m) {
    std::vector<std::int64_t> next(ways.size(), 0);
    for (int used = 0; used <= d; ++used) {
      for (int here = 0; used + here <= d; ++here) next[used + here] += ways[used] * partition_count(here);
    }
    ways = next;
  }
  return ways[d];
}

// Σ floor(λ_a / 2) counted node by node: the nodes lying in even columns.
inline int even_column_nodes(const std::vector<int>& parts) {
  int count = 0;
  for (int len : parts) {
    for (int b = 1; b <= len; ++b) count += (b % 2 == 0);
  }
  return count;
}

inline std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace oracle
