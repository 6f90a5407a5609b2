#pragma once

#include <random>
#include <vector>

#include "klr/combinatorics.hpp"
#include "klr/tableaux.hpp"
#include "oracles.hpp"

namespace testing {

inline oracle::Shape to_shape(const klr::Multipartition& lambda) {
  oracle::Shape s;
  for (const auto& p : lambda.components()) s.push_back(p.parts());
  return s;
}

inline std::vector<int> to_charges(const klr::Multicharge& kappa) {
  std::vector<int> out;
  for (auto r : kappa.charges()) out.push_back(r.value());
  return out;
}

inline std::vector<oracle::Cell> to_cells(const klr::StandardTableau& t) {
  std::vector<oracle::Cell> out;
  for (const auto& n : t.placement) out.emplace_back(n.row, n.col, n.comp);
  return out;
}

// Uniformly random partition of a random size in [0, max_size].
inline klr::Partition random_partition(std::mt19937& rng, int max_size) {
  const int n = std::uniform_int_distribution<int>(0, max_size)(rng);
  const auto all = klr::partitions_of(n);
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

}  // namespace testing
