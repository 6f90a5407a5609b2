#pragma once

// Standard tableaux of multipartitions and their degrees.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "klr/combinatorics.hpp"

namespace klr {

// placement[r - 1] is the node holding entry r. Every prefix of the
// placement is a Young diagram (this is what "standard" means here).
struct StandardTableau {
  Multipartition shape;
  std::vector<Node> placement;

  int size() const { return static_cast<int>(placement.size()); }

  // Entries per component, per row.
  std::vector<std::vector<std::vector<int>>> rows() const;

  // Builds a tableau from its row fillings; throws InvalidInput unless the
  // filling is a standard tableau of a multipartition.
  static StandardTableau from_rows(
      const std::vector<std::vector<std::vector<int>>>& rows);

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

// Receives each tableau with its degree; return false to stop early.
using TableauVisitor = std::function<bool(const StandardTableau&, int degree)>;

// Row-reading tableau t^λ: 1..d along successive rows, component 1 first.
StandardTableau t_lambda(const Multipartition& lambda);

// Streams every standard λ-tableau with its degree. At each step the entry
// is placed at an addable corner, corners tried in below-order, so the
// order is deterministic. Returns false iff the visitor stopped early.
bool for_each_standard(const Multipartition& lambda, const Multicharge& kappa,
                       const TableauVisitor& visit);

// Same, restricted to tableaux with residue sequence `residues`; branches
// whose partial residue sequence disagrees are pruned.
bool for_each_standard(const Multipartition& lambda, const Multicharge& kappa,
                       const ResidueSequence& residues, const TableauVisitor& visit);

std::vector<StandardTableau> enumerate_standard(const Multipartition& lambda);
std::size_t count_standard(const Multipartition& lambda);

std::vector<StandardTableau> tableaux_with_residue_sequence(
    const Multipartition& lambda, const Multicharge& kappa,
    const ResidueSequence& residues);

ResidueSequence residue_sequence(const StandardTableau& t, const Multicharge& kappa);

// The literal recursion deg(t) = d_N(shape of t) + deg(t with d removed).
int degree(const StandardTableau& t, const Multicharge& kappa);

// Removes the entries greater than r.
StandardTableau restrict_to(const StandardTableau& t, int r);

// "1,2,3/4,7/5,8/6"; components separated by " | ", empty component "-".
std::string to_string(const StandardTableau& t);

}  // namespace klr
