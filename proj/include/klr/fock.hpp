#pragma once

// Level-1 Fock space in quantum characteristic 2 and its canonical basis,
// giving the graded decomposition matrix in characteristic 0.
//
// The node-adding operator sends |λ⟩ to the sum over addable i-nodes A of
// q^{d_A(λ ∪ A)} |λ ∪ A⟩, so the coefficient of |λ⟩ in f_{i_d}...f_{i_1}|∅⟩
// is exactly qdim e(i)S(λ). All functions here expect the multicharge (0).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "klr/combinatorics.hpp"
#include "klr/laurent.hpp"
#include "klr/parallel.hpp"
#include "klr/specht.hpp"

namespace klr {

class FockVector {
 public:
  using Terms = std::map<Partition, LaurentPoly>;

  FockVector() = default;
  static FockVector basis(const Partition& lambda);

  const Terms& terms() const { return terms_; }
  LaurentPoly coeff(const Partition& lambda) const;
  bool is_zero() const { return terms_.empty(); }

  void add(const Partition& lambda, const LaurentPoly& c);
  FockVector& operator-=(const FockVector& o);
  FockVector scaled(const LaurentPoly& c) const;

  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  Terms terms_;
};

FockVector induct(const FockVector& v, const Multicharge& kappa, Residue i);

// induct applied k times, divided by [k]!. Throws ConsistencyError if some
// coefficient is not divisible.
FockVector divided_power_induct(const FockVector& v, const Multicharge& kappa,
                                Residue i, int k);

// Ladder ℓ holds the nodes (a,b) with a + b - 1 = ℓ; all its nodes share
// residue b - a. Returns (residue, ladder size) for ℓ = 1, 2, ...
// Throws InvalidInput unless mu is 2-restricted.
std::vector<std::pair<Residue, int>> ladder_word(const Partition& mu);

// Divided powers along the ladder word, applied to |∅⟩.
FockVector ladder_vector(const Partition& mu);

// Canonical basis elements G(μ) for the 2-restricted μ ⊢ d, in decreasing
// lexicographic order of μ. Each has coefficient 1 at μ and coefficients
// in qN[q] elsewhere.
std::vector<std::pair<Partition, FockVector>> canonical_basis(int d);

struct GradedDecompositionMatrix {
  int d = 0;
  std::vector<Partition> rows;  // all partitions of d, partitions_of() order
  std::vector<Partition> cols;  // 2-restricted partitions, same relative order
  std::vector<std::vector<LaurentPoly>> entries;  // entries[row][col]

  const LaurentPoly& at(const Partition& lambda, const Partition& mu) const;
};

GradedDecompositionMatrix graded_decomposition_p0(int d);

// Graded dimensions of the simple modules in characteristic 0, by
// back-substitution through qdim S(λ) = Σ_μ d_{λμ} qdim D(μ). Throws
// ConsistencyError if the rows for non-restricted λ disagree.
std::map<Partition, LaurentPoly> qdim_simple_p0(int d, Exec exec = Exec::serial);
std::map<Partition, LaurentPoly> qdim_simple_p0(const GradedDecompositionMatrix& dec,
                                                const std::vector<LaurentPoly>& specht_dims);

struct LltReport {
  GradedDecompositionMatrix matrix;
  std::vector<LaurentPoly> specht_dims;  // indexed like matrix.rows
  std::map<Partition, LaurentPoly> simple_dims;
  // One entry per failed check; empty when everything holds.
  std::vector<std::string> violations;
  std::size_t entries_checked = 0;

  bool ok() const { return violations.empty(); }
};

// Computes the matrix and simple dimensions and checks unitriangularity,
// the parity of every entry, the reconstruction of qdim S(λ), and the
// bar-symmetry, parity and evenness properties of qdim D(μ).
LltReport verify_llt(int d, Exec exec = Exec::serial);

}  // namespace klr
