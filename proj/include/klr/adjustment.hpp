#pragma once

// Graded adjustment-matrix entries in characteristic 2, pinned from
// published ungraded values by the parity constraint and the degrees of a
// residue-sequence truncation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "klr/combinatorics.hpp"
#include "klr/laurent.hpp"
#include "klr/tableaux.hpp"

namespace klr {

struct AdjustmentEvidence {
  Partition lambda;
  Partition mu;
  std::int64_t ungraded_value = 0;  // a_{λμ}(1)
  int p = 2;
  std::string source;
};

// Published ungraded adjustment entries (Mathas, "Iwahori-Hecke algebras and
// Schur algebras of the symmetric group", Appendix B) for pairs of
// 2-restricted partitions with different parities.
const std::vector<AdjustmentEvidence>& embedded_evidence();

// Bar-symmetric Laurent polynomials with nonnegative coefficients, pure of
// parity ε(λ) + ε(μ), evaluating to ungraded_value at 1, with all
// exponents in [-bound, bound]. Sorted by to_pairs().
std::vector<LaurentPoly> candidate_entries(const AdjustmentEvidence& ev,
                                           const Multicharge& kappa, int bound);

// Largest |deg t| over standard λ-tableaux.
int default_exponent_bound(const Partition& lambda, const Multicharge& kappa);

// Residue sequence of t^(1^d); the trivial module is concentrated there.
ResidueSequence trivial_residue_sequence(int d, const Multicharge& kappa);

// Narrows the candidates to q^m + q^-m with q^-m occurring in
// qdim e(i)S(λ). Without an explicit i, μ must be a column (1^d) and i is
// the trivial residue sequence. Throws Undetermined unless exactly one
// candidate survives.
LaurentPoly pin_via_truncation(const AdjustmentEvidence& ev, const Multicharge& kappa,
                               std::optional<ResidueSequence> residues = std::nullopt,
                               std::optional<int> bound = std::nullopt);

// Σ_ν d0_row[ν] * adjustment_col[ν].
LaurentPoly graded_from_ungraded_row(const std::vector<LaurentPoly>& d0_row,
                                     const std::vector<LaurentPoly>& adjustment_col);

// Everything the `remark` subcommand reports for one evidence pair.
struct RemarkAnalysis {
  AdjustmentEvidence evidence;
  Parity eps_lambda;
  Parity eps_mu;
  int bound = 0;
  std::optional<ResidueSequence> residues;   // set when μ is a column
  std::vector<StandardTableau> tableaux;     // with that residue sequence
  std::vector<int> degrees;                  // sorted
  LaurentPoly truncation;
  std::vector<LaurentPoly> candidates;
  std::optional<LaurentPoly> pinned;
  std::string status;  // "pinned" or the reason it is undetermined
};

RemarkAnalysis analyse_evidence(const AdjustmentEvidence& ev, const Multicharge& kappa,
                                std::optional<int> bound = std::nullopt);

}  // namespace klr
