#include "klr/adjustment.hpp"

#include <algorithm>
#include <cstdlib>

#include "klr/errors.hpp"
#include "klr/specht.hpp"

namespace klr {

namespace {

bool is_column(const Partition& p) { return p == column_partition(p.size()); }

// Distributes `remaining` over c_0 + 2 Σ c_m with m drawn from `exps[k..]`.
void distribute(std::int64_t remaining, const std::vector<int>& exps, std::size_t k,
                bool allow_constant, LaurentPoly& acc, std::vector<LaurentPoly>& out) {
  if (k == exps.size()) {
    if (remaining == 0 || allow_constant) {
      out.push_back(acc + LaurentPoly(remaining));
    }
    return;
  }
  const int m = exps[k];
  const LaurentPoly pair = LaurentPoly::monomial(m) + LaurentPoly::monomial(-m);
  for (std::int64_t c = 0; 2 * c <= remaining; ++c) {
    LaurentPoly next = acc + pair * LaurentPoly(c);
    distribute(remaining - 2 * c, exps, k + 1, allow_constant, next, out);
  }
}

}  // namespace

const std::vector<AdjustmentEvidence>& embedded_evidence() {
  static const std::vector<AdjustmentEvidence> table = {
      {Partition{3, 2, 2, 1}, column_partition(8), 2, 2, "Mathas 1999, Appendix B, d=8"},
      {Partition{3, 2, 2, 1, 1}, column_partition(9), 2, 2, "Mathas 1999, Appendix B, d=9"},
      {Partition{3, 3, 2, 1, 1}, column_partition(10), 2, 2, "Mathas 1999, Appendix B, d=10"},
      {Partition{5, 2, 2, 1}, Partition{3, 1, 1, 1, 1, 1, 1, 1}, 2, 2,
       "Mathas 1999, Appendix B, d=10"},
  };
  return table;
}

std::vector<LaurentPoly> candidate_entries(const AdjustmentEvidence& ev,
                                           const Multicharge& kappa, int bound) {
  if (ev.ungraded_value < 0) throw InvalidInput("ungraded value must be nonnegative");
  const Parity parity = eps_parity(Multipartition(ev.lambda), kappa) +
                        eps_parity(Multipartition(ev.mu), kappa);
  std::vector<int> exps;
  for (int m = 1; m <= bound; ++m) {
    if (Parity(m) == parity) exps.push_back(m);
  }
  std::vector<LaurentPoly> out;
  LaurentPoly acc;
  distribute(ev.ungraded_value, exps, 0, parity == Parity(0), acc, out);
  std::sort(out.begin(), out.end(), [](const LaurentPoly& a, const LaurentPoly& b) {
    return to_pairs(a) < to_pairs(b);
  });
  return out;
}

int default_exponent_bound(const Partition& lambda, const Multicharge& kappa) {
  int bound = 0;
  const LaurentPoly dim = qdim_specht(Multipartition(lambda), kappa);
  for (auto [e, c] : dim.terms()) {
    bound = std::max(bound, std::abs(e));
  }
  return bound;
}

ResidueSequence trivial_residue_sequence(int d, const Multicharge& kappa) {
  return residue_sequence(t_lambda(Multipartition(column_partition(d))), kappa);
}

LaurentPoly pin_via_truncation(const AdjustmentEvidence& ev, const Multicharge& kappa,
                               std::optional<ResidueSequence> residues,
                               std::optional<int> bound) {
  if (ev.lambda.size() != ev.mu.size()) throw InvalidInput("evidence partitions differ in size");
  if (!residues) {
    if (!is_column(ev.mu)) {
      throw Undetermined("mu = " + to_string(ev.mu) +
                         " is not a column, so no residue sequence is known to fix D(mu)");
    }
    residues = trivial_residue_sequence(ev.mu.size(), kappa);
  }
  const int b = bound.value_or(default_exponent_bound(ev.lambda, kappa));
  const LaurentPoly trunc = qdim_truncation(Multipartition(ev.lambda), kappa, *residues);

  std::vector<LaurentPoly> survivors;
  for (const auto& cand : candidate_entries(ev, kappa, b)) {
    for (int m = 1; m <= b; ++m) {
      if (trunc.coeff(-m) != 0 &&
          cand == LaurentPoly::monomial(m) + LaurentPoly::monomial(-m)) {
        survivors.push_back(cand);
        break;
      }
    }
  }
  if (survivors.size() != 1) {
    throw Undetermined(std::to_string(survivors.size()) + " candidates survive for (" +
                       to_string(ev.lambda) + ", " + to_string(ev.mu) + ")");
  }
  return survivors.front();
}

LaurentPoly graded_from_ungraded_row(const std::vector<LaurentPoly>& d0_row,
                                     const std::vector<LaurentPoly>& adjustment_col) {
  if (d0_row.size() != adjustment_col.size()) {
    throw InvalidInput("decomposition row and adjustment column differ in length");
  }
  LaurentPoly sum;
  for (std::size_t k = 0; k < d0_row.size(); ++k) sum += d0_row[k] * adjustment_col[k];
  return sum;
}

RemarkAnalysis analyse_evidence(const AdjustmentEvidence& ev, const Multicharge& kappa,
                                std::optional<int> bound) {
  RemarkAnalysis out;
  out.evidence = ev;
  out.eps_lambda = eps_parity(Multipartition(ev.lambda), kappa);
  out.eps_mu = eps_parity(Multipartition(ev.mu), kappa);
  out.bound = bound.value_or(default_exponent_bound(ev.lambda, kappa));
  out.candidates = candidate_entries(ev, kappa, out.bound);
  if (is_column(ev.mu)) {
    out.residues = trivial_residue_sequence(ev.mu.size(), kappa);
    for_each_standard(Multipartition(ev.lambda), kappa, *out.residues,
                      [&](const StandardTableau& t, int deg) {
                        out.tableaux.push_back(t);
                        out.degrees.push_back(deg);
                        out.truncation.add_term(deg, 1);
                        return true;
                      });
    std::sort(out.degrees.begin(), out.degrees.end());
  }
  try {
    out.pinned = pin_via_truncation(ev, kappa, out.residues, out.bound);
    out.status = "pinned";
  } catch (const Undetermined& err) {
    out.status = std::string("undetermined: ") + err.what();
  }
  return out;
}

}  // namespace klr
