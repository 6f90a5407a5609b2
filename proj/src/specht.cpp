#include "klr/specht.hpp"

#include "klr/errors.hpp"
#include "klr/tableaux.hpp"

namespace klr {

LaurentPoly qdim_specht(const Multipartition& lambda, const Multicharge& kappa) {
  LaurentPoly f;
  for_each_standard(lambda, kappa, [&](const StandardTableau&, int deg) {
    f.add_term(deg, 1);
    return true;
  });
  return f;
}

LaurentPoly qdim_truncation(const Multipartition& lambda, const Multicharge& kappa,
                            const ResidueSequence& residues) {
  LaurentPoly f;
  for_each_standard(lambda, kappa, residues, [&](const StandardTableau&, int deg) {
    f.add_term(deg, 1);
    return true;
  });
  return f;
}

std::vector<LaurentPoly> qdim_sweep_serial(const std::vector<Multipartition>& shapes,
                                           const Multicharge& kappa) {
  return map_serial(shapes, [&](const Multipartition& l) { return qdim_specht(l, kappa); });
}

std::vector<LaurentPoly> qdim_sweep_omp(const std::vector<Multipartition>& shapes,
                                        const Multicharge& kappa) {
  return map_omp(shapes, [&](const Multipartition& l) { return qdim_specht(l, kappa); });
}

std::vector<LaurentPoly> qdim_sweep(const std::vector<Multipartition>& shapes,
                                    const Multicharge& kappa, Exec exec) {
  return exec == Exec::parallel ? qdim_sweep_omp(shapes, kappa)
                                : qdim_sweep_serial(shapes, kappa);
}

LaurentPoly qdim_hecke(int d, const Multicharge& kappa, Exec exec) {
  const auto shapes = enumerate_multipartitions(d, kappa.level());
  LaurentPoly total;
  for (const auto& f : qdim_sweep(shapes, kappa, exec)) total += f * f;
  return total;
}

int psi_degree(const ResidueSequence& residues, int r) {
  if (r < 1 || r >= static_cast<int>(residues.size())) {
    throw InvalidInput("psi index " + std::to_string(r) + " out of range 1.." +
                       std::to_string(static_cast<int>(residues.size()) - 1));
  }
  return residues[r - 1] == residues[r] ? -2 : 2;
}

SweepReport verify_theorem1(int d, const Multicharge& kappa, Exec exec) {
  SweepReport report{"parity", d, kappa, "tableau-enumeration", 0, {}};
  const auto shapes = enumerate_multipartitions(d, kappa.level());
  const auto dims = qdim_sweep(shapes, kappa, exec);
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    const Parity eps = eps_parity(shapes[k], kappa);
    if (!is_pure_parity(dims[k], eps)) {
      report.violations.push_back(
          {shapes[k], "qdim " + to_string(dims[k]) + " not pure of parity " +
                          std::to_string(eps.value())});
    }
  }
  report.checked = shapes.size();
  return report;
}

SweepReport verify_lemma_tlda(int d, const Multicharge& kappa, Exec exec) {
  SweepReport report{"lemma-tlda", d, kappa, "row-reading-tableau", 0, {}};
  const auto shapes = enumerate_multipartitions(d, kappa.level());
  const auto degrees = map_items(
      shapes, [&](const Multipartition& l) { return degree(t_lambda(l), kappa); }, exec);
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    const Parity eps = eps_parity(shapes[k], kappa);
    if (Parity(degrees[k]) != eps) {
      report.violations.push_back({shapes[k], "deg(t^lambda) = " + std::to_string(degrees[k]) +
                                                  " but eps = " + std::to_string(eps.value())});
    }
  }
  report.checked = shapes.size();
  return report;
}

SweepReport verify_hecke_even(int d, const Multicharge& kappa, Exec exec) {
  SweepReport report{"hecke", d, kappa, "cellular-sum-of-squares", 1, {}};
  const LaurentPoly h = qdim_hecke(d, kappa, exec);
  const ParityElem proj = parity_project(h);
  if (proj.odd != 0) {
    report.violations.push_back({Multipartition::empty(kappa.level()),
                                 "qdim H has odd part " + std::to_string(proj.odd)});
  }
  return report;
}

}  // namespace klr
