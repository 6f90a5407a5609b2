#pragma once

// Graded dimensions of Specht modules and the parity sweeps built on them.

#include <cstddef>
#include <string>
#include <vector>

#include "klr/combinatorics.hpp"
#include "klr/laurent.hpp"
#include "klr/parallel.hpp"

namespace klr {

// Sum of q^deg(t) over standard λ-tableaux.
LaurentPoly qdim_specht(const Multipartition& lambda, const Multicharge& kappa);

// Graded dimension of e(i)S(λ): the sum restricted to tableaux with residue
// sequence i.
LaurentPoly qdim_truncation(const Multipartition& lambda, const Multicharge& kappa,
                            const ResidueSequence& residues);

// qdim S(λ) for every λ in `shapes`, in order.
std::vector<LaurentPoly> qdim_sweep_serial(const std::vector<Multipartition>& shapes,
                                           const Multicharge& kappa);
std::vector<LaurentPoly> qdim_sweep_omp(const std::vector<Multipartition>& shapes,
                                        const Multicharge& kappa);
std::vector<LaurentPoly> qdim_sweep(const std::vector<Multipartition>& shapes,
                                    const Multicharge& kappa, Exec exec);

// Graded dimension of the cyclotomic algebra through its cellular structure:
// the sum over λ of (qdim S(λ))^2.
LaurentPoly qdim_hecke(int d, const Multicharge& kappa, Exec exec = Exec::serial);

// Degree of ψ_r e(i): -2 when i_r == i_{r+1}, +2 otherwise. r is 1-based.
int psi_degree(const ResidueSequence& residues, int r);

struct Violation {
  Multipartition lambda;
  std::string detail;
};

struct SweepReport {
  std::string check;
  int d = 0;
  Multicharge kappa{0};
  // How the check was carried out, e.g. the sum-of-squares route for the
  // algebra's graded dimension.
  std::string route;
  std::size_t checked = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// qdim S(λ) is pure of parity ε(λ), for every λ of size d.
SweepReport verify_theorem1(int d, const Multicharge& kappa, Exec exec = Exec::serial);
// deg(t^λ) ≡ ε(λ) (mod 2), for every λ of size d.
SweepReport verify_lemma_tlda(int d, const Multicharge& kappa, Exec exec = Exec::serial);
// The graded dimension of the algebra has no odd-degree part.
SweepReport verify_hecke_even(int d, const Multicharge& kappa, Exec exec = Exec::serial);

}  // namespace klr
