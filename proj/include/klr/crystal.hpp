#pragma once

// Restricted multipartitions via crystal operators on i-signatures.
//
// Convention (used everywhere in this module): the i-signature lists the
// addable and removable i-nodes in below-order, top first. Adjacent pairs
// "removable, then addable" are cancelled repeatedly, leaving
// A...A R...R. The good addable node is the lowest surviving A; the good
// removable node is the highest surviving R. At level 1 this yields exactly
// the 2-restricted partitions.

#include <optional>
#include <vector>

#include "klr/combinatorics.hpp"
#include "klr/parallel.hpp"

namespace klr {

enum class Mark { addable, removable };

struct SignatureEntry {
  Node node;
  Mark mark;

  friend bool operator==(const SignatureEntry&, const SignatureEntry&) = default;
};

using Signature = std::vector<SignatureEntry>;

Signature i_signature(const Multipartition& lambda, const Multicharge& kappa, Residue i);

// The signature after cancelling removable-above-addable pairs.
Signature reduced_signature(const Signature& sig);

std::optional<Multipartition> f_tilde(const Multipartition& lambda,
                                      const Multicharge& kappa, Residue i);
std::optional<Multipartition> e_tilde(const Multipartition& lambda,
                                      const Multicharge& kappa, Residue i);

// Closure of the empty multipartition under f_tilde, truncated at size d.
// Layers are generated breadth-first; `exec` parallelizes within a layer.
// Result is sorted.
std::vector<Multipartition> enumerate_restricted(int d, const Multicharge& kappa,
                                                 Exec exec = Exec::serial);

}  // namespace klr
