#include "klr/crystal.hpp"

#include <algorithm>

namespace klr {

Signature i_signature(const Multipartition& lambda, const Multicharge& kappa, Residue i) {
  Signature sig;
  for (const auto& n : addable_nodes(lambda, kappa, i)) sig.push_back({n, Mark::addable});
  for (const auto& n : removable_nodes(lambda, kappa, i)) sig.push_back({n, Mark::removable});
  // Within a row an addable and a removable node have different residues,
  // so the below-order key never ties here.
  std::sort(sig.begin(), sig.end(), [](const SignatureEntry& a, const SignatureEntry& b) {
    return below_order_less(a.node, b.node);
  });
  return sig;
}

Signature reduced_signature(const Signature& sig) {
  Signature kept;
  for (const auto& entry : sig) {
    if (entry.mark == Mark::addable && !kept.empty() && kept.back().mark == Mark::removable) {
      kept.pop_back();
    } else {
      kept.push_back(entry);
    }
  }
  return kept;
}

std::optional<Multipartition> f_tilde(const Multipartition& lambda,
                                      const Multicharge& kappa, Residue i) {
  const auto reduced = reduced_signature(i_signature(lambda, kappa, i));
  for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
    if (it->mark == Mark::addable) return lambda.with_node(it->node);
  }
  return std::nullopt;
}

std::optional<Multipartition> e_tilde(const Multipartition& lambda,
                                      const Multicharge& kappa, Residue i) {
  const auto reduced = reduced_signature(i_signature(lambda, kappa, i));
  for (const auto& entry : reduced) {
    if (entry.mark == Mark::removable) return lambda.without_node(entry.node);
  }
  return std::nullopt;
}

std::vector<Multipartition> enumerate_restricted(int d, const Multicharge& kappa, Exec exec) {
  std::vector<Multipartition> layer{Multipartition::empty(kappa.level())};
  for (int n = 0; n < d; ++n) {
    const auto grown = map_items(
        layer,
        [&](const Multipartition& lambda) {
          std::vector<Multipartition> next;
          for (int i = 0; i < 2; ++i) {
            if (auto mu = f_tilde(lambda, kappa, Residue(i))) next.push_back(std::move(*mu));
          }
          return next;
        },
        exec);
    std::vector<Multipartition> next;
    for (const auto& g : grown) next.insert(next.end(), g.begin(), g.end());
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace klr
