#include "klr/fock.hpp"

#include <algorithm>

#include "klr/errors.hpp"

namespace klr {

namespace {

const Multicharge& level_one_charge() {
  static const Multicharge kappa{0};
  return kappa;
}

// Bar-symmetric polynomial agreeing with c in all exponents <= 0.
LaurentPoly bar_symmetric_correction(const LaurentPoly& c) {
  LaurentPoly alpha;
  for (auto [e, coeff] : c.terms()) {
    if (e > 0) break;
    alpha.add_term(e, coeff);
    if (e < 0) alpha.add_term(-e, coeff);
  }
  return alpha;
}

bool in_q_Z_q(const LaurentPoly& c) { return c.is_zero() || c.min_exponent() >= 1; }

}  // namespace

// --- FockVector ------------------------------------------------------------

FockVector FockVector::basis(const Partition& lambda) {
  FockVector v;
  v.add(lambda, LaurentPoly(1));
  return v;
}

LaurentPoly FockVector::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void FockVector::add(const Partition& lambda, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [lambda, c] : o.terms_) add(lambda, -c);
  return *this;
}

FockVector FockVector::scaled(const LaurentPoly& c) const {
  FockVector out;
  if (c.is_zero()) return out;
  for (const auto& [lambda, coeff] : terms_) out.add(lambda, coeff * c);
  return out;
}

// --- Operators -------------------------------------------------------------

FockVector induct(const FockVector& v, const Multicharge& kappa, Residue i) {
  if (kappa.level() != 1) throw InvalidInput("Fock space operators are level 1 only");
  FockVector out;
  for (const auto& [lambda, c] : v.terms()) {
    const Multipartition shape(lambda);
    for (const auto& a : addable_nodes(shape, kappa, i)) {
      const Multipartition grown = shape.with_node(a);
      out.add(grown.component(1), c.shifted(d_N(grown, kappa, a)));
    }
  }
  return out;
}

FockVector divided_power_induct(const FockVector& v, const Multicharge& kappa,
                                Residue i, int k) {
  if (k < 0) throw InvalidInput("negative divided power");
  FockVector w = v;
  for (int j = 0; j < k; ++j) w = induct(w, kappa, i);
  if (k <= 1) return w;
  const LaurentPoly fact = LaurentPoly::q_factorial(k);
  FockVector out;
  for (const auto& [lambda, c] : w.terms()) out.add(lambda, divide_exact(c, fact));
  return out;
}

std::vector<std::pair<Residue, int>> ladder_word(const Partition& mu) {
  if (!is_2_restricted(mu)) {
    throw InvalidInput("ladder word needs a 2-restricted partition, got " + to_string(mu));
  }
  std::vector<std::pair<Residue, int>> word;
  for (int a = 1; a <= mu.length(); ++a) {
    for (int b = 1; b <= mu.part(a); ++b) {
      const auto ladder = static_cast<std::size_t>(a + b - 1);
      if (word.size() < ladder) word.resize(ladder, {Residue(0), 0});
      word[ladder - 1] = {Residue(b - a), word[ladder - 1].second + 1};
    }
  }
  return word;
}

FockVector ladder_vector(const Partition& mu) {
  FockVector v = FockVector::basis(Partition{});
  for (auto [res, k] : ladder_word(mu)) v = divided_power_induct(v, level_one_charge(), res, k);
  return v;
}

std::vector<std::pair<Partition, FockVector>> canonical_basis(int d) {
  std::vector<Partition> restricted;
  for (const auto& p : partitions_of(d)) {
    if (is_2_restricted(p)) restricted.push_back(p);
  }
  // partitions_of() is decreasing lexicographic, which refines dominance.
  std::map<Partition, FockVector> done;
  std::vector<std::pair<Partition, FockVector>> out;
  for (const auto& mu : restricted) {
    FockVector v = ladder_vector(mu);
    if (v.coeff(mu) != LaurentPoly(1)) {
      throw ConsistencyError("ladder vector of " + to_string(mu) + " has leading coefficient " +
                             to_string(v.coeff(mu)));
    }
    for (;;) {
      // Lowest offending term in lexicographic order; subtracting a multiple
      // of G(λ) only disturbs terms above λ.
      auto bad = std::find_if(v.terms().begin(), v.terms().end(), [&](const auto& term) {
        return term.first != mu && !in_q_Z_q(term.second);
      });
      if (bad == v.terms().end()) break;
      const Partition lambda = bad->first;
      auto g = done.find(lambda);
      if (g == done.end()) {
        throw ConsistencyError("coefficient " + to_string(bad->second) + " at " +
                               to_string(lambda) + " in G(" + to_string(mu) +
                               ") has no canonical element to cancel against");
      }
      v -= g->second.scaled(bar_symmetric_correction(bad->second));
    }
    for (const auto& [lambda, c] : v.terms()) {
      if (lambda != mu && !in_q_N_q(c)) {
        throw ConsistencyError("G(" + to_string(mu) + ") has coefficient " + to_string(c) +
                               " at " + to_string(lambda));
      }
    }
    done.emplace(mu, v);
    out.emplace_back(mu, std::move(v));
  }
  return out;
}

// --- Decomposition matrix --------------------------------------------------

const LaurentPoly& GradedDecompositionMatrix::at(const Partition& lambda,
                                                 const Partition& mu) const {
  auto r = std::find(rows.begin(), rows.end(), lambda);
  auto c = std::find(cols.begin(), cols.end(), mu);
  if (r == rows.end() || c == cols.end()) {
    throw InvalidInput("no entry for (" + to_string(lambda) + ", " + to_string(mu) + ")");
  }
  return entries[static_cast<std::size_t>(r - rows.begin())]
                [static_cast<std::size_t>(c - cols.begin())];
}

GradedDecompositionMatrix graded_decomposition_p0(int d) {
  GradedDecompositionMatrix dec;
  dec.d = d;
  dec.rows = partitions_of(d);
  const auto basis = canonical_basis(d);
  for (const auto& [mu, g] : basis) dec.cols.push_back(mu);
  dec.entries.assign(dec.rows.size(), std::vector<LaurentPoly>(dec.cols.size()));
  for (std::size_t r = 0; r < dec.rows.size(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c) {
      dec.entries[r][c] = basis[c].second.coeff(dec.rows[r]);
    }
  }
  return dec;
}

std::map<Partition, LaurentPoly> qdim_simple_p0(const GradedDecompositionMatrix& dec,
                                                const std::vector<LaurentPoly>& specht_dims) {
  if (specht_dims.size() != dec.rows.size()) {
    throw InvalidInput("need one Specht dimension per matrix row");
  }
  std::map<Partition, LaurentPoly> simple;
  // Columns are in decreasing lex order; solve from the smallest upward.
  for (std::size_t c = dec.cols.size(); c-- > 0;) {
    const Partition& lambda = dec.cols[c];
    const auto r = static_cast<std::size_t>(
        std::find(dec.rows.begin(), dec.rows.end(), lambda) - dec.rows.begin());
    LaurentPoly rest = specht_dims[r];
    for (std::size_t k = 0; k < dec.cols.size(); ++k) {
      if (k == c || dec.entries[r][k].is_zero()) continue;
      auto known = simple.find(dec.cols[k]);
      if (known == simple.end()) {
        throw ConsistencyError("decomposition matrix is not unitriangular at (" +
                               to_string(lambda) + ", " + to_string(dec.cols[k]) + ")");
      }
      rest -= dec.entries[r][k] * known->second;
    }
    if (dec.entries[r][c] != LaurentPoly(1)) {
      throw ConsistencyError("diagonal entry at " + to_string(lambda) + " is not 1");
    }
    simple.emplace(lambda, rest);
  }
  for (std::size_t r = 0; r < dec.rows.size(); ++r) {
    LaurentPoly sum;
    for (std::size_t c = 0; c < dec.cols.size(); ++c) {
      if (!dec.entries[r][c].is_zero()) sum += dec.entries[r][c] * simple.at(dec.cols[c]);
    }
    if (sum != specht_dims[r]) {
      throw ConsistencyError("row " + to_string(dec.rows[r]) + " reconstructs " +
                             to_string(sum) + " instead of " + to_string(specht_dims[r]));
    }
  }
  return simple;
}

std::map<Partition, LaurentPoly> qdim_simple_p0(int d, Exec exec) {
  const auto dec = graded_decomposition_p0(d);
  std::vector<Multipartition> shapes;
  for (const auto& p : dec.rows) shapes.emplace_back(p);
  return qdim_simple_p0(dec, qdim_sweep(shapes, level_one_charge(), exec));
}

LltReport verify_llt(int d, Exec exec) {
  LltReport report;
  const Multicharge& kappa = level_one_charge();
  report.matrix = graded_decomposition_p0(d);
  const auto& dec = report.matrix;
  std::vector<Multipartition> shapes;
  for (const auto& p : dec.rows) shapes.emplace_back(p);
  report.specht_dims = qdim_sweep(shapes, kappa, exec);

  auto fail = [&](std::string what) { report.violations.push_back(std::move(what)); };

  for (std::size_t r = 0; r < dec.rows.size(); ++r) {
    const Parity eps_row = eps_parity(dec.rows[r]);
    for (std::size_t c = 0; c < dec.cols.size(); ++c) {
      const LaurentPoly& e = dec.entries[r][c];
      const std::string where = "(" + to_string(dec.rows[r]) + ", " + to_string(dec.cols[c]) + ")";
      ++report.entries_checked;
      if (dec.rows[r] == dec.cols[c]) {
        if (e != LaurentPoly(1)) fail("diagonal " + where + " = " + to_string(e));
      } else if (!in_q_N_q(e)) {
        fail("off-diagonal " + where + " = " + to_string(e) + " not in qN[q]");
      }
      if (!is_pure_parity(e, eps_row + eps_parity(dec.cols[c]))) {
        fail("entry " + where + " = " + to_string(e) + " has the wrong parity");
      }
    }
  }

  try {
    report.simple_dims = qdim_simple_p0(dec, report.specht_dims);
  } catch (const ConsistencyError& err) {
    fail(std::string("reconstruction: ") + err.what());
    return report;
  }
  for (const auto& [mu, dim] : report.simple_dims) {
    const Parity eps = eps_parity(mu);
    if (!is_bar_symmetric(dim)) fail("qdim D(" + to_string(mu) + ") = " + to_string(dim) + " not bar-symmetric");
    if (!is_pure_parity(dim, eps)) fail("qdim D(" + to_string(mu) + ") = " + to_string(dim) + " has the wrong parity");
    if (eps == Parity(1) && eval_at_one(dim) % 2 != 0) {
      fail("dim D(" + to_string(mu) + ") = " + std::to_string(eval_at_one(dim)) + " is odd");
    }
  }
  return report;
}

}  // namespace klr
