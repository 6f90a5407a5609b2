#include "doctest.h"
#include "helpers.hpp"
#include "klr/errors.hpp"
#include "klr/fock.hpp"
#include "klr/specht.hpp"

using namespace klr;

namespace {

const Multicharge k0{0};
const LaurentPoly q = LaurentPoly::monomial(1);

FockVector vec(std::initializer_list<std::pair<Partition, LaurentPoly>> terms) {
  FockVector v;
  for (const auto& [p, c] : terms) v.add(p, c);
  return v;
}

// Applies the residues one node at a time to |∅⟩.
FockVector induct_word(const ResidueSequence& word) {
  FockVector v = FockVector::basis(Partition{});
  for (auto r : word) v = induct(v, k0, r);
  return v;
}

}  // namespace

TEST_CASE("induct examples") {
  const auto empty = FockVector::basis(Partition{});
  CHECK(induct(empty, k0, Residue(0)) == FockVector::basis(Partition{1}));
  CHECK(induct(FockVector::basis(Partition{1}), k0, Residue(1)) ==
        vec({{Partition{2}, q}, {Partition{1, 1}, LaurentPoly(1)}}));
  CHECK(induct(FockVector::basis(Partition{2}), k0, Residue(1)) == FockVector::basis(Partition{2, 1}));
  CHECK(induct(empty, k0, Residue(1)).is_zero());
  CHECK_THROWS_AS(induct(empty, Multicharge{0, 1}, Residue(0)), InvalidInput);
}

TEST_CASE("induction words compute truncated Specht dimensions") {
  // The coefficient of |λ⟩ after inducting along i is qdim e(i)S(λ).
  for (int d = 1; d <= 7; ++d) {
    for (int mask = 0; mask < (1 << d); ++mask) {
      ResidueSequence word;
      for (int r = 0; r < d; ++r) word.emplace_back((mask >> r) & 1);
      const auto v = induct_word(word);
      for (const auto& p : partitions_of(d)) {
        CHECK(v.coeff(p) == qdim_truncation(Multipartition(p), k0, word));
      }
    }
  }
}

TEST_CASE("divided_power_induct") {
  const auto empty = FockVector::basis(Partition{});
  const auto one = divided_power_induct(empty, k0, Residue(0), 1);
  CHECK(one == FockVector::basis(Partition{1}));
  CHECK(divided_power_induct(one, k0, Residue(1), 2) == FockVector::basis(Partition{2, 1}));
  CHECK(divided_power_induct(one, k0, Residue(1), 0) == one);
  CHECK_THROWS_AS(divided_power_induct(one, k0, Residue(1), -1), InvalidInput);
}

TEST_CASE("ladder_word") {
  using Word = std::vector<std::pair<Residue, int>>;
  CHECK(ladder_word(Partition{1, 1}) == Word{{Residue(0), 1}, {Residue(1), 1}});
  CHECK(ladder_word(Partition{1}) == Word{{Residue(0), 1}});
  CHECK(ladder_word(Partition{2, 1}) == Word{{Residue(0), 1}, {Residue(1), 2}});
  CHECK_THROWS_AS(ladder_word(Partition{2}), InvalidInput);
}

TEST_CASE("canonical_basis small cases") {
  const auto b1 = canonical_basis(1);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0].first == Partition{1});
  CHECK(b1[0].second == FockVector::basis(Partition{1}));

  const auto b2 = canonical_basis(2);
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].first == Partition{1, 1});
  CHECK(b2[0].second == vec({{Partition{2}, q}, {Partition{1, 1}, LaurentPoly(1)}}));
  CHECK(b2[0].second == ladder_vector(Partition{1, 1}));

  CHECK(canonical_basis(0).size() == 1);
}

TEST_CASE("canonical basis elements are bar-invariant combinations of ladder vectors") {
  // Each G(μ) shares the leading term of its ladder vector and has the
  // restricted coefficients 1 at μ and q N[q] elsewhere.
  for (int d = 1; d <= 8; ++d) {
    for (const auto& [mu, g] : canonical_basis(d)) {
      CHECK(g.coeff(mu) == LaurentPoly(1));
      for (const auto& [lambda, c] : g.terms()) {
        if (lambda == mu) continue;
        CHECK(in_q_N_q(c));
        CHECK(dominates(lambda, mu));
      }
      const auto a = ladder_vector(mu);
      CHECK(a.coeff(mu) == LaurentPoly(1));
    }
  }
}

TEST_CASE("G((1^8)) at (3,2,2,1) is purely odd") {
  // The entry is zero in characteristic 0, so the whole column is checked.
  const auto basis = canonical_basis(8);
  const auto& [mu, g] = basis.back();
  REQUIRE(mu == column_partition(8));
  CHECK(g.coeff(Partition{3, 2, 2, 1}).is_zero());
  for (const auto& [lambda, c] : g.terms()) CHECK(is_pure_parity(c, eps_parity(lambda)));
}

TEST_CASE("graded_decomposition_p0 examples") {
  const auto d2 = graded_decomposition_p0(2);
  CHECK(d2.at(Partition{2}, Partition{1, 1}) == q);
  CHECK(d2.at(Partition{1, 1}, Partition{1, 1}) == LaurentPoly(1));
  CHECK_THROWS_AS(d2.at(Partition{2}, Partition{2}), InvalidInput);

  const auto d1 = graded_decomposition_p0(1);
  CHECK(d1.rows == std::vector<Partition>{Partition{1}});
  CHECK(d1.cols == std::vector<Partition>{Partition{1}});
  CHECK(d1.entries == std::vector<std::vector<LaurentPoly>>{{LaurentPoly(1)}});

  for (int d = 1; d <= 8; ++d) {
    const auto dec = graded_decomposition_p0(d);
    for (const auto& mu : dec.cols) CHECK(dec.at(mu, mu) == LaurentPoly(1));
  }
}

TEST_CASE("ungraded decomposition matrix columns are bounded by Specht dimensions") {
  for (int d = 1; d <= 8; ++d) {
    const auto dec = graded_decomposition_p0(d);
    const auto simple = qdim_simple_p0(d);
    for (std::size_t r = 0; r < dec.rows.size(); ++r) {
      const auto f = oracle::hook_length_count(dec.rows[r].parts());
      std::int64_t total = 0;
      for (std::size_t c = 0; c < dec.cols.size(); ++c) {
        const auto mult = eval_at_one(dec.entries[r][c]);
        CHECK(mult >= 0);
        total += mult * eval_at_one(simple.at(dec.cols[c]));
      }
      CHECK(total == f);
    }
  }
}

TEST_CASE("qdim_simple_p0") {
  const auto s2 = qdim_simple_p0(2);
  REQUIRE(s2.size() == 1);
  CHECK(s2.at(Partition{1, 1}) == LaurentPoly(1));
  for (int d = 1; d <= 9; ++d) {
    for (const auto& [mu, dim] : qdim_simple_p0(d)) {
      CHECK(is_bar_symmetric(dim));
      const Parity eps = eps_parity(mu);
      CHECK(is_pure_parity(dim, eps));
      if (eps == Parity(1)) CHECK(eval_at_one(dim) % 2 == 0);
    }
  }
}

TEST_CASE("qdim_simple_p0 rejects an inconsistent system") {
  auto dec = graded_decomposition_p0(3);
  std::vector<LaurentPoly> dims;
  for (const auto& p : dec.rows) dims.push_back(qdim_specht(Multipartition(p), k0));
  CHECK_NOTHROW(qdim_simple_p0(dec, dims));
  dims.front() += LaurentPoly(1);
  CHECK_THROWS_AS(qdim_simple_p0(dec, dims), ConsistencyError);
}

TEST_CASE("verify_llt") {
  for (int d = 0; d <= 8; ++d) {
    const auto report = verify_llt(d);
    CHECK(report.ok());
    CHECK(report.entries_checked == report.matrix.rows.size() * report.matrix.cols.size());
  }
}
