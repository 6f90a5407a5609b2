#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "klr/combinatorics.hpp"
#include "klr/errors.hpp"

using namespace klr;

TEST_CASE("residue_of_node") {
  CHECK(residue_of_node({1, 1, 1}, Multicharge{0}) == Residue(0));
  CHECK(residue_of_node({2, 1, 1}, Multicharge{0}) == Residue(1));
  CHECK(residue_of_node({1, 3, 2}, Multicharge{0, 1}) == Residue(1));
  CHECK_THROWS_AS(residue_of_node({1, 1, 3}, Multicharge{0, 1}), InvalidInput);
}

TEST_CASE("residues are constant along diagonals") {
  const Multicharge kappa{0, 1, 1};
  for (int m = 1; m <= 3; ++m) {
    for (int a = 1; a <= 6; ++a) {
      for (int b = 1; b <= 6; ++b) {
        CHECK(residue_of_node({a, b, m}, kappa) == residue_of_node({a + 1, b + 1, m}, kappa));
      }
    }
  }
}

TEST_CASE("is_below") {
  CHECK(is_below({2, 1, 1}, {1, 3, 1}));
  CHECK(is_below({1, 1, 2}, {3, 1, 1}));
  CHECK_FALSE(is_below({1, 2, 1}, {1, 1, 1}));
  CHECK_FALSE(is_below({1, 1, 1}, {1, 1, 2}));
}

TEST_CASE("addable and removable nodes") {
  const Multicharge k0{0};
  CHECK(addable_nodes(Multipartition(Partition{1, 1}), k0, Residue(1)) == std::vector<Node>{{1, 2, 1}});
  CHECK(addable_nodes(Multipartition::empty(2), Multicharge{0, 1}, Residue(0)) ==
        std::vector<Node>{{1, 1, 1}});
  CHECK(addable_nodes(Multipartition(Partition{2}), k0, Residue(1)) == std::vector<Node>{{2, 1, 1}});

  CHECK(removable_nodes(Multipartition(Partition{2}), k0, Residue(1)) == std::vector<Node>{{1, 2, 1}});
  CHECK(removable_nodes(Multipartition(Partition{}), k0, Residue(0)).empty());
  CHECK(removable_nodes(Multipartition{Partition{1}, Partition{1}}, Multicharge{0, 1}, Residue(1)) ==
        std::vector<Node>{{1, 1, 2}});

  CHECK_THROWS_AS(addable_nodes(Multipartition(Partition{1}), Multicharge{0, 0}, Residue(0)),
                  InvalidInput);
}

TEST_CASE("addable/removable sets agree with brute force and stay valid") {
  for (const auto& kappa : {Multicharge{0}, Multicharge{1, 0}}) {
    for (int d = 0; d <= 6; ++d) {
      for (const auto& lambda : enumerate_multipartitions(d, kappa.level())) {
        const auto cells = oracle::cells_of(testing::to_shape(lambda));
        std::set<oracle::Cell> add_ref, rem_ref;
        for (const auto& c : oracle::addable(cells, kappa.level())) add_ref.insert(c);
        for (const auto& c : oracle::removable(cells)) rem_ref.insert(c);

        std::set<oracle::Cell> add_got, rem_got;
        for (int i = 0; i < 2; ++i) {
          const auto adds = addable_nodes(lambda, kappa, Residue(i));
          const auto rems = removable_nodes(lambda, kappa, Residue(i));
          CHECK(std::is_sorted(adds.begin(), adds.end(), below_order_less));
          for (const auto& n : adds) {
            CHECK_FALSE(lambda.contains(n));
            CHECK(residue_of_node(n, kappa) == Residue(i));
            CHECK(lambda.with_node(n).size() == d + 1);
            add_got.insert({n.row, n.col, n.comp});
          }
          for (const auto& n : rems) {
            CHECK(lambda.contains(n));
            CHECK(lambda.without_node(n).size() == d - 1);
            rem_got.insert({n.row, n.col, n.comp});
          }
        }
        CHECK(add_got == add_ref);
        CHECK(rem_got == rem_ref);
      }
    }
  }
}

TEST_CASE("d_N") {
  const Multicharge k0{0};
  CHECK(d_N(Multipartition(Partition{2}), k0, {1, 2, 1}) == 1);
  CHECK(d_N(Multipartition(Partition{1, 1}), k0, {2, 1, 1}) == 0);
  CHECK(d_N(Multipartition(Partition{1}), k0, {1, 1, 1}) == 0);
  CHECK_THROWS_AS(d_N(Multipartition(Partition{1}), k0, {1, 2, 1}), InvalidInput);
}

TEST_CASE("d_N agrees with the brute-force definition") {
  const Multicharge kappa{0, 1};
  for (int d = 1; d <= 6; ++d) {
    for (const auto& lambda : enumerate_multipartitions(d, 2)) {
      const auto cells = oracle::cells_of(testing::to_shape(lambda));
      for (const auto& n : lambda.nodes()) {
        CHECK(d_N(lambda, kappa, n) ==
              oracle::d_N(cells, testing::to_charges(kappa), {n.row, n.col, n.comp}));
      }
    }
  }
}

TEST_CASE("eps_parity") {
  CHECK(eps_parity(Multipartition(column_partition(8)), Multicharge{0}) == Parity(0));
  CHECK(eps_parity(Multipartition(Partition{3, 2, 2, 1}), Multicharge{0}) == Parity(1));
  CHECK(eps_parity(Multipartition{Partition{2}, Partition{1}}, Multicharge{0, 1}) == Parity(0));
  CHECK_THROWS_AS(eps_parity(Multipartition(Partition{2}), Multicharge{0, 1}), InvalidInput);
}

TEST_CASE("level-1 parity equals the number of even-column nodes") {
  for (int d = 0; d <= 12; ++d) {
    for (const auto& p : partitions_of(d)) {
      CHECK(eps_parity(p) == Parity(oracle::even_column_nodes(p.parts())));
      // n_1 differs from ε by the odd rows sitting at even row indices.
      int n1 = 0;
      for (int a = 1; a <= p.length(); ++a) n1 += (a % 2 == 1) ? p.part(a) / 2 : (p.part(a) + 1) / 2;
      CHECK(count_residue(p, Residue(0), Residue(1)) == n1);
    }
  }
}

TEST_CASE("is_2_restricted") {
  CHECK(is_2_restricted(Partition{1, 1, 1}));
  CHECK_FALSE(is_2_restricted(Partition{2}));
  CHECK(is_2_restricted(Partition{3, 2, 2, 1}));
  CHECK(is_2_restricted(Partition{}));
}

TEST_CASE("enumerate_multipartitions") {
  CHECK(enumerate_multipartitions(0, 2) == std::vector<Multipartition>{Multipartition::empty(2)});
  CHECK(enumerate_multipartitions(2, 1) ==
        std::vector<Multipartition>{Multipartition(Partition{2}), Multipartition(Partition{1, 1})});
  const std::vector<Multipartition> level2 = {
      {Partition{2}, Partition{}}, {Partition{1, 1}, Partition{}}, {Partition{1}, Partition{1}},
      {Partition{}, Partition{2}}, {Partition{}, Partition{1, 1}}};
  CHECK(enumerate_multipartitions(2, 2) == level2);

  for (int d = 0; d <= 12; ++d) {
    CHECK(static_cast<std::int64_t>(enumerate_multipartitions(d, 1).size()) == oracle::partition_count(d));
  }
  for (int l = 2; l <= 3; ++l) {
    for (int d = 0; d <= 7; ++d) {
      const auto all = enumerate_multipartitions(d, l);
      CHECK(static_cast<std::int64_t>(all.size()) == oracle::multipartition_count(d, l));
      CHECK(std::set<Multipartition>(all.begin(), all.end()).size() == all.size());
    }
  }
}

TEST_CASE("text forms") {
  CHECK(to_string(parse_multipartition("2,1|1")) == "2,1|1");
  CHECK(to_string(parse_multipartition("-|3")) == "-|3");
  CHECK(parse_multipartition("3,2,2,1") == Multipartition(Partition{3, 2, 2, 1}));
  CHECK(parse_multipartition("-") == Multipartition::empty(1));
  CHECK(to_string(parse_residues("0,1,0,1")) == "0,1,0,1");
  CHECK(parse_multicharge("0,1") == Multicharge{0, 1});

  CHECK_THROWS_AS(parse_multipartition("1,2"), InvalidInput);
  CHECK_THROWS_AS(parse_multipartition("2,x"), InvalidInput);
  CHECK_THROWS_AS(parse_multipartition("2,0"), InvalidInput);
  CHECK_THROWS_AS(parse_residues("0,2"), InvalidInput);
  CHECK_THROWS_AS(parse_multicharge(""), InvalidInput);
}

TEST_CASE("dominance and conjugation") {
  CHECK(dominates(Partition{3, 1}, Partition{2, 2}));
  CHECK_FALSE(dominates(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
  CHECK_FALSE(dominates(Partition{2, 2, 2}, Partition{3, 1, 1, 1}));
  CHECK(Partition{3, 2, 2, 1}.conjugate() == Partition{4, 3, 1});
}
