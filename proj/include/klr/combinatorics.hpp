#pragma once

// Partitions, multipartitions, nodes and residues in quantum characteristic 2.
//
// All coordinates are 1-based: a node is (row, column, component) with
// component in 1..l. Residues live in Z/2 and are computed from a
// multicharge (k_1, ..., k_l) as k_m + column - row.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace klr {

// Element of Z/2. Used both for node residues and for parities.
class Z2 {
 public:
  constexpr Z2() = default;
  constexpr explicit Z2(long long v)
      : value_(static_cast<std::uint8_t>(((v % 2) + 2) % 2)) {}

  constexpr int value() const { return value_; }

  constexpr Z2 operator+(Z2 other) const { return Z2(value_ + other.value_); }
  constexpr Z2& operator+=(Z2 other) { return *this = *this + other; }
  constexpr Z2 flipped() const { return Z2(value_ + 1); }

  friend constexpr bool operator==(Z2, Z2) = default;
  friend constexpr auto operator<=>(Z2, Z2) = default;

 private:
  std::uint8_t value_ = 0;
};

using Residue = Z2;
using Parity = Z2;
using ResidueSequence = std::vector<Residue>;

// The tuple (k_1, ..., k_l); the level l is at least 1.
class Multicharge {
 public:
  explicit Multicharge(std::vector<Residue> charges);
  Multicharge(std::initializer_list<int> charges);

  int level() const { return static_cast<int>(charges_.size()); }
  Residue operator[](int component) const;  // 1-based
  const std::vector<Residue>& charges() const { return charges_; }

  friend bool operator==(const Multicharge&, const Multicharge&) = default;

 private:
  std::vector<Residue> charges_;
};

struct Node {
  int row = 1;
  int col = 1;
  int comp = 1;

  friend constexpr bool operator==(const Node&, const Node&) = default;
  friend constexpr auto operator<=>(const Node&, const Node&) = default;
};

// Weakly decreasing list of positive parts. Comparison is lexicographic on
// the parts, which refines the dominance order.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  // Length of row a (1-based), zero past the last row.
  int part(int row) const;

  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// (1^n)
Partition column_partition(int n);

// True iff a dominates b (a ⊵ b). Partitions must have equal size.
bool dominates(const Partition& a, const Partition& b);

class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components);
  Multipartition(std::initializer_list<Partition> components);
  // Level-1 convenience.
  explicit Multipartition(Partition single);

  // l copies of the empty partition.
  static Multipartition empty(int level);

  int level() const { return static_cast<int>(components_.size()); }
  int size() const { return size_; }
  const std::vector<Partition>& components() const { return components_; }
  const Partition& component(int m) const;  // 1-based

  bool contains(const Node& node) const;
  // Young diagram in reading order: component, then row, then column.
  std::vector<Node> nodes() const;

  // Callers guarantee the node is addable (resp. removable).
  Multipartition with_node(const Node& node) const;
  Multipartition without_node(const Node& node) const;

  friend bool operator==(const Multipartition&, const Multipartition&) = default;
  friend auto operator<=>(const Multipartition& a, const Multipartition& b) {
    return a.components_ <=> b.components_;
  }

 private:
  std::vector<Partition> components_;
  int size_ = 0;
};

Residue residue_of_node(const Node& node, const Multicharge& kappa);

// True iff `second` is below `first`: a later component, or the same
// component and a strictly larger row.
constexpr bool is_below(const Node& second, const Node& first) {
  return second.comp > first.comp ||
         (second.comp == first.comp && second.row > first.row);
}

// Below-order key: nodes sorted ascending by this are listed top first.
constexpr bool below_order_less(const Node& a, const Node& b) {
  return a.comp != b.comp ? a.comp < b.comp : a.row < b.row;
}

// All addable / removable nodes regardless of residue, in below-order.
std::vector<Node> addable_nodes(const Multipartition& lambda);
std::vector<Node> removable_nodes(const Multipartition& lambda);

// Addable / removable i-nodes, in below-order (top component and row first).
std::vector<Node> addable_nodes(const Multipartition& lambda,
                                const Multicharge& kappa, Residue i);
std::vector<Node> removable_nodes(const Multipartition& lambda,
                                  const Multicharge& kappa, Residue i);

// #{addable i-nodes below N} - #{removable i-nodes below N}, where i is the
// residue of N and N must lie in the diagram of lambda.
int d_N(const Multipartition& lambda, const Multicharge& kappa, const Node& n);

// Number of nodes of `lambda` with residue i when it sits in a component of
// charge `charge`.
int count_residue(const Partition& lambda, Residue charge, Residue i);

// Sum of floor(part / 2).
Parity eps_parity(const Partition& lambda);
Parity eps_parity(const Multipartition& lambda, const Multicharge& kappa);

// Successive part differences (with a trailing 0) are at most 1.
bool is_2_restricted(const Partition& lambda);

// Partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

// Every l-multipartition of d exactly once. Order: the size vector
// (|λ^(1)|, ..., |λ^(l)|) runs through compositions of d in decreasing
// lexicographic order; for a fixed size vector the components run through
// partitions_of() in nested (odometer) order, last component fastest.
std::vector<Multipartition> enumerate_multipartitions(int d, int level);

// Text forms. Parts are comma-separated, components separated by '|',
// and the empty partition is written "-".
std::string to_string(const Partition& lambda);
std::string to_string(const Multipartition& lambda);
std::string to_string(const Node& node);
std::string to_string(const ResidueSequence& seq);

Partition parse_partition(std::string_view text);
Multipartition parse_multipartition(std::string_view text);
ResidueSequence parse_residues(std::string_view text);
Multicharge parse_multicharge(std::string_view text);

}  // namespace klr
