#include "klr/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "klr/errors.hpp"

namespace klr {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidInput("malformed " + std::string(what) + ": '" +
                       std::string(s) + "'");
  }
  return value;
}

void compositions(int remaining, int slots, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = remaining; first >= 0; --first) {
    prefix.push_back(first);
    compositions(remaining - first, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

// --- Multicharge -----------------------------------------------------------

Multicharge::Multicharge(std::vector<Residue> charges)
    : charges_(std::move(charges)) {
  if (charges_.empty()) throw InvalidInput("multicharge must have level >= 1");
}

Multicharge::Multicharge(std::initializer_list<int> charges) {
  for (int c : charges) {
    if (c != 0 && c != 1) throw InvalidInput("charge must be 0 or 1");
    charges_.emplace_back(c);
  }
  if (charges_.empty()) throw InvalidInput("multicharge must have level >= 1");
}

Residue Multicharge::operator[](int component) const {
  if (component < 1 || component > level()) {
    throw InvalidInput("component " + std::to_string(component) +
                       " out of range for multicharge of level " +
                       std::to_string(level()));
  }
  return charges_[component - 1];
}

// --- Partition -------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    if (parts_[r] < 1) throw InvalidInput("partition parts must be positive");
    if (r > 0 && parts_[r] > parts_[r - 1]) {
      throw InvalidInput("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

int Partition::part(int row) const {
  return row >= 1 && row <= length() ? parts_[row - 1] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  for (int b = 1; b <= part(1); ++b) {
    int len = 0;
    while (part(len + 1) >= b) ++len;
    cols.push_back(len);
  }
  return Partition(std::move(cols));
}

Partition column_partition(int n) { return Partition(std::vector<int>(n, 1)); }

bool dominates(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  const int rows = std::max(a.length(), b.length());
  for (int r = 1; r <= rows; ++r) {
    sa += a.part(r);
    sb += b.part(r);
    if (sa < sb) return false;
  }
  return true;
}

// --- Multipartition --------------------------------------------------------

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {
  for (const auto& p : components_) size_ += p.size();
}

Multipartition::Multipartition(std::initializer_list<Partition> components)
    : Multipartition(std::vector<Partition>(components)) {}

Multipartition::Multipartition(Partition single)
    : Multipartition(std::vector<Partition>{std::move(single)}) {}

Multipartition Multipartition::empty(int level) {
  return Multipartition(std::vector<Partition>(static_cast<std::size_t>(level)));
}

const Partition& Multipartition::component(int m) const {
  if (m < 1 || m > level()) throw InvalidInput("component out of range");
  return components_[m - 1];
}

bool Multipartition::contains(const Node& node) const {
  if (node.comp < 1 || node.comp > level() || node.row < 1 || node.col < 1) {
    return false;
  }
  return node.col <= components_[node.comp - 1].part(node.row);
}

std::vector<Node> Multipartition::nodes() const {
  std::vector<Node> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int m = 1; m <= level(); ++m) {
    const auto& p = components_[m - 1];
    for (int a = 1; a <= p.length(); ++a) {
      for (int b = 1; b <= p.part(a); ++b) out.push_back({a, b, m});
    }
  }
  return out;
}

Multipartition Multipartition::with_node(const Node& node) const {
  auto comps = components_;
  auto parts = comps.at(node.comp - 1).parts();
  if (node.row == static_cast<int>(parts.size()) + 1) {
    parts.push_back(1);
  } else {
    ++parts.at(node.row - 1);
  }
  comps[node.comp - 1] = Partition(std::move(parts));
  return Multipartition(std::move(comps));
}

Multipartition Multipartition::without_node(const Node& node) const {
  auto comps = components_;
  auto parts = comps.at(node.comp - 1).parts();
  if (--parts.at(node.row - 1) == 0) parts.pop_back();
  comps[node.comp - 1] = Partition(std::move(parts));
  return Multipartition(std::move(comps));
}

// --- Nodes and residues ----------------------------------------------------

Residue residue_of_node(const Node& node, const Multicharge& kappa) {
  return kappa[node.comp] + Residue(node.col - node.row);
}

std::vector<Node> addable_nodes(const Multipartition& lambda) {
  std::vector<Node> out;
  for (int m = 1; m <= lambda.level(); ++m) {
    const auto& p = lambda.component(m);
    for (int a = 1; a <= p.length() + 1; ++a) {
      if (a == 1 || p.part(a - 1) > p.part(a)) out.push_back({a, p.part(a) + 1, m});
    }
  }
  return out;
}

std::vector<Node> removable_nodes(const Multipartition& lambda) {
  std::vector<Node> out;
  for (int m = 1; m <= lambda.level(); ++m) {
    const auto& p = lambda.component(m);
    for (int a = 1; a <= p.length(); ++a) {
      if (p.part(a) > p.part(a + 1)) out.push_back({a, p.part(a), m});
    }
  }
  return out;
}

namespace {

void check_level(const Multipartition& lambda, const Multicharge& kappa) {
  if (lambda.level() != kappa.level()) {
    throw InvalidInput("multipartition level " + std::to_string(lambda.level()) +
                       " does not match multicharge level " +
                       std::to_string(kappa.level()));
  }
}

std::vector<Node> with_residue(std::vector<Node> nodes, const Multicharge& kappa,
                               Residue i) {
  std::erase_if(nodes, [&](const Node& n) { return residue_of_node(n, kappa) != i; });
  return nodes;
}

}  // namespace

std::vector<Node> addable_nodes(const Multipartition& lambda,
                                const Multicharge& kappa, Residue i) {
  check_level(lambda, kappa);
  return with_residue(addable_nodes(lambda), kappa, i);
}

std::vector<Node> removable_nodes(const Multipartition& lambda,
                                  const Multicharge& kappa, Residue i) {
  check_level(lambda, kappa);
  return with_residue(removable_nodes(lambda), kappa, i);
}

int d_N(const Multipartition& lambda, const Multicharge& kappa, const Node& n) {
  check_level(lambda, kappa);
  if (!lambda.contains(n)) {
    throw InvalidInput("node " + to_string(n) + " is not in " + to_string(lambda));
  }
  const Residue i = residue_of_node(n, kappa);
  int count = 0;
  for (const auto& a : addable_nodes(lambda, kappa, i)) count += is_below(a, n);
  for (const auto& r : removable_nodes(lambda, kappa, i)) count -= is_below(r, n);
  return count;
}

// --- Parity ----------------------------------------------------------------

int count_residue(const Partition& lambda, Residue charge, Residue i) {
  int count = 0;
  for (int a = 1; a <= lambda.length(); ++a) {
    // Columns b with charge + b - a == i (mod 2) start at 1 or 2.
    const int first = Residue(i.value() - charge.value() + a).value() == 1 ? 1 : 2;
    const int len = lambda.part(a);
    if (first <= len) count += (len - first) / 2 + 1;
  }
  return count;
}

Parity eps_parity(const Partition& lambda) {
  long long sum = 0;
  for (int part : lambda.parts()) sum += part / 2;
  return Parity(sum);
}

Parity eps_parity(const Multipartition& lambda, const Multicharge& kappa) {
  check_level(lambda, kappa);
  Parity eps;
  for (const auto& comp : lambda.components()) eps += eps_parity(comp);
  for (int j = 1; j < lambda.level(); ++j) {
    for (int m = j + 1; m <= lambda.level(); ++m) {
      eps += Parity(count_residue(lambda.component(j), kappa[j], kappa[m]));
    }
  }
  return eps;
}

bool is_2_restricted(const Partition& lambda) {
  for (int r = 1; r <= lambda.length(); ++r) {
    if (lambda.part(r) - lambda.part(r + 1) > 1) return false;
  }
  return true;
}

// --- Enumeration -----------------------------------------------------------

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InvalidInput("negative partition size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::vector<Multipartition> enumerate_multipartitions(int d, int level) {
  if (d < 0) throw InvalidInput("negative size");
  if (level < 1) throw InvalidInput("level must be >= 1");
  std::vector<std::vector<int>> sizes;
  std::vector<int> prefix;
  compositions(d, level, prefix, sizes);

  std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) by_size[n] = partitions_of(n);

  std::vector<Multipartition> out;
  std::vector<Partition> comps;
  auto product = [&](auto& self, const std::vector<int>& sv, std::size_t m) -> void {
    if (m == sv.size()) {
      out.emplace_back(comps);
      return;
    }
    for (const auto& p : by_size[sv[m]]) {
      comps.push_back(p);
      self(self, sv, m + 1);
      comps.pop_back();
    }
  };
  for (const auto& sv : sizes) product(product, sv, 0);
  return out;
}

// --- Text forms ------------------------------------------------------------

std::string to_string(const Partition& lambda) {
  if (lambda.empty()) return "-";
  std::string out;
  for (int r = 1; r <= lambda.length(); ++r) {
    if (r > 1) out += ',';
    out += std::to_string(lambda.part(r));
  }
  return out;
}

std::string to_string(const Multipartition& lambda) {
  std::string out;
  for (int m = 1; m <= lambda.level(); ++m) {
    if (m > 1) out += '|';
    out += to_string(lambda.component(m));
  }
  return out;
}

std::string to_string(const Node& node) {
  std::ostringstream os;
  os << '(' << node.row << ',' << node.col << ',' << node.comp << ')';
  return os.str();
}

std::string to_string(const ResidueSequence& seq) {
  std::string out;
  for (std::size_t r = 0; r < seq.size(); ++r) {
    if (r > 0) out += ',';
    out += static_cast<char>('0' + seq[r].value());
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "-") return {};
  std::vector<int> parts;
  for (auto field : split(text, ',')) parts.push_back(parse_int(field, "partition part"));
  return Partition(std::move(parts));
}

Multipartition parse_multipartition(std::string_view text) {
  std::vector<Partition> comps;
  for (auto field : split(text, '|')) comps.push_back(parse_partition(field));
  return Multipartition(std::move(comps));
}

ResidueSequence parse_residues(std::string_view text) {
  text = trim(text);
  ResidueSequence out;
  if (text.empty() || text == "-") return out;
  for (auto field : split(text, ',')) {
    const int v = parse_int(field, "residue");
    if (v != 0 && v != 1) throw InvalidInput("residue must be 0 or 1, got " + std::to_string(v));
    out.emplace_back(v);
  }
  return out;
}

Multicharge parse_multicharge(std::string_view text) {
  auto seq = parse_residues(text);
  if (seq.empty()) throw InvalidInput("empty multicharge");
  return Multicharge(std::move(seq));
}

}  // namespace klr
