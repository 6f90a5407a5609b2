#include "klr/tableaux.hpp"

#include <algorithm>

#include "klr/errors.hpp"

namespace klr {

namespace {

void check_level(const Multipartition& lambda, const Multicharge& kappa) {
  if (lambda.level() != kappa.level()) {
    throw InvalidInput("tableau shape level does not match multicharge level");
  }
}

// Depth-first construction of standard tableaux inside a fixed target shape.
// The growing shape is kept as mutable row lengths so d_N of each added node
// is read off directly without building intermediate Multipartitions.
class StandardSearch {
 public:
  StandardSearch(const Multipartition& target, const Multicharge& kappa,
                 const ResidueSequence* filter, const TableauVisitor& visit)
      : target_(target), kappa_(kappa), filter_(filter), visit_(visit) {
    const int l = target.level();
    rows_.resize(static_cast<std::size_t>(l));
    for (int m = 1; m <= l; ++m) {
      rows_[m - 1].assign(static_cast<std::size_t>(target.component(m).length()), 0);
    }
    tableau_.shape = target;
    tableau_.placement.reserve(static_cast<std::size_t>(target.size()));
  }

  bool run() { return step(0); }

 private:
  int len(int m, int a) const {
    const auto& r = rows_[m - 1];
    return a >= 1 && a <= static_cast<int>(r.size()) ? r[a - 1] : 0;
  }

  Residue residue(int a, int b, int m) const { return kappa_[m] + Residue(b - a); }

  // Signed count of addable minus removable i-nodes strictly below (a,·,m)
  // in the current shape.
  int d_at(int a, int b, int m) const {
    const Residue i = residue(a, b, m);
    int count = 0;
    const int l = static_cast<int>(rows_.size());
    for (int c = m; c <= l; ++c) {
      const int nrows = static_cast<int>(rows_[c - 1].size());
      for (int r = (c == m ? a + 1 : 1); r <= nrows + 1; ++r) {
        const int here = len(c, r);
        if ((r == 1 || len(c, r - 1) > here) && residue(r, here + 1, c) == i) ++count;
        if (here > 0 && here > len(c, r + 1) && residue(r, here, c) == i) --count;
        if (here == 0) break;
      }
    }
    return count;
  }

  bool step(int placed) {
    if (placed == target_.size()) return visit_(tableau_, degree_);
    const int l = static_cast<int>(rows_.size());
    for (int m = 1; m <= l; ++m) {
      const int nrows = static_cast<int>(rows_[m - 1].size());
      for (int a = 1; a <= nrows; ++a) {
        const int b = len(m, a) + 1;
        if (b > target_.component(m).part(a)) continue;
        if (a > 1 && len(m, a - 1) < b) continue;
        if (filter_ && (*filter_)[placed] != residue(a, b, m)) continue;

        ++rows_[m - 1][a - 1];
        const int inc = d_at(a, b, m);
        degree_ += inc;
        tableau_.placement.push_back({a, b, m});
        const bool go_on = step(placed + 1);
        tableau_.placement.pop_back();
        degree_ -= inc;
        --rows_[m - 1][a - 1];
        if (!go_on) return false;
        // Rows below an empty row cannot be started yet.
        if (b == 1) break;
      }
    }
    return true;
  }

  const Multipartition& target_;
  const Multicharge& kappa_;
  const ResidueSequence* filter_;
  const TableauVisitor& visit_;
  std::vector<std::vector<int>> rows_;
  StandardTableau tableau_;
  int degree_ = 0;
};

}  // namespace

std::vector<std::vector<std::vector<int>>> StandardTableau::rows() const {
  std::vector<std::vector<std::vector<int>>> out(static_cast<std::size_t>(shape.level()));
  for (int m = 1; m <= shape.level(); ++m) {
    const auto& p = shape.component(m);
    auto& comp = out[m - 1];
    comp.resize(static_cast<std::size_t>(p.length()));
    for (int a = 1; a <= p.length(); ++a) comp[a - 1].assign(static_cast<std::size_t>(p.part(a)), 0);
  }
  for (std::size_t r = 0; r < placement.size(); ++r) {
    const Node& n = placement[r];
    out[n.comp - 1][n.row - 1][n.col - 1] = static_cast<int>(r) + 1;
  }
  return out;
}

StandardTableau StandardTableau::from_rows(
    const std::vector<std::vector<std::vector<int>>>& rows) {
  std::vector<Partition> comps;
  std::vector<Node> placement;
  int total = 0;
  for (const auto& comp : rows) {
    std::vector<int> parts;
    for (const auto& row : comp) {
      parts.push_back(static_cast<int>(row.size()));
      total += static_cast<int>(row.size());
    }
    comps.emplace_back(std::move(parts));
  }
  placement.assign(static_cast<std::size_t>(total), Node{0, 0, 0});
  for (std::size_t m = 0; m < rows.size(); ++m) {
    for (std::size_t a = 0; a < rows[m].size(); ++a) {
      for (std::size_t b = 0; b < rows[m][a].size(); ++b) {
        const int entry = rows[m][a][b];
        if (entry < 1 || entry > total || placement[entry - 1].comp != 0) {
          throw InvalidInput("tableau entries must be a permutation of 1..d");
        }
        placement[entry - 1] = {static_cast<int>(a) + 1, static_cast<int>(b) + 1,
                                static_cast<int>(m) + 1};
      }
    }
  }
  StandardTableau t{Multipartition(std::move(comps)), std::move(placement)};
  // Each prefix must be a diagram: the node left of and above entry r must
  // already be occupied.
  auto grid = t.rows();
  for (std::size_t r = 0; r < t.placement.size(); ++r) {
    const Node& n = t.placement[r];
    const int entry = static_cast<int>(r) + 1;
    const auto& comp = grid[n.comp - 1];
    if (n.col > 1 && comp[n.row - 1][n.col - 2] > entry) throw InvalidInput("tableau is not standard");
    if (n.row > 1 && comp[n.row - 2][n.col - 1] > entry) throw InvalidInput("tableau is not standard");
  }
  return t;
}

StandardTableau t_lambda(const Multipartition& lambda) {
  return {lambda, lambda.nodes()};
}

bool for_each_standard(const Multipartition& lambda, const Multicharge& kappa,
                       const TableauVisitor& visit) {
  check_level(lambda, kappa);
  return StandardSearch(lambda, kappa, nullptr, visit).run();
}

bool for_each_standard(const Multipartition& lambda, const Multicharge& kappa,
                       const ResidueSequence& residues, const TableauVisitor& visit) {
  check_level(lambda, kappa);
  if (static_cast<int>(residues.size()) != lambda.size()) {
    throw InvalidInput("residue sequence length must equal the multipartition size");
  }
  return StandardSearch(lambda, kappa, &residues, visit).run();
}

std::vector<StandardTableau> enumerate_standard(const Multipartition& lambda) {
  std::vector<StandardTableau> out;
  // The charge only affects degrees, which are discarded here.
  const Multicharge any(std::vector<Residue>(static_cast<std::size_t>(std::max(1, lambda.level()))));
  for_each_standard(lambda, any, [&](const StandardTableau& t, int) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::size_t count_standard(const Multipartition& lambda) {
  std::size_t n = 0;
  const Multicharge any(std::vector<Residue>(static_cast<std::size_t>(std::max(1, lambda.level()))));
  for_each_standard(lambda, any, [&](const StandardTableau&, int) {
    ++n;
    return true;
  });
  return n;
}

std::vector<StandardTableau> tableaux_with_residue_sequence(
    const Multipartition& lambda, const Multicharge& kappa,
    const ResidueSequence& residues) {
  std::vector<StandardTableau> out;
  for_each_standard(lambda, kappa, residues, [&](const StandardTableau& t, int) {
    out.push_back(t);
    return true;
  });
  return out;
}

ResidueSequence residue_sequence(const StandardTableau& t, const Multicharge& kappa) {
  check_level(t.shape, kappa);
  ResidueSequence out;
  out.reserve(t.placement.size());
  for (const auto& n : t.placement) out.push_back(residue_of_node(n, kappa));
  return out;
}

StandardTableau restrict_to(const StandardTableau& t, int r) {
  StandardTableau out{Multipartition::empty(t.shape.level()), {}};
  for (int k = 0; k < r; ++k) {
    out.shape = out.shape.with_node(t.placement.at(static_cast<std::size_t>(k)));
    out.placement.push_back(t.placement[static_cast<std::size_t>(k)]);
  }
  return out;
}

int degree(const StandardTableau& t, const Multicharge& kappa) {
  check_level(t.shape, kappa);
  if (t.placement.empty()) return 0;
  const Node& last = t.placement.back();
  return d_N(t.shape, kappa, last) + degree(restrict_to(t, t.size() - 1), kappa);
}

std::string to_string(const StandardTableau& t) {
  std::string out;
  const auto grid = t.rows();
  for (std::size_t m = 0; m < grid.size(); ++m) {
    if (m > 0) out += " | ";
    if (grid[m].empty()) out += '-';
    for (std::size_t a = 0; a < grid[m].size(); ++a) {
      if (a > 0) out += '/';
      for (std::size_t b = 0; b < grid[m][a].size(); ++b) {
        if (b > 0) out += ',';
        out += std::to_string(grid[m][a][b]);
      }
    }
  }
  return out;
}

}  // namespace klr
