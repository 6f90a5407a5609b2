#include "klr/io.hpp"

#include <sstream>

#include "klr/errors.hpp"

namespace klr {

json laurent_to_json(const LaurentPoly& f) {
  json j = json::array();
  for (auto [e, c] : f.terms()) j.push_back({e, c});
  return j;
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("Laurent JSON must be an array of pairs");
  LaurentPoly f;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw InvalidInput("Laurent JSON term must be a pair");
    f.add_term(pair[0].get<int>(), pair[1].get<LaurentPoly::Coeff>());
  }
  return f;
}

json multipartition_to_json(const Multipartition& lambda) { return to_string(lambda); }

Multipartition multipartition_from_json(const json& j) {
  if (!j.is_string()) throw InvalidInput("multipartition JSON must be a string");
  return parse_multipartition(j.get<std::string>());
}

json tableau_to_json(const StandardTableau& t) {
  json placement = json::array();
  for (const auto& n : t.placement) placement.push_back({n.row, n.col, n.comp});
  return {{"shape", to_string(t.shape)}, {"placement", placement}};
}

StandardTableau tableau_from_json(const json& j) {
  StandardTableau t;
  t.shape = multipartition_from_json(j.at("shape"));
  for (const auto& n : j.at("placement")) {
    t.placement.push_back({n.at(0).get<int>(), n.at(1).get<int>(), n.at(2).get<int>()});
  }
  return t;
}

json report_to_json(const SweepReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"lambda", to_string(v.lambda)}, {"detail", v.detail}});
  }
  std::string charge;
  for (int m = 1; m <= report.kappa.level(); ++m) {
    if (m > 1) charge += ',';
    charge += std::to_string(report.kappa[m].value());
  }
  return {{"check", report.check}, {"d", report.d},          {"charge", charge},
          {"route", report.route}, {"checked", report.checked}, {"violations", violations}};
}

json matrix_to_json(const GradedDecompositionMatrix& dec) {
  json rows = json::array(), cols = json::array(), entries = json::array();
  for (const auto& r : dec.rows) rows.push_back(to_string(r));
  for (const auto& c : dec.cols) cols.push_back(to_string(c));
  for (const auto& row : dec.entries) {
    json line = json::array();
    for (const auto& e : row) line.push_back(laurent_to_json(e));
    entries.push_back(line);
  }
  return {{"d", dec.d}, {"rows", rows}, {"cols", cols}, {"entries", entries}};
}

json llt_to_json(const LltReport& report) {
  json simple = json::array();
  for (const auto& [mu, dim] : report.simple_dims) {
    simple.push_back({{"mu", to_string(mu)}, {"qdim", laurent_to_json(dim)}});
  }
  return {{"matrix", matrix_to_json(report.matrix)},
          {"simple_qdims", simple},
          {"parity_report",
           {{"entries_checked", report.entries_checked}, {"violations", report.violations}}}};
}

json remark_to_json(const RemarkAnalysis& a) {
  json tableaux = json::array();
  for (const auto& t : a.tableaux) tableaux.push_back(to_string(t));
  json candidates = json::array();
  for (const auto& c : a.candidates) candidates.push_back(laurent_to_json(c));
  json out = {{"lambda", to_string(a.evidence.lambda)},
              {"mu", to_string(a.evidence.mu)},
              {"p", a.evidence.p},
              {"ungraded_value", a.evidence.ungraded_value},
              {"source", a.evidence.source},
              {"eps_lambda", a.eps_lambda.value()},
              {"eps_mu", a.eps_mu.value()},
              {"bound", a.bound},
              {"tableau_count", a.tableaux.size()},
              {"tableaux", tableaux},
              {"degrees", a.degrees},
              {"candidates", candidates},
              {"status", a.status}};
  out["residues"] = a.residues ? json(to_string(*a.residues)) : json(nullptr);
  out["truncation"] = a.residues ? laurent_to_json(a.truncation) : json(nullptr);
  out["pinned"] = a.pinned ? laurent_to_json(*a.pinned) : json(nullptr);
  return out;
}

std::string matrix_to_csv(const GradedDecompositionMatrix& dec) {
  std::ostringstream os;
  os << "lambda";
  for (const auto& c : dec.cols) os << ",\"" << to_string(c) << '"';
  os << '\n';
  for (std::size_t r = 0; r < dec.rows.size(); ++r) {
    os << '"' << to_string(dec.rows[r]) << '"';
    for (const auto& e : dec.entries[r]) os << ",\"" << to_string(e) << '"';
    os << '\n';
  }
  return os.str();
}

}  // namespace klr
