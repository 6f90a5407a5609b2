#include "klr/cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "klr/adjustment.hpp"
#include "klr/crystal.hpp"
#include "klr/errors.hpp"
#include "klr/fock.hpp"
#include "klr/io.hpp"
#include "klr/specht.hpp"
#include "klr/tableaux.hpp"

namespace klr::cli {

namespace {

std::string charge_string(const Multicharge& kappa) { return to_string(kappa.charges()); }

const Multipartition& need_lambda(const RunConfig& c) {
  if (!c.lambda) throw InvalidInput(c.subcommand + " needs --lambda");
  return *c.lambda;
}

const ResidueSequence& need_residues(const RunConfig& c) {
  if (!c.residues) throw InvalidInput(c.subcommand + " needs --residues");
  return *c.residues;
}

void need_level_one(const RunConfig& c) {
  if (c.charge.level() != 1 || c.charge[1] != Residue(0)) {
    throw InvalidInput(c.subcommand + " is only available for the multicharge (0)");
  }
}

void no_csv(const RunConfig& c) {
  if (c.format == Format::csv) throw InvalidInput("--format csv is not supported by " + c.subcommand);
}

Exec exec_of(const RunConfig& c) { return c.parallel ? Exec::parallel : Exec::serial; }

RunResult poly_result(const RunConfig& c, const std::string& key, const LaurentPoly& f) {
  std::ostringstream os;
  switch (c.format) {
    case Format::text:
      os << to_string(f) << '\n';
      break;
    case Format::csv:
      os << "lambda," << key << "\n\"" << to_string(*c.lambda) << "\",\"" << to_string(f) << "\"\n";
      break;
    case Format::json: {
      json j = {{"lambda", to_string(*c.lambda)},
                {"charge", charge_string(c.charge)},
                {key, laurent_to_json(f)},
                {"text", to_string(f)}};
      if (c.residues) j["residues"] = to_string(*c.residues);
      os << j.dump(2) << '\n';
      break;
    }
  }
  return {kOk, os.str()};
}

RunResult run_tableaux(const RunConfig& c) {
  no_csv(c);
  const auto& lambda = need_lambda(c);
  std::vector<std::pair<StandardTableau, int>> found;
  auto collect = [&](const StandardTableau& t, int deg) {
    found.emplace_back(t, deg);
    return true;
  };
  if (c.residues) {
    for_each_standard(lambda, c.charge, *c.residues, collect);
  } else {
    for_each_standard(lambda, c.charge, collect);
  }
  std::ostringstream os;
  if (c.format == Format::json) {
    json list = json::array();
    for (const auto& [t, deg] : found) {
      json j = tableau_to_json(t);
      j["degree"] = deg;
      j["residues"] = to_string(residue_sequence(t, c.charge));
      list.push_back(j);
    }
    os << json{{"lambda", to_string(lambda)}, {"charge", charge_string(c.charge)},
               {"count", found.size()}, {"tableaux", list}}
              .dump(2)
       << '\n';
  } else {
    for (const auto& [t, deg] : found) os << to_string(t) << "\tdeg " << deg << '\n';
    os << "count: " << found.size() << '\n';
  }
  return {kOk, os.str()};
}

RunResult run_verify(const RunConfig& c) {
  no_csv(c);
  SweepReport report;
  if (c.check == "parity") {
    report = verify_theorem1(c.d, c.charge, exec_of(c));
  } else if (c.check == "lemma-tlda") {
    report = verify_lemma_tlda(c.d, c.charge, exec_of(c));
  } else if (c.check == "hecke") {
    report = verify_hecke_even(c.d, c.charge, exec_of(c));
  } else {
    throw InvalidInput("unknown verify check '" + c.check + "'");
  }
  std::ostringstream os;
  if (c.format == Format::json) {
    os << report_to_json(report).dump(2) << '\n';
  } else {
    os << report.check << " d=" << report.d << " charge=" << charge_string(report.kappa)
       << " route=" << report.route << " checked=" << report.checked
       << " violations=" << report.violations.size() << '\n';
    for (const auto& v : report.violations) os << "violation " << to_string(v.lambda) << ": " << v.detail << '\n';
  }
  return {report.ok() ? kOk : kViolations, os.str()};
}

RunResult run_restricted(const RunConfig& c) {
  const auto list = enumerate_restricted(c.d, c.charge, exec_of(c));
  std::ostringstream os;
  if (c.format == Format::json) {
    json j = json::array();
    for (const auto& l : list) j.push_back(to_string(l));
    os << j.dump() << '\n';
  } else {
    if (c.format == Format::csv) os << "multipartition\n";
    for (const auto& l : list) os << (c.format == Format::csv ? "\"" + to_string(l) + "\"" : to_string(l)) << '\n';
  }
  return {kOk, os.str()};
}

RunResult run_llt(const RunConfig& c) {
  need_level_one(c);
  const LltReport report = verify_llt(c.d, exec_of(c));
  std::ostringstream os;
  switch (c.format) {
    case Format::json:
      os << llt_to_json(report).dump(2) << '\n';
      break;
    case Format::csv:
      os << matrix_to_csv(report.matrix);
      break;
    case Format::text: {
      const auto& dec = report.matrix;
      os << "graded decomposition matrix d=" << dec.d << " (rows lambda, columns mu)\n";
      os << "lambda";
      for (const auto& mu : dec.cols) os << '\t' << to_string(mu);
      os << '\n';
      for (std::size_t r = 0; r < dec.rows.size(); ++r) {
        os << to_string(dec.rows[r]);
        for (const auto& e : dec.entries[r]) os << '\t' << to_string(e);
        os << '\n';
      }
      for (const auto& [mu, dim] : report.simple_dims) {
        os << "qdim D(" << to_string(mu) << ") = " << to_string(dim) << '\n';
      }
      os << "checks: entries=" << report.entries_checked
         << " violations=" << report.violations.size() << '\n';
      for (const auto& v : report.violations) os << "violation " << v << '\n';
      break;
    }
  }
  return {report.ok() ? kOk : kViolations, os.str()};
}

RunResult run_remark(const RunConfig& c) {
  no_csv(c);
  need_level_one(c);
  std::vector<RemarkAnalysis> analyses;
  for (const auto& ev : embedded_evidence()) analyses.push_back(analyse_evidence(ev, c.charge, c.bound));
  std::ostringstream os;
  if (c.format == Format::json) {
    json j = json::array();
    for (const auto& a : analyses) j.push_back(remark_to_json(a));
    os << j.dump(2) << '\n';
  } else {
    for (const auto& a : analyses) {
      os << "lambda=" << to_string(a.evidence.lambda) << " mu=" << to_string(a.evidence.mu)
         << " p=" << a.evidence.p << " a(1)=" << a.evidence.ungraded_value
         << " eps(lambda)=" << a.eps_lambda.value() << " eps(mu)=" << a.eps_mu.value() << '\n';
      if (a.residues) {
        os << "  residues: " << to_string(*a.residues) << '\n';
        os << "  tableaux: " << a.tableaux.size() << '\n';
        for (std::size_t k = 0; k < a.tableaux.size(); ++k) os << "    " << to_string(a.tableaux[k]) << '\n';
        os << "  degrees:";
        for (int deg : a.degrees) os << ' ' << deg;
        os << "\n  truncation: " << to_string(a.truncation) << '\n';
      }
      os << "  candidates (bound " << a.bound << "):";
      for (const auto& cand : a.candidates) os << ' ' << to_string(cand);
      os << "\n  " << (a.pinned ? "pinned: " + to_string(*a.pinned) : a.status) << '\n';
    }
  }
  // Undetermined pairs are an expected outcome, not a failure.
  return {kOk, os.str()};
}

}  // namespace

RunResult run(const RunConfig& c) {
  const std::string& sub = c.subcommand;
  if (sub == "qdim") {
    return poly_result(c, "qdim", qdim_specht(need_lambda(c), c.charge));
  }
  if (sub == "truncate") {
    return poly_result(c, "qdim", qdim_truncation(need_lambda(c), c.charge, need_residues(c)));
  }
  if (sub == "tableaux") return run_tableaux(c);
  if (sub == "verify") return run_verify(c);
  if (sub == "restricted") return run_restricted(c);
  if (sub == "llt") return run_llt(c);
  if (sub == "remark") return run_remark(c);
  throw InvalidInput("unknown subcommand '" + sub + "'");
}

namespace {

struct RawFlags {
  int d = 0;
  std::optional<int> level;
  std::string charge;
  std::string lambda;
  std::string residues;
  std::string format = "text";
  bool parallel = false;
  std::optional<int> bound;
};

void add_flags(CLI::App* app, RawFlags& raw) {
  app->add_option("--d", raw.d, "size d")->check(CLI::NonNegativeNumber);
  app->add_option("--level", raw.level, "level l (charge defaults to all zeros)")
      ->check(CLI::PositiveNumber);
  app->add_option("--charge", raw.charge, "multicharge, comma-separated residues");
  app->add_option("--lambda", raw.lambda, "multipartition, e.g. 3,2,2,1 or 2,1|1");
  app->add_option("--residues", raw.residues, "residue sequence, e.g. 0,1,0,1");
  app->add_option("--format", raw.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app->add_flag("--parallel", raw.parallel, "run sweeps with OpenMP");
  app->add_option("--bound", raw.bound, "exponent bound for remark candidates")
      ->check(CLI::NonNegativeNumber);
}

RunConfig to_config(const std::string& sub, const std::string& check, const RawFlags& raw) {
  RunConfig c;
  c.subcommand = sub;
  c.check = check;
  c.d = raw.d;
  c.parallel = raw.parallel;
  c.bound = raw.bound;
  c.format = raw.format == "json" ? Format::json : raw.format == "csv" ? Format::csv : Format::text;
  if (!raw.lambda.empty()) c.lambda = parse_multipartition(raw.lambda);
  if (!raw.residues.empty()) c.residues = parse_residues(raw.residues);

  if (!raw.charge.empty()) {
    c.charge = parse_multicharge(raw.charge);
  } else {
    const int level = raw.level.value_or(c.lambda ? c.lambda->level() : 1);
    c.charge = Multicharge(std::vector<Residue>(static_cast<std::size_t>(level)));
  }
  if (raw.level && *raw.level != c.charge.level()) {
    throw InvalidInput("--level disagrees with the length of --charge");
  }
  if (c.lambda && c.lambda->level() != c.charge.level()) {
    throw InvalidInput("--lambda has level " + std::to_string(c.lambda->level()) +
                       " but the multicharge has level " + std::to_string(c.charge.level()));
  }
  return c;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded Specht module combinatorics in quantum characteristic 2", "klrparity"};
  app.require_subcommand(1);
  RawFlags raw;

  struct Leaf {
    CLI::App* app;
    std::string sub;
    std::string check;
  };
  std::vector<Leaf> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  const std::string& sub, const std::string& check) {
    CLI::App* a = parent->add_subcommand(name, help);
    add_flags(a, raw);
    leaves.push_back({a, sub, check});
  };
  leaf(&app, "qdim", "graded dimension of a Specht module", "qdim", "");
  leaf(&app, "truncate", "graded dimension of e(i)S(lambda)", "truncate", "");
  leaf(&app, "tableaux", "standard tableaux with degrees", "tableaux", "");
  CLI::App* verify = app.add_subcommand("verify", "exhaustive parity sweeps");
  verify->require_subcommand(1);
  leaf(verify, "parity", "qdim S(lambda) is pure of parity eps(lambda)", "verify", "parity");
  leaf(verify, "lemma-tlda", "deg(t^lambda) = eps(lambda) mod 2", "verify", "lemma-tlda");
  leaf(verify, "hecke", "qdim of the algebra has no odd part", "verify", "hecke");
  leaf(&app, "restricted", "restricted multipartitions via crystal operators", "restricted", "");
  leaf(&app, "llt", "characteristic-0 graded decomposition matrix", "llt", "");
  leaf(&app, "remark", "pin adjustment entries from published evidence", "remark", "");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    for (const auto& l : leaves) {
      if (l.app->parsed()) {
        const RunResult result = run(to_config(l.sub, l.check, raw));
        out << result.output;
        return result.status;
      }
    }
    err << "no subcommand selected\n";
    return kUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace klr::cli
