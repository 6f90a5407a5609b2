#pragma once

// Command-line surface. `run_cli` is what the klrparity binary calls; it is
// a library function so the test suite can drive it directly.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "klr/combinatorics.hpp"

namespace klr::cli {

enum class Format { text, json, csv };

struct RunConfig {
  std::string subcommand;  // qdim, truncate, tableaux, verify, restricted, llt, remark
  std::string check;       // verify only: parity, lemma-tlda, hecke
  int d = 0;
  Multicharge charge{0};
  std::optional<Multipartition> lambda;
  std::optional<ResidueSequence> residues;
  Format format = Format::text;
  bool parallel = false;
  std::optional<int> bound;
};

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolations = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInternal = 3;

struct RunResult {
  int status = kOk;
  std::string output;
};

// Throws InvalidInput when a parameter the subcommand needs is missing.
RunResult run(const RunConfig& config);

// Parses argv-style arguments (without the program name), runs, and writes
// to the given streams. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace klr::cli
