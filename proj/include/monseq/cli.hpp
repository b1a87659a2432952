#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "monseq/golden.hpp"
#include "monseq/types.hpp"

namespace monseq::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kResource = 3, kInternal = 4 };

// Parsed command line. Validated before any computation starts.
struct RunConfig {
  std::string command;     // solve, bump, enumerate, certify, verify, scan, lemma-slot
  std::string subcommand;  // chain|q|extended|poset for solve, admissible for enumerate
  int a = 0;
  int d = 0;
  int n = 0;
  PlayMode mode = PlayMode::Normal;
  TableFormat format = TableFormat::Text;
  bool json = false;

  std::uint64_t node_limit = 1'000'000'000;
  std::uint64_t memo_limit = 100'000'000;
  int threads = 1;

  bool capped = false;
  bool dump_graph = false;
  bool forbid_suicide = false;
  int max_size = 12;
  std::string poset_file;
  std::string builtin;
  bool draw_reachable = false;

  bool trace = false;
  std::string sequence;

  int length = 0;
  bool count_only = false;
  bool binary = false;

  std::string pset;

  std::string suite;
  bool full = false;
  std::optional<int> max_n;
  std::optional<int> max_a;
  std::optional<std::string> data_dir;
  bool timing = false;

  int n_from = 1;
  int n_to = 1;

  std::string perm;
  int r = 0;
  int s = 0;
};

struct SuiteCase {
  std::string id;
  std::string expected;
  std::string actual;
  bool pass = false;
  double elapsed_seconds = 0;
};

struct SuiteResult {
  std::string suite;
  std::string source;
  std::vector<SuiteCase> cases;
  // Computed chain outcomes, for table rendering.
  std::vector<ChainResult> table;

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"misere-table", "normal-results", "q-theorems", "extended-parity",
                                              "admissible-counts"};
  return names;
}

// Runs one verification suite. Throws InputError for an unknown suite.
SuiteResult run_suite(const RunConfig& config);

// Entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monseq::cli
