#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monseq/types.hpp"

namespace monseq {

// One row of a chain results file: a,d,n,mode,outcome.
struct ChainResult {
  int a = 2;
  int d = 2;
  int n = 0;
  PlayMode mode = PlayMode::Normal;
  std::optional<Outcome> outcome;  // empty = not computed

  friend bool operator==(const ChainResult&, const ChainResult&) = default;
};

// Misere outcomes for n = 1..20 on the sixteen tabulated (a, d) rows.
std::vector<ChainResult> embedded_misere_table();
// Normal-play outcomes: d = 2 and d = 3 closed forms expanded, (4,4,n) for
// n >= 9, and the computed rows for (5,4), (6,4), (5,5), (7,4).
std::vector<ChainResult> embedded_normal_results();

inline constexpr const char* kMisereTableFile = "misere_table.csv";
inline constexpr const char* kNormalResultsFile = "normal_results.csv";

std::string to_csv(const std::vector<ChainResult>& rows);
// Throws InputError on malformed lines. Blank lines are skipped.
std::vector<ChainResult> parse_csv(const std::string& text);

std::string to_json(const std::vector<ChainResult>& rows);
std::vector<ChainResult> parse_json(const std::string& text);

// Reads `<dir>/<file>` when it exists, otherwise returns the embedded copy.
// `used_file` reports which source was used.
std::vector<ChainResult> load_golden(const std::string& file, const std::optional<std::string>& dir,
                                     bool* used_file = nullptr);

enum class TableFormat { Text, Csv, Json };
std::optional<TableFormat> parse_table_format(const std::string& s);

// "DDDNN NNNNN" style blocks of five; missing entries render as '.'.
std::string outcome_blocks(const std::vector<std::optional<Outcome>>& outcomes);

// Text groups rows per (a, d, mode) with n = 1..max in blocks of five and
// appends a warning naming every missing n. Csv and Json list the rows.
std::string emit_table(const std::vector<ChainResult>& rows, TableFormat format);

}  // namespace monseq
