#include "monseq/golden.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "monseq/chain_solver.hpp"
#include "monseq/errors.hpp"

namespace monseq {

namespace {

struct MisereRow {
  int a;
  int d;
  const char* outcomes;
};

// n = 1..20, left to right.
constexpr MisereRow kMisereRows[] = {
    {3, 3, "DDDNNNNNNNNNNNNNNNNN"}, {4, 3, "DDDDPNNNNNNNNNNNNNNN"}, {5, 3, "DDDDDNPPPNNNNNNNNNNN"},
    {6, 3, "DDDDDDDNNNNNNNNNNNNN"}, {7, 3, "DDDDDDDDPNNNNNNNNNNN"}, {8, 3, "DDDDDDDDDNPPNNNNNNNN"},
    {9, 3, "DDDDDDDDDDDNNNNNNNNN"}, {4, 4, "DDDDDNPNNNNNNNNNNNNN"}, {5, 4, "DDDDDDDNNNPNNNNNNNNN"},
    {6, 4, "DDDDDDDDDNPNPPNNNNNN"}, {7, 4, "DDDDDDDDDNPNNNNNNNNN"}, {8, 4, "DDDDDDDDDDDNNNDNNNNP"},
    {9, 4, "DDDDDDDDDDDDDNPNPNND"}, {5, 5, "DDDDDDDDDDDNPNPNNNNN"}, {6, 5, "DDDDDDDDDDDNPNNNPNNN"},
    {7, 5, "DDDDDDDDDDDNDNPNPNNP"},
};

struct NormalRun {
  int a;
  int d;
  int n_from;
  int n_to;
  Outcome outcome;
};

// Computed normal-play rows, each extended with its final block through n = 20.
constexpr NormalRun kNormalRuns[] = {
    {4, 4, 9, 20, Outcome::N},
    {5, 4, 1, 10, Outcome::D},  {5, 4, 11, 20, Outcome::N},
    {6, 4, 1, 13, Outcome::D},  {6, 4, 14, 15, Outcome::P}, {6, 4, 16, 20, Outcome::N},
    {5, 5, 1, 14, Outcome::D},  {5, 5, 15, 20, Outcome::N},
    {7, 4, 1, 14, Outcome::D},  {7, 4, 15, 16, Outcome::N}, {7, 4, 17, 17, Outcome::P},
    {7, 4, 18, 20, Outcome::N},
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<ChainResult> embedded_misere_table() {
  std::vector<ChainResult> rows;
  for (const auto& row : kMisereRows) {
    for (int n = 1; n <= 20; ++n) {
      rows.push_back({row.a, row.d, n, PlayMode::Misere, parse_outcome(std::string(1, row.outcomes[n - 1]))});
    }
  }
  return rows;
}

std::vector<ChainResult> embedded_normal_results() {
  std::vector<ChainResult> rows;
  for (int a = 2; a <= 7; ++a) {
    for (int n = 1; n <= 14; ++n) rows.push_back({a, 2, n, PlayMode::Normal, closed_form_d2(a, n)});
  }
  for (int a = 3; a <= 7; ++a) {
    for (int n = 1; n <= 14; ++n) rows.push_back({a, 3, n, PlayMode::Normal, closed_form_d3(a, n)});
  }
  for (const auto& run : kNormalRuns) {
    for (int n = run.n_from; n <= run.n_to; ++n) rows.push_back({run.a, run.d, n, PlayMode::Normal, run.outcome});
  }
  return rows;
}

std::string to_csv(const std::vector<ChainResult>& rows) {
  std::string out = "a,d,n,mode,outcome\n";
  for (const auto& r : rows) {
    out += std::to_string(r.a) + "," + std::to_string(r.d) + "," + std::to_string(r.n) + "," +
           std::string(to_string(r.mode)) + "," + (r.outcome ? std::string(1, to_char(*r.outcome)) : "") + "\n";
  }
  return out;
}

std::vector<ChainResult> parse_csv(const std::string& text) {
  std::vector<ChainResult> rows;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.rfind("a,d,n", 0) == 0 || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(trim(f));
    if (line.back() == ',') fields.emplace_back();
    auto fail = [&](const std::string& why) {
      throw InputError("results CSV line " + std::to_string(line_no) + ": " + why);
    };
    if (fields.size() != 5) fail("expected 5 fields a,d,n,mode,outcome");
    ChainResult r;
    try {
      r.a = std::stoi(fields[0]);
      r.d = std::stoi(fields[1]);
      r.n = std::stoi(fields[2]);
    } catch (const std::exception&) {
      fail("a, d and n must be integers");
    }
    auto mode = parse_mode(fields[3]);
    if (!mode) fail("mode must be normal or misere");
    r.mode = *mode;
    if (!fields[4].empty()) {
      r.outcome = parse_outcome(fields[4]);
      if (!r.outcome) fail("outcome must be N, P or D");
    }
    rows.push_back(r);
  }
  return rows;
}

std::string to_json(const std::vector<ChainResult>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j = {{"a", r.a}, {"d", r.d}, {"n", r.n}, {"mode", std::string(to_string(r.mode))}};
    j["outcome"] = r.outcome ? nlohmann::json(std::string(1, to_char(*r.outcome))) : nlohmann::json(nullptr);
    arr.push_back(j);
  }
  return nlohmann::json{{"results", arr}}.dump(2) + "\n";
}

std::vector<ChainResult> parse_json(const std::string& text) {
  std::vector<ChainResult> rows;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& j : doc.at("results")) {
      ChainResult r;
      r.a = j.at("a").get<int>();
      r.d = j.at("d").get<int>();
      r.n = j.at("n").get<int>();
      auto mode = parse_mode(j.at("mode").get<std::string>());
      if (!mode) throw InputError("results JSON: bad mode");
      r.mode = *mode;
      if (!j.at("outcome").is_null()) {
        r.outcome = parse_outcome(j.at("outcome").get<std::string>());
        if (!r.outcome) throw InputError("results JSON: bad outcome");
      }
      rows.push_back(r);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("results JSON: ") + e.what());
  }
  return rows;
}

std::vector<ChainResult> load_golden(const std::string& file, const std::optional<std::string>& dir,
                                     bool* used_file) {
  if (used_file) *used_file = false;
  if (dir) {
    const std::filesystem::path path = std::filesystem::path(*dir) / file;
    if (std::filesystem::exists(path)) {
      std::ifstream in(path);
      std::stringstream buf;
      buf << in.rdbuf();
      if (used_file) *used_file = true;
      return parse_csv(buf.str());
    }
  }
  if (file == kMisereTableFile) return embedded_misere_table();
  if (file == kNormalResultsFile) return embedded_normal_results();
  throw InputError("no golden data named " + file);
}

std::optional<TableFormat> parse_table_format(const std::string& s) {
  if (s == "text") return TableFormat::Text;
  if (s == "csv") return TableFormat::Csv;
  if (s == "json") return TableFormat::Json;
  return std::nullopt;
}

std::string outcome_blocks(const std::vector<std::optional<Outcome>>& outcomes) {
  std::string out;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (i > 0 && i % 5 == 0) out += ' ';
    out += outcomes[i] ? to_char(*outcomes[i]) : '.';
  }
  return out;
}

std::string emit_table(const std::vector<ChainResult>& rows, TableFormat format) {
  if (format == TableFormat::Csv) return to_csv(rows);
  if (format == TableFormat::Json) return to_json(rows);

  struct Group {
    int a;
    int d;
    PlayMode mode;
    std::map<int, std::optional<Outcome>> by_n;
  };
  std::vector<Group> groups;
  for (const auto& r : rows) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const Group& g) { return g.a == r.a && g.d == r.d && g.mode == r.mode; });
    if (it == groups.end()) {
      groups.push_back({r.a, r.d, r.mode, {}});
      it = groups.end() - 1;
    }
    it->by_n[r.n] = r.outcome;
  }
  std::string out;
  std::string warnings;
  for (const auto& g : groups) {
    const int max_n = g.by_n.empty() ? 0 : g.by_n.rbegin()->first;
    std::vector<std::optional<Outcome>> line;
    std::string missing;
    for (int n = 1; n <= max_n; ++n) {
      auto it = g.by_n.find(n);
      line.push_back(it == g.by_n.end() ? std::nullopt : it->second);
      if (!line.back()) missing += (missing.empty() ? "" : ",") + std::to_string(n);
    }
    char head[64];
    std::snprintf(head, sizeof head, "%2d %2d %-6s  ", g.a, g.d, std::string(to_string(g.mode)).c_str());
    out += head + outcome_blocks(line) + "\n";
    if (!missing.empty()) {
      warnings += "warning: incomplete row a=" + std::to_string(g.a) + " d=" + std::to_string(g.d) + " " +
                  std::string(to_string(g.mode)) + ": missing n=" + missing + "\n";
    }
  }
  return out + warnings;
}

}  // namespace monseq
