#include "monseq/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "monseq/bumping.hpp"
#include "monseq/chain_solver.hpp"
#include "monseq/errors.hpp"
#include "monseq/extended_solver.hpp"
#include "monseq/order_core.hpp"
#include "monseq/q_solver.hpp"

#ifndef MONSEQ_DEFAULT_DATA_DIR
#define MONSEQ_DEFAULT_DATA_DIR ""
#endif

namespace monseq::cli {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

std::string letter(Outcome o) { return std::string(1, to_char(o)); }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::optional<std::string> default_data_dir() {
  if (const char* env = std::getenv("MONSEQ_DATA_DIR"); env && *env) return std::string(env);
  const std::string compiled = MONSEQ_DEFAULT_DATA_DIR;
  if (!compiled.empty()) return compiled;
  return std::nullopt;
}

int default_threads() {
  if (const char* env = std::getenv("MONSEQ_THREADS"); env && *env) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      return 1;
    }
  }
  return 1;
}

ChainSolveOptions chain_options(const RunConfig& c) {
  ChainSolveOptions o;
  o.capped = c.capped;
  o.node_limit = c.node_limit;
  o.memo_limit = c.memo_limit;
  o.threads = c.threads;
  return o;
}

std::vector<int> parse_sequence(const std::string& text) {
  std::vector<int> values;
  if (text.find(',') == std::string::npos) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw InputError("sequence must be digits or comma-separated integers");
      values.push_back(ch - '0');
    }
    return values;
  }
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(item, &used));
      if (used != item.size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("cannot read '" + item + "' as an integer");
    }
  }
  return values;
}

// ---- suites ---------------------------------------------------------------

void add_case(SuiteResult& result, std::string id, const std::string& expected, const std::string& actual,
              Clock::time_point start) {
  result.cases.push_back({std::move(id), expected, actual, expected == actual, seconds_since(start)});
}

SuiteResult chain_suite(const RunConfig& c, const char* file, const std::string& name) {
  SuiteResult result;
  result.suite = name;
  bool used_file = false;
  const auto rows = load_golden(file, c.data_dir, &used_file);
  result.source = used_file ? std::string("file ") + file : std::string("embedded");
  const int max_n = c.max_n.value_or(c.full ? 20 : 12);
  for (const ChainResult& row : rows) {
    if (row.n > max_n || !row.outcome) continue;
    const auto start = Clock::now();
    const SolveReport rep = solve_chain(GameParams(row.a, row.d, row.mode), row.n, chain_options(c));
    std::ostringstream id;
    id << to_string(row.mode) << " a=" << row.a << " d=" << row.d << " n=" << row.n;
    add_case(result, id.str(), letter(*row.outcome), letter(rep.outcome), start);
    ChainResult computed = row;
    computed.outcome = rep.outcome;
    result.table.push_back(computed);
  }
  return result;
}

SuiteResult q_suite(const RunConfig& c) {
  SuiteResult result;
  result.suite = "q-theorems";
  result.source = "closed forms";
  const int max_a = c.max_a.value_or(c.full ? 16 : 10);
  const int max_d_computed = c.full ? 8 : 6;
  for (int d = 2; d <= 5; ++d) {
    for (int a = std::max(d, 2); a <= max_a; ++a) {
      const auto start = Clock::now();
      Outcome expected = Outcome::N;
      if (d == 2) expected = Outcome::P;
      if (d == 3) expected = a % 2 == 1 ? Outcome::N : Outcome::P;
      const Outcome got = solve_q(GameParams(a, d)).outcome;
      add_case(result, "rule a=" + std::to_string(a) + " d=" + std::to_string(d), letter(expected), letter(got),
               start);
    }
  }
  for (int d = 4; d <= max_d_computed; ++d) {
    for (int a = d; a <= max_a; ++a) {
      const auto start = Clock::now();
      const Outcome got = solve_q(GameParams(a, d)).outcome;
      add_case(result, "computed a=" + std::to_string(a) + " d=" + std::to_string(d), "N", letter(got), start);
    }
  }
  for (int a = 3; a <= 7; ++a) {
    for (int d = 3; d <= 7; ++d) {
      const auto start = Clock::now();
      const bool ok = duality_check(a, d);
      add_case(result, "duality a=" + std::to_string(a) + " d=" + std::to_string(d), "true", ok ? "true" : "false",
               start);
    }
  }
  return result;
}

SuiteResult extended_suite(const RunConfig& c) {
  SuiteResult result;
  result.suite = "extended-parity";
  result.source = "parity rule";
  std::vector<std::pair<int, int>> params{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 3}, {3, 4}, {5, 3}, {4, 4}};
  ExtendedSolveOptions options;
  options.max_size = c.max_size;
  options.node_limit = c.node_limit;
  options.memo_limit = c.memo_limit;
  for (auto [a, d] : params) {
    const auto start = Clock::now();
    const Outcome got = solve_extended(a, d, options).outcome;
    add_case(result, "extended a=" + std::to_string(a) + " d=" + std::to_string(d), letter(parity_outcome(a, d)),
             letter(got), start);
  }
  return result;
}

SuiteResult admissible_suite() {
  SuiteResult result;
  result.suite = "admissible-counts";
  result.source = "alternate Fibonacci numbers";
  const int expected[] = {1, 3, 8, 21, 55, 144};
  for (int k = 1; k <= 6; ++k) {
    const auto start = Clock::now();
    add_case(result, "length " + std::to_string(k), std::to_string(expected[k - 1]),
             std::to_string(enumerate_admissible(k).size()), start);
  }
  return result;
}

void print_suite(const SuiteResult& result, const RunConfig& c, std::ostream& out) {
  if (c.format == TableFormat::Json) {
    json cases = json::array();
    for (const auto& sc : result.cases) {
      json j = {{"id", sc.id}, {"expected", sc.expected}, {"actual", sc.actual}, {"pass", sc.pass}};
      if (c.timing) j["elapsed_seconds"] = sc.elapsed_seconds;
      cases.push_back(j);
    }
    json doc = {{"suite", result.suite},   {"source", result.source}, {"cases", cases},
                {"passed", result.passed()}, {"failed", result.failed()}};
    if (!result.table.empty()) doc["results"] = json::parse(to_json(result.table))["results"];
    out << doc.dump(2) << "\n";
    return;
  }
  if (c.format == TableFormat::Csv) {
    out << "id,expected,actual,pass" << (c.timing ? ",elapsed_seconds" : "") << "\n";
    for (const auto& sc : result.cases) {
      out << sc.id << "," << sc.expected << "," << sc.actual << "," << (sc.pass ? "pass" : "fail");
      if (c.timing) out << "," << sc.elapsed_seconds;
      out << "\n";
    }
    return;
  }
  out << "suite " << result.suite << " (" << result.source << ")\n";
  for (const auto& sc : result.cases) {
    out << (sc.pass ? "PASS  " : "FAIL  ") << sc.id << "  expected " << sc.expected << "  actual " << sc.actual;
    if (c.timing) out << "  " << std::fixed << std::setprecision(3) << sc.elapsed_seconds << "s";
    out << "\n";
  }
  if (!result.table.empty()) out << emit_table(result.table, TableFormat::Text);
  out << "summary: " << result.passed() << " passed, " << result.failed() << " failed\n";
}

// ---- commands ---------------------------------------------------------------

int cmd_solve(const RunConfig& c, std::ostream& out) {
  if (c.subcommand == "chain") {
    const SolveReport rep = solve_chain(GameParams(c.a, c.d, c.mode), c.n, chain_options(c));
    if (c.json) {
      json j = {{"game", "chain"},
                {"a", c.a},
                {"d", c.d},
                {"n", c.n},
                {"mode", std::string(to_string(c.mode))},
                {"capped", c.capped},
                {"outcome", letter(rep.outcome)},
                {"smallest_winning_move", rep.smallest_winning_move ? json(*rep.smallest_winning_move) : json(nullptr)},
                {"nodes_expanded", rep.nodes_expanded},
                {"memo_entries", rep.memo_entries},
                {"elapsed_seconds", rep.elapsed.count()}};
      out << j.dump(2) << "\n";
    } else {
      out << letter(rep.outcome) << "\n";
    }
    return kOk;
  }
  if (c.subcommand == "q") {
    QSolveOptions options;
    options.forbid_suicide = c.forbid_suicide;
    options.node_limit = c.node_limit;
    options.memo_limit = c.memo_limit;
    const GameParams params(c.a, c.d, c.mode);
    const QSolveReport rep = solve_q(params, options);
    if (c.json || c.dump_graph) {
      json j = {{"game", "q"},
                {"a", c.a},
                {"d", c.d},
                {"mode", std::string(to_string(c.mode))},
                {"outcome", letter(rep.outcome)},
                {"nodes_expanded", rep.nodes_expanded},
                {"memo_entries", rep.memo_entries},
                {"max_depth", rep.max_depth},
                {"elapsed_seconds", rep.elapsed.count()}};
      if (c.dump_graph) {
        json graph = json::array();
        for (const TypedNode& node : typed_graph(params)) {
          json children = json::array();
          for (const ColourWord& w : node.children) children.push_back(w.to_string());
          graph.push_back({{"word", node.word.to_string()},
                           {"type", letter(node.type)},
                           {"terminal", node.terminal},
                           {"children", children}});
        }
        j["graph"] = graph;
      }
      out << j.dump(2) << "\n";
    } else {
      out << letter(rep.outcome) << "\n";
    }
    return kOk;
  }
  if (c.subcommand == "extended") {
    ExtendedSolveOptions options;
    options.max_size = c.max_size;
    options.node_limit = c.node_limit;
    options.memo_limit = c.memo_limit;
    const ExtendedReport rep = solve_extended(c.a, c.d, options);
    if (c.json) {
      json pv = json::array();
      for (const Perm& p : rep.principal_variation) pv.push_back(p.to_string());
      json j = {{"game", "extended"},          {"a", c.a},
                {"d", c.d},                     {"outcome", letter(rep.outcome)},
                {"parity_outcome", letter(parity_outcome(c.a, c.d))},
                {"nodes_expanded", rep.nodes_expanded},
                {"memo_entries", rep.memo_entries},
                {"principal_variation", pv},    {"elapsed_seconds", rep.elapsed.count()}};
      out << j.dump(2) << "\n";
    } else {
      out << letter(rep.outcome) << "\n";
    }
    return kOk;
  }
  // poset
  FinitePoset poset;
  if (!c.poset_file.empty()) {
    std::ifstream in(c.poset_file);
    if (!in) throw InputError("cannot open poset file " + c.poset_file);
    std::stringstream buf;
    buf << in.rdbuf();
    poset = FinitePoset::from_json(buf.str());
  } else {
    const auto colon = c.builtin.find(':');
    if (colon == std::string::npos) throw InputError("--builtin expects kind:size, e.g. boolean:3");
    const std::string kind = c.builtin.substr(0, colon);
    int size = 0;
    try {
      size = std::stoi(c.builtin.substr(colon + 1));
    } catch (const std::exception&) {
      throw InputError("--builtin size must be an integer");
    }
    if (kind == "boolean") {
      poset = FinitePoset::boolean_lattice(size);
    } else if (kind == "chain") {
      poset = FinitePoset::chain(size);
    } else if (kind == "antichain") {
      poset = FinitePoset::antichain(size);
    } else {
      throw InputError("unknown builtin poset kind '" + kind + "' (boolean, chain, antichain)");
    }
  }
  const GameParams params(c.a, c.d, c.mode);
  PosetSolveOptions options;
  options.node_limit = c.node_limit;
  const Outcome outcome = solve_poset(poset, params, options);
  std::optional<bool> draw;
  if (c.draw_reachable) draw = draw_reachable(poset, params, options);
  if (c.json) {
    json j = {{"game", "poset"}, {"elements", poset.size()}, {"a", c.a}, {"d", c.d},
              {"mode", std::string(to_string(c.mode))}, {"outcome", letter(outcome)}};
    if (draw) j["draw_reachable"] = *draw;
    out << j.dump(2) << "\n";
  } else {
    out << letter(outcome) << "\n";
    if (draw) out << "draw reachable: " << (*draw ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_bump(const RunConfig& c, std::ostream& out) {
  const std::vector<int> values = parse_sequence(c.sequence);
  if (c.trace) {
    const auto trace = double_bump_trace(values);
    for (std::size_t i = 0; i < trace.size(); ++i) {
      out << values[i] << "  " << trace[i].to_string() << "  " << trace[i].colour().to_string() << "\n";
    }
    return kOk;
  }
  const RecordingSequence rec = double_bump(values);
  out << rec.to_string() << "  " << rec.colour().to_string() << "\n";
  return kOk;
}

int cmd_enumerate(const RunConfig& c, std::ostream& out) {
  const auto words = enumerate_admissible(c.length);
  if (c.count_only) {
    out << words.size() << "\n";
    return kOk;
  }
  for (const ColourWord& w : words) {
    out << (w.empty() ? "(empty)" : w.to_string());
    if (c.binary) out << "  " << binary_encode(w);
    out << "\n";
  }
  return kOk;
}

int cmd_certify(const RunConfig& c, std::ostream& out) {
  CertificateReport rep;
  if (c.pset == "p4") {
    rep = check_exact_pset(p4_set(c.a), GameParams(c.a, 4));
  } else {
    rep = check_sufficient_pset(p5_set(c.a), GameParams(c.a, 5));
  }
  const auto set = c.pset == "p4" ? p4_set(c.a) : p5_set(c.a);
  out << c.pset << " for a=" << c.a << ":";
  for (const ColourWord& w : set) out << " " << w.to_string();
  out << "\n";
  auto show = [](const std::optional<ColourWord>& w) {
    if (!w) return std::string("-");
    return w->empty() ? std::string("(empty)") : w->to_string();
  };
  for (const CertificateStep& step : rep.steps) {
    out << (step.ok ? "ok    " : "FAIL  ") << (step.position.empty() ? "(empty)" : step.position.to_string())
        << (step.in_set ? " [member]" : "");
    if (c.pset == "p4") {
      out << "  witness " << show(step.witness);
    } else {
      out << "  move " << show(step.witness) << "  reply " << show(step.reply);
    }
    if (!step.note.empty()) out << "  (" << step.note << ")";
    out << "\n";
  }
  out << "certificate " << (rep.ok ? "verified" : "REJECTED") << "\n";
  return rep.ok ? kOk : kMismatch;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const SuiteResult result = run_suite(c);
  print_suite(result, c, out);
  return result.all_pass() ? kOk : kMismatch;
}

int cmd_scan(const RunConfig& c, std::ostream& out) {
  if (c.n_from < 0 || c.n_to < c.n_from) throw InputError("scan needs 0 <= n-from <= n-to");
  const GameParams params(c.a, c.d, c.mode);
  std::vector<ChainResult> rows;
  std::vector<std::optional<int>> moves;
  for (int n = c.n_from; n <= c.n_to; ++n) {
    const SolveReport rep = solve_chain(params, n, chain_options(c));
    rows.push_back({c.a, c.d, n, c.mode, rep.outcome});
    moves.push_back(rep.smallest_winning_move);
  }
  if (c.format == TableFormat::Csv) {
    out << emit_table(rows, TableFormat::Csv);
  } else if (c.format == TableFormat::Json) {
    json arr = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      arr.push_back({{"a", c.a},
                     {"d", c.d},
                     {"n", rows[i].n},
                     {"mode", std::string(to_string(c.mode))},
                     {"outcome", letter(*rows[i].outcome)},
                     {"smallest_winning_move", moves[i] ? json(*moves[i]) : json(nullptr)}});
    }
    out << json{{"results", arr}}.dump(2) << "\n";
  } else {
    out << "a=" << c.a << " d=" << c.d << " " << to_string(c.mode) << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out << "n=" << rows[i].n << "  " << letter(*rows[i].outcome);
      if (moves[i]) out << "  smallest winning move " << *moves[i];
      out << "\n";
    }
    if (c.n_from <= 1) out << emit_table(rows, TableFormat::Text);
  }
  return kOk;
}

int cmd_lemma_slot(const RunConfig& c, std::ostream& out) {
  if (c.r < 1 || c.s < 1) throw InputError("--r and --s must be positive");
  const Perm perm = Perm::parse(c.perm);
  const auto slot = safe_slot(perm, c.r, c.s);
  if (!slot) {
    out << "no safe slot\n";
    return kOk;
  }
  const Perm next = perm.inserted(slot->index, slot->value);
  out << "slot index=" << slot->index << " value=" << slot->value << "\n";
  out << "pattern " << next.to_string() << "  (LIS " << next.longest_increasing() << ", LDS "
      << next.longest_decreasing() << ")\n";
  return kOk;
}

}  // namespace

int SuiteResult::passed() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const SuiteCase& c) { return c.pass; }));
}

int SuiteResult::failed() const { return static_cast<int>(cases.size()) - passed(); }

SuiteResult run_suite(const RunConfig& c) {
  if (c.suite == "misere-table") return chain_suite(c, kMisereTableFile, c.suite);
  if (c.suite == "normal-results") return chain_suite(c, kNormalResultsFile, c.suite);
  if (c.suite == "q-theorems") return q_suite(c);
  if (c.suite == "extended-parity") return extended_suite(c);
  if (c.suite == "admissible-counts") return admissible_suite();
  throw InputError("unknown suite '" + c.suite + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  c.threads = default_threads();
  c.data_dir = default_data_dir();

  CLI::App app{"Exact solvers for monotonic sequence games", "monseq"};
  app.require_subcommand(1);
  std::string mode_text = "normal";
  std::string format_text = "text";
  std::string data_dir;

  auto add_params = [&](CLI::App* sub, bool with_n, bool with_mode) {
    sub->add_option("--a", c.a, "critical ascending length")->required()->check(CLI::Range(2, 64));
    sub->add_option("--d", c.d, "critical descending length")->required()->check(CLI::Range(2, 64));
    if (with_n) sub->add_option("--n", c.n, "deck size")->required()->check(CLI::Range(0, 255));
    if (with_mode) sub->add_option("--mode", mode_text, "normal or misere")->check(CLI::IsMember({"normal", "misere"}));
  };
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--node-limit", c.node_limit, "abort after this many expanded nodes");
    sub->add_option("--memo-limit", c.memo_limit, "abort when the memo table holds this many entries");
  };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", c.threads, "worker threads (default $MONSEQ_THREADS or 1)")->check(CLI::Range(1, 256));
  };

  CLI::App* solve = app.add_subcommand("solve", "solve the empty board of a game");
  solve->require_subcommand(1);
  CLI::App* chain = solve->add_subcommand("chain", "finite deck [n]");
  add_params(chain, true, true);
  chain->add_flag("--capped", c.capped, "normalize large gaps");
  chain->add_flag("--json", c.json, "JSON report");
  add_limits(chain);
  add_threads(chain);
  CLI::App* q = solve->add_subcommand("q", "dense deck (the rationals)");
  add_params(q, false, true);
  q->add_flag("--json", c.json, "JSON report");
  q->add_flag("--dump-graph", c.dump_graph, "include the typed reachable graph (implies --json)");
  q->add_flag("--forbid-suicide", c.forbid_suicide, "solve the suicide-forbidden variant");
  add_limits(q);
  CLI::App* extended = solve->add_subcommand("extended", "insert-anywhere game on the rationals");
  add_params(extended, false, false);
  extended->add_option("--max-size", c.max_size, "largest (a-1)(d-1) accepted")->check(CLI::Range(1, 15));
  extended->add_flag("--json", c.json, "JSON report");
  add_limits(extended);
  CLI::App* poset = solve->add_subcommand("poset", "finite partially ordered deck");
  add_params(poset, false, true);
  auto* file_opt = poset->add_option("--file", c.poset_file, "poset JSON file")->check(CLI::ExistingFile);
  auto* builtin_opt = poset->add_option("--builtin", c.builtin, "boolean:K, chain:N or antichain:N");
  file_opt->excludes(builtin_opt);
  poset->add_flag("--draw-reachable", c.draw_reachable, "also report whether a draw can be reached");
  poset->add_flag("--json", c.json, "JSON report");
  poset->add_option("--node-limit", c.node_limit, "abort after this many expanded nodes");

  CLI::App* bump = app.add_subcommand("bump", "run double bumping on a sequence");
  bump->add_flag("--trace", c.trace, "print every intermediate recording sequence");
  bump->add_option("sequence", c.sequence, "digits (514263) or comma-separated values")->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate combinatorial objects");
  enumerate->require_subcommand(1);
  CLI::App* admissible = enumerate->add_subcommand("admissible", "admissible colour words");
  admissible->add_option("--length", c.length, "word length")->required()->check(CLI::Range(0, 20));
  admissible->add_flag("--count-only", c.count_only, "print only the count");
  admissible->add_flag("--binary", c.binary, "append the binary encoding");

  CLI::App* certify = app.add_subcommand("certify", "check a P-position certificate");
  certify->add_option("--pset", c.pset, "p4 or p5")->required()->check(CLI::IsMember({"p4", "p5"}));
  certify->add_option("--a", c.a, "critical ascending length")->required()->check(CLI::Range(4, 40));

  CLI::App* verify = app.add_subcommand("verify", "run a regression suite");
  verify->add_option("--suite", c.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-n", c.max_n, "largest deck size for chain suites")->check(CLI::Range(1, 255));
  verify->add_option("--max-a", c.max_a, "largest a for q-theorems")->check(CLI::Range(2, 40));
  verify->add_flag("--full", c.full, "full tier (n up to 20, a up to 16)");
  verify->add_option("--format", format_text, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  verify->add_option("--data-dir", data_dir, "directory holding golden CSV files");
  verify->add_flag("--timing", c.timing, "include per-case timings");
  add_limits(verify);
  add_threads(verify);

  CLI::App* scan = app.add_subcommand("scan", "outcome and smallest winning move across deck sizes");
  add_params(scan, false, true);
  scan->add_option("--n-from", c.n_from, "first deck size")->required();
  scan->add_option("--n-to", c.n_to, "last deck size")->required();
  scan->add_option("--format", format_text, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  add_limits(scan);
  add_threads(scan);

  CLI::App* lemma = app.add_subcommand("lemma-slot", "find a point that extends a pattern safely");
  lemma->add_option("--perm", c.perm, "pattern, e.g. 2,1,3")->required();
  lemma->add_option("--r", c.r, "increasing bound")->required();
  lemma->add_option("--s", c.s, "decreasing bound")->required();

  std::vector<std::string> storage{"monseq"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  c.mode = *parse_mode(mode_text);
  c.format = *parse_table_format(format_text);
  if (!data_dir.empty()) c.data_dir = data_dir;
  for (CLI::App* sub : app.get_subcommands()) {
    c.command = sub->get_name();
    for (CLI::App* inner : sub->get_subcommands()) c.subcommand = inner->get_name();
  }
  if (c.command == "solve" && c.subcommand == "poset" && c.poset_file.empty() && c.builtin.empty()) {
    err << "solve poset needs --file or --builtin\n";
    return kUsage;
  }

  try {
    if (c.command == "solve") return cmd_solve(c, out);
    if (c.command == "bump") return cmd_bump(c, out);
    if (c.command == "enumerate") return cmd_enumerate(c, out);
    if (c.command == "certify") return cmd_certify(c, out);
    if (c.command == "verify") return cmd_verify(c, out);
    if (c.command == "scan") return cmd_scan(c, out);
    if (c.command == "lemma-slot") return cmd_lemma_slot(c, out);
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const StrategyError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  err << "unknown command\n";
  return kUsage;
}

}  // namespace monseq::cli
