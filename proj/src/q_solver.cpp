#include "monseq/q_solver.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "monseq/errors.hpp"

namespace monseq {

namespace {

Key128 key_of(const ColourWord& w) { return Key128{w.key(), 1}; }

ColourWord repeat(Colour c, int count) {
  ColourWord w;
  for (int i = 0; i < count; ++i) w.push_back(c);
  return w;
}

ColourWord concat(const ColourWord& x, std::string_view tail) {
  ColourWord w = x;
  const ColourWord t = ColourWord::from_string(tail);
  for (int i = 0; i < t.size(); ++i) w.push_back(t[i]);
  return w;
}

std::vector<ColourWord> sorted_unique(std::vector<ColourWord> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

std::vector<ColourWord> children_unchecked(const ColourWord& word) {
  std::vector<ColourWord> out;
  out.reserve(word.size() + 1);
  for (int i = 0; i <= word.size(); ++i) out.push_back(insert_purple_unchecked(word, i).word);
  return sorted_unique(std::move(out));
}

}  // namespace

std::vector<ColourWord> colour_children(const ColourWord& word) {
  if (!is_admissible(word)) throw InputError("colour word " + word.to_string() + " is not admissible");
  return children_unchecked(word);
}

bool is_terminal_q(const ColourWord& word, const GameParams& params) {
  return word.reddish() >= params.a() || word.bluish() >= params.d();
}

QSolver::QSolver(const GameParams& params, const QSolveOptions& options)
    : params_(params), options_(options), memo_(std::make_unique<OutcomeTable>(options.memo_limit)) {
  if (options.forbid_suicide && params.mode() != PlayMode::Normal) {
    throw InputError("the suicide-forbidden variant is defined for normal play only");
  }
}

QSolver::~QSolver() = default;
QSolver::QSolver(QSolver&&) noexcept = default;
QSolver& QSolver::operator=(QSolver&&) noexcept = default;

std::uint64_t QSolver::memo_entries() const { return memo_->size(); }

Outcome QSolver::type_of(const ColourWord& word) {
  if (!is_admissible(word)) throw InputError("colour word " + word.to_string() + " is not admissible");
  if (is_terminal_q(word, params_)) return params_.terminal_outcome();
  stack_.clear();
  return search(word, 0);
}

Outcome QSolver::search(const ColourWord& word, int depth) {
  const Key128 key = key_of(word);
  if (auto hit = memo_->find(key)) return *hit;
  const int bound = (params_.a() - 1) * (params_.d() - 1) + 1;
  if (depth > bound) {
    throw InvariantError("line of play longer than " + std::to_string(bound) + " moves reached " + word.to_string());
  }
  if (std::find(stack_.begin(), stack_.end(), word.key()) != stack_.end()) {
    throw InvariantError("cycle in the colour-word graph through " + word.to_string());
  }
  if (++nodes_ > options_.node_limit) {
    throw ResourceError("q solver exceeded node limit " + std::to_string(options_.node_limit));
  }
  max_depth_ = std::max(max_depth_, depth);
  stack_.push_back(word.key());

  const std::vector<ColourWord> children = children_unchecked(word);
  auto terminal = [&](const ColourWord& c) { return is_terminal_q(c, params_); };
  auto suicidal = [&](const ColourWord& c) {
    return c.reddish() >= params_.a() - 1 || c.bluish() >= params_.d() - 1;
  };
  const bool restrict = options_.forbid_suicide && std::none_of(children.begin(), children.end(), terminal) &&
                        std::any_of(children.begin(), children.end(), [&](const ColourWord& c) { return !suicidal(c); });
  OutcomeFold fold;
  for (const ColourWord& c : children) {
    if (restrict && suicidal(c)) continue;
    if (fold.add(terminal(c) ? params_.terminal_outcome() : search(c, depth + 1))) break;
  }
  const Outcome result = fold.result();
  stack_.pop_back();
  memo_->insert(key, result);
  return result;
}

QSolveReport solve_q(const GameParams& params, const QSolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  QSolver solver(params, options);
  QSolveReport report;
  report.outcome = solver.type_of(ColourWord{});
  report.nodes_expanded = solver.nodes_expanded();
  report.memo_entries = solver.memo_entries();
  report.max_depth = solver.max_depth();
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

bool duality_check(int a, int d) {
  if (a < 3 || d < 3) throw InputError("duality check needs a, d >= 3");
  return solve_q(GameParams(a, d, PlayMode::Normal)).outcome ==
         solve_q(GameParams(a - 1, d - 1, PlayMode::Misere)).outcome;
}

std::vector<ColourWord> reachable_words(const GameParams& params) {
  std::vector<ColourWord> order;
  std::unordered_set<ColourWord> seen;
  std::deque<ColourWord> queue;
  queue.push_back(ColourWord{});
  seen.insert(ColourWord{});
  while (!queue.empty()) {
    const ColourWord w = queue.front();
    queue.pop_front();
    order.push_back(w);
    if (is_terminal_q(w, params)) continue;
    for (const ColourWord& c : children_unchecked(w)) {
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return order;
}

std::vector<TypedNode> typed_graph(const GameParams& params) {
  QSolver solver(params);
  std::vector<TypedNode> graph;
  for (const ColourWord& w : reachable_words(params)) {
    TypedNode node;
    node.word = w;
    node.terminal = is_terminal_q(w, params);
    node.type = solver.type_of(w);
    if (!node.terminal) node.children = children_unchecked(w);
    graph.push_back(std::move(node));
  }
  return graph;
}

std::vector<ColourWord> p4_set(int a) {
  if (a < 4) throw InputError("P4 is defined for a >= 4");
  std::vector<ColourWord> set{ColourWord::from_string("P"), concat(repeat(Colour::R, a - 3), "PB")};
  for (int i = 0; i <= a - 5; ++i) set.push_back(concat(repeat(Colour::R, i), "PP"));
  return sorted_unique(std::move(set));
}

std::vector<ColourWord> p5_set(int a) {
  if (a < 5) throw InputError("P5 is defined for a >= 5");
  std::vector<ColourWord> set{ColourWord::from_string("P"), ColourWord::from_string("RPB")};
  for (int i = 0; i <= a - 6; ++i) {
    set.push_back(concat(repeat(Colour::R, i), "PRPB"));
    set.push_back(concat(repeat(Colour::R, i), "RPBP"));
  }
  set.push_back(concat(repeat(Colour::R, a - 5), "PPP"));
  set.push_back(concat(repeat(Colour::R, a - 3), "PBB"));
  return sorted_unique(std::move(set));
}

namespace {

bool contains(const std::vector<ColourWord>& sorted, const ColourWord& w) {
  return std::binary_search(sorted.begin(), sorted.end(), w);
}

std::optional<ColourWord> good_child(const ColourWord& w, const std::vector<ColourWord>& set,
                                     const GameParams& params) {
  for (const ColourWord& c : children_unchecked(w)) {
    if (is_terminal_q(c, params) || contains(set, c)) return c;
  }
  return std::nullopt;
}

std::optional<ColourWord> terminal_child(const ColourWord& w, const GameParams& params) {
  for (const ColourWord& c : children_unchecked(w)) {
    if (is_terminal_q(c, params)) return c;
  }
  return std::nullopt;
}

}  // namespace

CertificateReport check_exact_pset(const std::vector<ColourWord>& set_in, const GameParams& params) {
  const std::vector<ColourWord> set = sorted_unique(set_in);
  CertificateReport report;
  for (const ColourWord& w : reachable_words(params)) {
    if (is_terminal_q(w, params)) continue;
    CertificateStep step;
    step.position = w;
    step.in_set = contains(set, w);
    step.witness = good_child(w, set, params);
    if (step.in_set && step.witness) {
      step.ok = false;
      step.note = "member has a terminal or member child";
    } else if (!step.in_set && !step.witness) {
      step.ok = false;
      step.note = "non-member has no terminal or member child";
    }
    report.ok = report.ok && step.ok;
    report.steps.push_back(std::move(step));
  }
  return report;
}

bool verify_exact_pset(const std::vector<ColourWord>& set, const GameParams& params) {
  return check_exact_pset(set, params).ok;
}

CertificateReport check_sufficient_pset(const std::vector<ColourWord>& set_in, const GameParams& params) {
  const std::vector<ColourWord> set = sorted_unique(set_in);
  CertificateReport report;
  if (!contains(set, ColourWord::from_string("P"))) {
    CertificateStep step;
    step.position = ColourWord::from_string("P");
    step.ok = false;
    step.note = "P is not a member";
    report.steps.push_back(step);
    report.ok = false;
  }
  for (const ColourWord& w : set) {
    if (!is_admissible(w) || is_terminal_q(w, params)) {
      CertificateStep step;
      step.position = w;
      step.in_set = true;
      step.ok = false;
      step.note = "member is not a non-terminal position";
      report.steps.push_back(step);
      report.ok = false;
      continue;
    }
    if (auto t = terminal_child(w, params)) {
      CertificateStep step;
      step.position = w;
      step.in_set = true;
      step.witness = t;
      step.ok = false;
      step.note = "member has a terminal child";
      report.steps.push_back(step);
      report.ok = false;
      continue;
    }
    for (const ColourWord& v : children_unchecked(w)) {
      CertificateStep step;
      step.position = w;
      step.in_set = true;
      step.witness = v;
      step.reply = good_child(v, set, params);
      if (!step.reply) {
        step.ok = false;
        step.note = "child has no terminal or member reply";
      }
      report.ok = report.ok && step.ok;
      report.steps.push_back(std::move(step));
    }
  }
  return report;
}

bool verify_sufficient_pset(const std::vector<ColourWord>& set, const GameParams& params) {
  return check_sufficient_pset(set, params).ok;
}

bool verify_strategy_stealing_case(int a) {
  if (a < 4) throw InputError("the symmetric case needs a >= 4");
  QSolver solver(GameParams(a, a));
  auto w = [](std::string_view s) { return ColourWord::from_string(s); };
  auto same_set = [](std::vector<ColourWord> got, std::vector<ColourWord> want) {
    return sorted_unique(std::move(got)) == sorted_unique(std::move(want));
  };
  bool ok = solver.type_of(ColourWord{}) == Outcome::N;
  ok = ok && solver.type_of(w("P")) == Outcome::P;
  ok = ok && same_set(colour_children(w("P")), {w("RP"), w("PB")});
  ok = ok && solver.type_of(w("RP")) == solver.type_of(w("PB"));
  const auto rp_children = colour_children(w("RP"));
  ok = ok && contains(rp_children, w("PP")) && contains(rp_children, w("RPB"));
  ok = ok && same_set(colour_children(w("PP")), {w("PBP"), w("RPB"), w("PRP")});
  ok = ok && solver.type_of(w("PBP")) == solver.type_of(w("PRP"));
  ok = ok && same_set(colour_children(w("RPB")), {w("RPP"), w("RRPB"), w("RPBB"), w("PPB")});
  ok = ok && solver.type_of(w("RPB")) == Outcome::P;
  return ok;
}

bool verify_reversal_symmetry(const GameParams& params) {
  if (params.a() != params.d()) throw InputError("reversal symmetry needs a == d");
  QSolver solver(params);
  for (const ColourWord& w : reachable_words(params)) {
    if (solver.type_of(w) != solver.type_of(w.reversed())) return false;
  }
  return true;
}

}  // namespace monseq
