#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "monseq/bumping.hpp"
#include "monseq/memo_table.hpp"
#include "monseq/types.hpp"

namespace monseq {

// All words reachable by one move, sorted and deduplicated. Throws InputError
// for an inadmissible word.
std::vector<ColourWord> colour_children(const ColourWord& word);

bool is_terminal_q(const ColourWord& word, const GameParams& params);

struct QSolveOptions {
  // Forbid moves creating an ascent of a-1 or a descent of d-1 unless every
  // non-winning move does. Normal play only.
  bool forbid_suicide = false;
  std::uint64_t node_limit = 1'000'000'000;
  std::uint64_t memo_limit = 100'000'000;
};

struct QSolveReport {
  Outcome outcome = Outcome::D;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t memo_entries = 0;
  int max_depth = 0;
  std::chrono::duration<double> elapsed{};
};

// Memoized search over colour words. Aborts with InvariantError on a cycle or
// on a line longer than (a-1)(d-1)+1 moves.
class QSolver {
 public:
  explicit QSolver(const GameParams& params, const QSolveOptions& options = {});
  ~QSolver();
  QSolver(QSolver&&) noexcept;
  QSolver& operator=(QSolver&&) noexcept;

  // Type of the position with this colour word (terminal words included).
  Outcome type_of(const ColourWord& word);
  const GameParams& params() const { return params_; }
  std::uint64_t nodes_expanded() const { return nodes_; }
  std::uint64_t memo_entries() const;
  int max_depth() const { return max_depth_; }

 private:
  Outcome search(const ColourWord& word, int depth);

  GameParams params_;
  QSolveOptions options_;
  std::unique_ptr<OutcomeTable> memo_;
  std::vector<std::uint64_t> stack_;
  std::uint64_t nodes_ = 0;
  int max_depth_ = 0;
};

QSolveReport solve_q(const GameParams& params, const QSolveOptions& options = {});

// W_normal(a, d, Q) == W_misere(a-1, d-1, Q). Needs a, d >= 3.
bool duality_check(int a, int d);

// Every word reachable from the empty word, terminal words included (they are
// not expanded). Breadth-first order.
std::vector<ColourWord> reachable_words(const GameParams& params);

struct TypedNode {
  ColourWord word;
  Outcome type = Outcome::D;
  bool terminal = false;
  std::vector<ColourWord> children;
};

// Full typed reachable graph, for --dump-graph and the certificate checks.
std::vector<TypedNode> typed_graph(const GameParams& params);

std::vector<ColourWord> p4_set(int a);
std::vector<ColourWord> p5_set(int a);

struct CertificateStep {
  ColourWord position;
  bool in_set = false;
  // Child that is terminal or in the set (for members of a sufficient set:
  // the child being answered, see `reply`).
  std::optional<ColourWord> witness;
  std::optional<ColourWord> reply;
  bool ok = true;
  std::string note;
};

struct CertificateReport {
  bool ok = true;
  std::vector<CertificateStep> steps;
};

// Exact P-set: outside positions have a terminal or member child, members have none.
CertificateReport check_exact_pset(const std::vector<ColourWord>& set, const GameParams& params);
bool verify_exact_pset(const std::vector<ColourWord>& set, const GameParams& params);

// Sufficient P-set: P is a member; every child of a member has a terminal or
// member child; no member has a terminal child.
CertificateReport check_sufficient_pset(const std::vector<ColourWord>& set, const GameParams& params);
bool verify_sufficient_pset(const std::vector<ColourWord>& set, const GameParams& params);

// Recomputes the typed positions used by the symmetric-game argument.
bool verify_strategy_stealing_case(int a);

// Every reachable word has the same type as its reversal. Needs a == d.
bool verify_reversal_symmetry(const GameParams& params);

}  // namespace monseq
