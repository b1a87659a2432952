#include "monseq/chain_solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <string>
#include <thread>

#include "monseq/errors.hpp"
#include "monseq/memo_table.hpp"
#include "monseq/order_core.hpp"

namespace monseq {

namespace {

constexpr int kMaxGaps = ColourWord::kMaxLength + 1;
constexpr int kMaxCards = 255;

struct Node {
  ColourWord word;
  std::array<std::uint8_t, kMaxGaps> gaps{};
  int remaining = 0;

  int gap_count() const { return word.size() + 1; }
};

class KeyWriter {
 public:
  void put(std::uint64_t bits, int count) {
    if (used_ + count > 126) overflow_ = true;
    if (overflow_) return;
    for (int i = 0; i < count; ++i, ++used_) {
      if ((bits >> i) & 1U) {
        if (used_ < 64) {
          key_.lo |= std::uint64_t{1} << used_;
        } else {
          key_.hi |= std::uint64_t{1} << (used_ - 64);
        }
      }
    }
  }
  void put_ones(int count) {
    while (count >= 32) {
      put(0xffffffffULL, 32);
      count -= 32;
    }
    put((std::uint64_t{1} << count) - 1, count);
  }
  bool overflow() const { return overflow_; }
  const Key128& key() const { return key_; }

 private:
  Key128 key_;
  int used_ = 0;
  bool overflow_ = false;
};

// Each gap in unary followed by its letter; a final 1 marks the end.
Key128 encode(const Node& node) {
  KeyWriter w;
  const int k = node.word.size();
  for (int i = 0; i <= k; ++i) {
    w.put_ones(node.gaps[i]);
    w.put(0, 1);
    if (i < k) w.put(static_cast<std::uint64_t>(node.word[i]), 2);
  }
  w.put(1, 1);
  if (w.overflow()) {
    throw ResourceError("chain state does not fit the 126-bit memo key (" + std::to_string(node.remaining) +
                        " cards, word length " + std::to_string(k) + ")");
  }
  return w.key();
}

Node make_node(const GapState& state) {
  if (state.gaps.size() != static_cast<std::size_t>(state.colour.size() + 1)) {
    throw InputError("gap state needs exactly one more gap than letters");
  }
  Node node;
  node.word = state.colour;
  for (std::size_t i = 0; i < state.gaps.size(); ++i) {
    if (state.gaps[i] < 0 || state.gaps[i] > kMaxCards) throw InputError("gap size out of range");
    node.gaps[i] = static_cast<std::uint8_t>(state.gaps[i]);
    node.remaining += state.gaps[i];
  }
  if (node.remaining > kMaxCards) throw ResourceError("chain solver supports at most 255 cards");
  return node;
}

// Plays the card at `offset` (0-based) inside gap `gap`.
Node play(const Node& node, int gap, int offset) {
  const PurpleInsertion ins = insert_purple_unchecked(node.word, gap);
  Node child;
  child.word = ins.word;
  child.remaining = node.remaining - 1;
  // Gaps of the word right after the P was inserted.
  std::array<std::uint8_t, kMaxGaps + 1> g{};
  const int k = node.word.size();
  for (int i = 0; i < gap; ++i) g[i] = node.gaps[i];
  g[gap] = static_cast<std::uint8_t>(offset);
  g[gap + 1] = static_cast<std::uint8_t>(node.gaps[gap] - 1 - offset);
  for (int i = gap + 1; i <= k; ++i) g[i + 1] = node.gaps[i];
  int count = k + 2;
  auto merge = [&](int letter) {
    g[letter] = static_cast<std::uint8_t>(g[letter] + g[letter + 1]);
    for (int i = letter + 1; i + 1 < count; ++i) g[i] = g[i + 1];
    --count;
  };
  if (ins.deleted_above) merge(*ins.deleted_above);
  if (ins.deleted_below) merge(*ins.deleted_below);
  for (int i = 0; i < count; ++i) child.gaps[i] = g[i];
  return child;
}

class ChainSearch {
 public:
  ChainSearch(const GameParams& params, const ChainSolveOptions& options, SharedOutcomeTable& memo,
              std::atomic<std::uint64_t>& nodes)
      : params_(params), options_(options), memo_(memo), nodes_(nodes) {}

  bool is_critical(const Node& node) const {
    return node.word.reddish() >= params_.a() || node.word.bluish() >= params_.d();
  }

  // Type of a position reached by a move (terminal positions included).
  Outcome child_outcome(Node child) {
    if (is_critical(child)) return params_.terminal_outcome();
    if (child.remaining == 0) return Outcome::D;
    if (options_.capped) normalize(child);
    return solve(child);
  }

  Outcome solve(const Node& node) {
    const Key128 key = encode(node);
    if (auto hit = memo_.find(key)) return *hit;
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > options_.node_limit) {
      throw ResourceError("chain solver exceeded node limit " + std::to_string(options_.node_limit));
    }
    OutcomeFold fold;
    bool done = false;
    for (int gap = 0; gap < node.gap_count() && !done; ++gap) {
      for (int offset = 0; offset < node.gaps[gap] && !done; ++offset) {
        done = fold.add(child_outcome(play(node, gap, offset)));
      }
    }
    const Outcome result = fold.result();
    memo_.insert(key, result);
    return result;
  }

  // Gap i gets the bound for the residual game (a - reddish below, d - bluish above).
  void normalize(Node& node) const {
    const int k = node.word.size();
    int reddish_below = 0;
    int bluish_above = node.word.bluish();
    for (int i = 0; i <= k; ++i) {
      const std::uint64_t bound = large_gap_bound(params_.a() - reddish_below, params_.d() - bluish_above);
      if (bound < kMaxCards && node.gaps[i] > bound) {
        node.remaining -= static_cast<int>(node.gaps[i] - (bound + 1));
        node.gaps[i] = static_cast<std::uint8_t>(bound + 1);
      }
      if (i < k) {
        reddish_below += is_reddish(node.word[i]);
        bluish_above -= is_bluish(node.word[i]);
      }
    }
  }

 private:
  GameParams params_;
  ChainSolveOptions options_;
  SharedOutcomeTable& memo_;
  std::atomic<std::uint64_t>& nodes_;
};

struct RootMove {
  int gap;
  int offset;
  int card;
};

}  // namespace

GapState canonical_state(const FiniteChain& deck, const Board& board) {
  std::vector<bool> used(static_cast<std::size_t>(deck.n) + 1, false);
  for (int x : board.moves) {
    if (x < 1 || x > deck.n) throw InputError("card " + std::to_string(x) + " is not in [" + std::to_string(deck.n) + "]");
    if (used[x]) throw InputError("card " + std::to_string(x) + " is played twice");
    used[x] = true;
  }
  const RecordingSequence rec = double_bump(board.moves);
  GapState state;
  state.colour = rec.colour();
  state.gaps.assign(rec.entries.size() + 1, 0);
  std::size_t slot = 0;
  for (int card = 1; card <= deck.n; ++card) {
    while (slot < rec.entries.size() && rec.entries[slot].value < card) ++slot;
    if (!used[card]) ++state.gaps[slot];
  }
  return state;
}

std::uint64_t large_gap_bound(int x, int y) {
  if (x < 1 || y < 1) throw InputError("large gap bound needs x, y >= 1");
  // C(x+y-2, x-1) via the multiplicative formula, saturating.
  const int top = x + y - 2;
  const int k = std::min(x - 1, y - 1);
  unsigned __int128 c = 1;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned>(top - k + i) / static_cast<unsigned>(i);
    if (c > kMax / 2) return kMax;
  }
  return static_cast<std::uint64_t>(2 * c - 1);
}

std::uint64_t stabilization_bound(int a, int d) {
  const GameParams checked(a, d);
  const int top = checked.a() + checked.d() - 2;
  const int k = std::min(a - 2, top - (a - 2));
  unsigned __int128 c = 1;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned>(top - k + i) / static_cast<unsigned>(i);
    if (c > kMax / 2) return kMax;
  }
  return static_cast<std::uint64_t>(2 * c - 1);
}

SolveReport solve_chain(const GameParams& params, int n, const ChainSolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (n < 0) throw InputError("deck size must be non-negative");
  if (n > kMaxCards) throw ResourceError("chain solver supports at most 255 cards");
  if (options.threads < 1) throw InputError("thread count must be at least 1");
  SolveReport report;
  if (n < std::min(params.a(), params.d())) {
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
  }

  const bool concurrent = options.threads > 1;
  SharedOutcomeTable memo(options.memo_limit, concurrent);
  std::atomic<std::uint64_t> nodes{0};
  const Node root = make_node(GapState{ColourWord{}, {n}});

  std::vector<RootMove> moves;
  for (int offset = 0; offset < n; ++offset) moves.push_back({0, offset, offset + 1});
  std::vector<Outcome> results(moves.size(), Outcome::D);

  if (!concurrent) {
    ChainSearch search(params, options, memo, nodes);
    OutcomeFold fold;
    for (std::size_t i = 0; i < moves.size(); ++i) {
      const Outcome o = search.child_outcome(play(root, moves[i].gap, moves[i].offset));
      if (fold.add(o)) {
        report.smallest_winning_move = moves[i].card;
        break;
      }
    }
    report.outcome = fold.result();
  } else {
    // Workers pull root moves in order; results are folded in card order so
    // the answer does not depend on scheduling.
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_win{moves.size()};
    std::vector<char> evaluated(moves.size(), 0);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      ChainSearch search(params, options, memo, nodes);
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= moves.size() || i > first_win.load()) return;
        try {
          results[i] = search.child_outcome(play(root, moves[i].gap, moves[i].offset));
          evaluated[i] = 1;
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          first_win.store(0);
          return;
        }
        if (results[i] == Outcome::P) {
          std::size_t cur = first_win.load();
          while (i < cur && !first_win.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < options.threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    OutcomeFold fold;
    for (std::size_t i = 0; i < moves.size(); ++i) {
      if (!evaluated[i]) throw InvariantError("parallel root split skipped a move before the first win");
      if (fold.add(results[i])) {
        report.smallest_winning_move = moves[i].card;
        break;
      }
    }
    report.outcome = fold.result();
  }
  report.nodes_expanded = nodes.load();
  report.memo_entries = memo.size();
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

SolveReport solve_chain_capped(const GameParams& params, int n, ChainSolveOptions options) {
  options.capped = true;
  return solve_chain(params, n, options);
}

Outcome solve_chain_position(const GameParams& params, int n, const Board& board, const ChainSolveOptions& options) {
  const FiniteChain deck{n};
  const BoardStatus status = board_status(board, deck, params);
  if (status == BoardStatus::CriticalAscending || status == BoardStatus::CriticalDescending) {
    return params.terminal_outcome();
  }
  if (status == BoardStatus::DeckExhausted) return Outcome::D;
  SharedOutcomeTable memo(options.memo_limit, false);
  std::atomic<std::uint64_t> nodes{0};
  ChainSearch search(params, options, memo, nodes);
  Node node = make_node(canonical_state(deck, board));
  if (options.capped) search.normalize(node);
  return search.solve(node);
}

Outcome closed_form_d2(int a, int n, PlayMode mode) {
  if (mode != PlayMode::Normal) throw InputError("the d = 2 closed form covers normal play only");
  if (a < 2) throw InputError("closed form needs a >= 2");
  if (n < a) return Outcome::D;
  return a % 2 == 1 ? Outcome::N : Outcome::P;
}

Outcome closed_form_d3(int a, int n, PlayMode mode) {
  if (mode != PlayMode::Normal) throw InputError("the d = 3 closed form covers normal play only");
  if (a < 3) throw InputError("closed form needs a >= 3");
  const bool wins = a % 2 == 0 ? n > a : n > a + 1;
  return wins ? Outcome::N : Outcome::D;
}

bool verify_shift_implication(const GameParams& params, int n, const OutcomeLookup& lookup) {
  if (lookup(params, n) != Outcome::P) return true;
  const GameParams taller(params.a() + 1, params.d(), params.mode());
  const GameParams deeper(params.a(), params.d() + 1, params.mode());
  return lookup(taller, n + 1) == Outcome::N && lookup(deeper, n + 1) == Outcome::N;
}

bool verify_shift_implication(const GameParams& params, int n) {
  return verify_shift_implication(params, n,
                                  [](const GameParams& p, int size) { return solve_chain(p, size).outcome; });
}

}  // namespace monseq
