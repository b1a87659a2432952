#include "monseq/order_core.hpp"

#include <algorithm>
#include <unordered_map>

#include <json.hpp>

#include "monseq/errors.hpp"

namespace monseq {

namespace {

void check_elements(const Board& board, const Deck& deck) {
  for (std::size_t i = 0; i < board.size(); ++i) {
    const int x = board.moves[i];
    if (!deck_contains(deck, x)) throw InputError("board element " + std::to_string(x) + " is not in the deck");
    for (std::size_t j = 0; j < i; ++j) {
      if (board.moves[j] == x) throw InputError("board element " + std::to_string(x) + " is played twice");
    }
  }
}

// Longest run ending at each position, O(m^2) so that partial orders work.
MonotoneRun longest_run(const Board& board, const Deck& deck, bool ascending) {
  check_elements(board, deck);
  const auto& v = board.moves;
  const std::size_t m = v.size();
  std::vector<int> len(m, 1);
  std::vector<int> prev(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const bool ok = ascending ? deck_less(deck, v[j], v[i]) : deck_less(deck, v[i], v[j]);
      if (ok && len[j] + 1 > len[i]) {
        len[i] = len[j] + 1;
        prev[i] = static_cast<int>(j);
      }
    }
  }
  MonotoneRun run;
  int best = -1;
  for (std::size_t i = 0; i < m; ++i) {
    if (best < 0 || len[i] > len[best]) best = static_cast<int>(i);
  }
  if (best < 0) return run;
  run.length = len[best];
  for (int i = best; i >= 0; i = prev[i]) run.witness.push_back(v[i]);
  std::reverse(run.witness.begin(), run.witness.end());
  return run;
}

// Incremental play on a small poset: tracks the longest ascent and descent
// ending at each played element.
class PosetPlay {
 public:
  static constexpr int kKeyLimit = 15;

  PosetPlay(const FinitePoset& deck, const GameParams& params, const PosetSolveOptions& options)
      : deck_(deck), params_(params), options_(options), asc_(deck.size(), 0), desc_(deck.size(), 0) {
    const int cap = std::min(options.max_elements, kKeyLimit);
    if (deck.size() > cap) {
      throw ResourceError("poset solver is capped at " + std::to_string(cap) + " elements (deck has " +
                          std::to_string(deck.size()) + ")");
    }
  }

  int size() const { return deck_.size(); }
  const GameParams& params() const { return params_; }
  bool played(int x) const { return (played_ >> x) & 1U; }
  bool exhausted() const { return static_cast<int>(board_.size()) == deck_.size(); }
  std::uint64_t key() const { return keys_.empty() ? 0 : keys_.back(); }
  const std::vector<int>& board() const { return board_; }

  // True if x completes a critical sequence on the current board.
  bool completes_critical(int x) const {
    auto [up, down] = run_lengths(x);
    return up >= params_.a() || down >= params_.d();
  }

  void place(int x) {
    auto [up, down] = run_lengths(x);
    asc_[x] = up;
    desc_[x] = down;
    board_.push_back(x);
    played_ |= std::uint64_t{1} << x;
    keys_.push_back(key() * 16 + static_cast<std::uint64_t>(x + 1));
  }

  void undo() {
    const int x = board_.back();
    board_.pop_back();
    keys_.pop_back();
    played_ &= ~(std::uint64_t{1} << x);
  }

  void count_node() {
    if (++nodes_ > options_.node_limit) {
      throw ResourceError("poset solver exceeded node limit " + std::to_string(options_.node_limit));
    }
  }

 private:
  std::pair<int, int> run_lengths(int x) const {
    int up = 1;
    int down = 1;
    for (int y : board_) {
      if (deck_.less(y, x)) up = std::max(up, asc_[y] + 1);
      if (deck_.less(x, y)) down = std::max(down, desc_[y] + 1);
    }
    return {up, down};
  }

  const FinitePoset& deck_;
  GameParams params_;
  PosetSolveOptions options_;
  std::vector<int> asc_;
  std::vector<int> desc_;
  std::vector<int> board_;
  std::vector<std::uint64_t> keys_;
  std::uint64_t played_ = 0;
  std::uint64_t nodes_ = 0;
};

Outcome solve_from(PosetPlay& play, std::unordered_map<std::uint64_t, Outcome>& memo) {
  if (auto it = memo.find(play.key()); it != memo.end()) return it->second;
  play.count_node();
  OutcomeFold fold;
  for (int x = 0; x < play.size(); ++x) {
    if (play.played(x)) continue;
    Outcome child;
    if (play.completes_critical(x)) {
      child = play.params().terminal_outcome();
    } else {
      play.place(x);
      child = play.exhausted() ? Outcome::D : solve_from(play, memo);
      play.undo();
    }
    if (fold.add(child)) break;
  }
  const Outcome result = fold.result();
  memo.emplace(play.key(), result);
  return result;
}

bool draw_from(PosetPlay& play, std::unordered_map<std::uint64_t, bool>& memo) {
  if (play.exhausted()) return true;
  if (auto it = memo.find(play.key()); it != memo.end()) return it->second;
  play.count_node();
  bool found = false;
  for (int x = 0; x < play.size() && !found; ++x) {
    if (play.played(x) || play.completes_critical(x)) continue;
    play.place(x);
    found = draw_from(play, memo);
    play.undo();
  }
  memo.emplace(play.key(), found);
  return found;
}

void require_valid(const FinitePoset& deck, const Involution& inv, InvolutionFlavour flavour) {
  if (!validate_involution(deck, inv, flavour)) {
    throw InputError("map is not a fixed-point-free involution of the requested flavour");
  }
}

}  // namespace

MonotoneRun longest_ascending(const Board& board, const Deck& deck) { return longest_run(board, deck, true); }

MonotoneRun longest_descending(const Board& board, const Deck& deck) { return longest_run(board, deck, false); }

void validate_board(const Board& board, const Deck& deck, const GameParams& params) {
  check_elements(board, deck);
  Board prefix;
  for (std::size_t i = 0; i + 1 < board.size(); ++i) {
    prefix.moves.push_back(board.moves[i]);
    if (longest_ascending(prefix, deck).length >= params.a() ||
        longest_descending(prefix, deck).length >= params.d()) {
      throw InputError("board continues after a critical sequence at move " + std::to_string(i + 1));
    }
  }
}

BoardStatus board_status(const Board& board, const Deck& deck, const GameParams& params) {
  validate_board(board, deck, params);
  if (longest_ascending(board, deck).length >= params.a()) return BoardStatus::CriticalAscending;
  if (longest_descending(board, deck).length >= params.d()) return BoardStatus::CriticalDescending;
  if (auto n = deck_size(deck); n && static_cast<int>(board.size()) == *n) return BoardStatus::DeckExhausted;
  return BoardStatus::Ongoing;
}

bool no_draw_possible(const Deck& deck, const GameParams& params) {
  const long long bound = static_cast<long long>(params.a() - 1) * (params.d() - 1);
  if (const auto* c = std::get_if<FiniteChain>(&deck)) return c->n > bound;
  if (const auto* p = std::get_if<FinitePoset>(&deck)) return p->height() > bound;
  return true;
}

Outcome solve_poset(const FinitePoset& deck, const GameParams& params, const PosetSolveOptions& options) {
  PosetPlay play(deck, params, options);
  if (deck.size() == 0) return Outcome::D;
  std::unordered_map<std::uint64_t, Outcome> memo;
  return solve_from(play, memo);
}

bool draw_reachable(const FinitePoset& deck, const GameParams& params, const PosetSolveOptions& options) {
  PosetPlay play(deck, params, options);
  std::unordered_map<std::uint64_t, bool> memo;
  return draw_from(play, memo);
}

Involution Involution::from_json(const FinitePoset& deck, const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("involution JSON does not parse: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("involution JSON must be an object mapping names to names");
  Involution inv;
  inv.image.assign(deck.size(), -1);
  for (const auto& [from, to] : doc.items()) {
    auto x = deck.index_of(from);
    auto y = deck.index_of(to.is_string() ? to.get<std::string>() : to.dump());
    if (!x || !y) throw InputError("involution names an element outside the poset");
    inv.image[*x] = *y;
  }
  return inv;
}

bool validate_involution(const FinitePoset& deck, const Involution& inv, InvolutionFlavour flavour) {
  const int n = deck.size();
  if (static_cast<int>(inv.image.size()) != n) return false;
  for (int x = 0; x < n; ++x) {
    const int y = inv.image[x];
    if (y < 0 || y >= n || y == x || inv.image[y] != x) return false;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!deck.less(x, y)) continue;
      const bool preserved = deck.less(inv.image[x], inv.image[y]);
      const bool reversed = deck.less(inv.image[y], inv.image[x]);
      if (flavour == InvolutionFlavour::OrderPreserving ? !preserved : !reversed) return false;
    }
  }
  if (flavour == InvolutionFlavour::OrderReversing) {
    for (int x = 0; x < n; ++x) {
      const int y = inv.image[x];
      if (!deck.comparable(x, y)) continue;
      const bool extremal = (deck.is_minimal(x) && deck.is_maximal(y)) || (deck.is_maximal(x) && deck.is_minimal(y));
      if (!extremal) return false;
    }
  }
  return true;
}

int mirror_strategy(const FinitePoset& deck, const Involution& inv, InvolutionFlavour flavour, const Board& board,
                    const GameParams& params) {
  require_valid(deck, inv, flavour);
  if (params.mode() != PlayMode::Normal) throw StrategyError("mirror strategies are defined for normal play only");
  if (board.empty()) throw StrategyError("mirror strategy is a second-player strategy; it cannot open the game");
  if (board.size() % 2 == 0) throw StrategyError("it is not the second player's turn");
  validate_board(board, deck, params);
  if (board_status(board, deck, params) != BoardStatus::Ongoing) throw StrategyError("the game is already over");

  std::vector<bool> used(deck.size(), false);
  for (int x : board.moves) used[x] = true;
  Board next = board;
  for (int x = 0; x < deck.size(); ++x) {
    if (used[x]) continue;
    next.moves.push_back(x);
    const bool wins = longest_ascending(next, deck).length >= params.a() ||
                      longest_descending(next, deck).length >= params.d();
    next.moves.pop_back();
    if (wins) return x;
  }
  const int reply = inv.image[board.moves.back()];
  if (used[reply]) throw StrategyError("mirror image '" + deck.name(reply) + "' is already on the board");
  return reply;
}

namespace {

// Value for the first player: 2 = forced win, 1 = draw, 0 = loss.
int mirror_value(PosetPlay& play, const Involution& inv, std::unordered_map<std::uint64_t, int>& memo) {
  if (auto it = memo.find(play.key()); it != memo.end()) return it->second;
  play.count_node();
  int best = 0;
  for (int x = 0; x < play.size() && best < 2; ++x) {
    if (play.played(x)) continue;
    int value;
    if (play.completes_critical(x)) {
      value = 2;
    } else {
      play.place(x);
      if (play.exhausted()) {
        value = 1;
      } else {
        // Strategist's reply: immediate win first, else the mirror image.
        int reply = -1;
        for (int y = 0; y < play.size(); ++y) {
          if (!play.played(y) && play.completes_critical(y)) {
            reply = y;
            break;
          }
        }
        if (reply >= 0) {
          value = 0;
        } else {
          reply = inv.image[x];
          if (play.played(reply)) throw InvariantError("mirror image already played; strategy is not total");
          play.place(reply);
          value = play.exhausted() ? 1 : mirror_value(play, inv, memo);
          play.undo();
        }
      }
      play.undo();
    }
    best = std::max(best, value);
  }
  memo.emplace(play.key(), best);
  return best;
}

}  // namespace

Outcome evaluate_mirror_strategy(const FinitePoset& deck, const Involution& inv, InvolutionFlavour flavour,
                                 const GameParams& params, const PosetSolveOptions& options) {
  require_valid(deck, inv, flavour);
  if (params.mode() != PlayMode::Normal) throw StrategyError("mirror strategies are defined for normal play only");
  PosetPlay play(deck, params, options);
  if (deck.size() == 0) return Outcome::D;
  std::unordered_map<std::uint64_t, int> memo;
  switch (mirror_value(play, inv, memo)) {
    case 2: return Outcome::N;
    case 1: return Outcome::D;
    default: return Outcome::P;
  }
}

}  // namespace monseq
