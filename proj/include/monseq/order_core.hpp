#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monseq/deck.hpp"
#include "monseq/types.hpp"

namespace monseq {

// Length of a longest monotone subsequence of a board plus one witness
// (the witness lists element values in board order).
struct MonotoneRun {
  int length = 0;
  std::vector<int> witness;
};

// Longest chain increasing along board positions. Throws InputError if an
// element is outside the deck or repeated.
MonotoneRun longest_ascending(const Board& board, const Deck& deck);
MonotoneRun longest_descending(const Board& board, const Deck& deck);

// Throws InputError unless the board is a position that can arise in play:
// distinct deck elements and no proper prefix holding a critical sequence.
void validate_board(const Board& board, const Deck& deck, const GameParams& params);

// A simultaneous ascent and descent reports CriticalAscending.
BoardStatus board_status(const Board& board, const Deck& deck, const GameParams& params);

// Sufficient condition for draws to be impossible. A false result only means
// the criterion is not met.
bool no_draw_possible(const Deck& deck, const GameParams& params);

struct PosetSolveOptions {
  int max_elements = 10;
  std::uint64_t node_limit = 1'000'000'000;
};

// Exact type of the empty board on a finite poset. Memoized on the full board.
Outcome solve_poset(const FinitePoset& deck, const GameParams& params, const PosetSolveOptions& options = {});

// True iff some complete play uses the whole deck without a critical sequence.
bool draw_reachable(const FinitePoset& deck, const GameParams& params, const PosetSolveOptions& options = {});

enum class InvolutionFlavour : std::uint8_t { OrderPreserving, OrderReversing };

struct Involution {
  std::vector<int> image;

  // JSON object mapping element name to element name.
  static Involution from_json(const FinitePoset& deck, const std::string& text);
};

bool validate_involution(const FinitePoset& deck, const Involution& inv, InvolutionFlavour flavour);

// Second-player mirror strategy for normal play: an immediate win when one
// exists (smallest index first), otherwise the image of the opponent's last
// move. Throws StrategyError when it is not the second player's turn or the
// image is unavailable, InputError for an invalid involution.
int mirror_strategy(const FinitePoset& deck, const Involution& inv, InvolutionFlavour flavour, const Board& board,
                    const GameParams& params);

// Plays the mirror strategy as second player against every first-player line.
// Returns N if the first player can force a win, P if the strategist always
// wins, D otherwise.
Outcome evaluate_mirror_strategy(const FinitePoset& deck, const Involution& inv, InvolutionFlavour flavour,
                                 const GameParams& params, const PosetSolveOptions& options = {});

}  // namespace monseq
