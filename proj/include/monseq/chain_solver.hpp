#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "monseq/bumping.hpp"
#include "monseq/deck.hpp"
#include "monseq/types.hpp"

namespace monseq {

// Colour word of a board on [n] plus the number of unplayed cards in each of
// the k+1 intervals cut out by the recording values.
struct GapState {
  ColourWord colour;
  std::vector<int> gaps;

  friend bool operator==(const GapState&, const GapState&) = default;
};

// Throws InputError if a card is outside [n] or repeated.
GapState canonical_state(const FiniteChain& deck, const Board& board);

// 2 * C(x+y-2, x-1) - 1, saturating at UINT64_MAX.
std::uint64_t large_gap_bound(int x, int y);
// 2 * C(a+d-2, a-2) - 1.
std::uint64_t stabilization_bound(int a, int d);

struct ChainSolveOptions {
  // Replace gaps above their local large-gap bound by a single representative.
  bool capped = false;
  std::uint64_t node_limit = 1'000'000'000;
  std::uint64_t memo_limit = 100'000'000;
  int threads = 1;
};

struct SolveReport {
  Outcome outcome = Outcome::D;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t memo_entries = 0;
  // Present iff outcome == N.
  std::optional<int> smallest_winning_move;
  std::chrono::duration<double> elapsed{};
};

// Exact type of the empty board of (a, d, [n]). Throws ResourceError when a cap is hit.
SolveReport solve_chain(const GameParams& params, int n, const ChainSolveOptions& options = {});
// solve_chain with gap normalization switched on.
SolveReport solve_chain_capped(const GameParams& params, int n, ChainSolveOptions options = {});

// Type of an arbitrary legal board on [n] (terminal boards included).
Outcome solve_chain_position(const GameParams& params, int n, const Board& board,
                             const ChainSolveOptions& options = {});

// Known closed forms for normal play; misere is rejected with InputError.
Outcome closed_form_d2(int a, int n, PlayMode mode = PlayMode::Normal);
Outcome closed_form_d3(int a, int n, PlayMode mode = PlayMode::Normal);

using OutcomeLookup = std::function<Outcome(const GameParams&, int n)>;

// W(a,d,n) = P implies W(a+1,d,n+1) = N and W(a,d+1,n+1) = N.
bool verify_shift_implication(const GameParams& params, int n, const OutcomeLookup& lookup);
bool verify_shift_implication(const GameParams& params, int n);

}  // namespace monseq
