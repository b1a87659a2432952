#include <doctest.h>

#include <map>
#include <random>

#include "monseq/chain_solver.hpp"
#include "monseq/errors.hpp"
#include "monseq/order_core.hpp"
#include "oracles.hpp"

using namespace monseq;

namespace {

Outcome from_oracle(oracle::Result r) {
  return r == oracle::Result::N ? Outcome::N : r == oracle::Result::P ? Outcome::P : Outcome::D;
}

Outcome solve(int a, int d, int n, PlayMode mode = PlayMode::Normal) {
  return solve_chain(GameParams(a, d, mode), n).outcome;
}

std::string state_key(const GapState& s) {
  std::string key = s.colour.to_string() + "|";
  for (int g : s.gaps) key += std::to_string(g) + ",";
  return key;
}

// Random legal board on [n]; stops at a random length or at the first critical move.
std::vector<int> random_board(std::mt19937& rng, int a, int d, int n) {
  std::vector<int> cards(n);
  for (int i = 0; i < n; ++i) cards[i] = i + 1;
  std::shuffle(cards.begin(), cards.end(), rng);
  const int len = static_cast<int>(rng() % (n + 1));
  std::vector<int> board;
  for (int i = 0; i < len; ++i) {
    board.push_back(cards[i]);
    if (oracle::brute_lis(board) >= a || oracle::brute_lds(board) >= d) break;
  }
  return board;
}

}  // namespace

TEST_CASE("canonical state") {
  const GapState full = canonical_state(FiniteChain{6}, Board{{5, 1, 4, 2, 6, 3}});
  CHECK(full.colour.to_string() == "RRPBB");
  CHECK(full.gaps == std::vector<int>{0, 0, 0, 0, 0, 0});

  const GapState empty = canonical_state(FiniteChain{7}, Board{});
  CHECK(empty.colour.size() == 0);
  CHECK(empty.gaps == std::vector<int>{7});

  CHECK(canonical_state(FiniteChain{20}, Board{{10, 5, 20}}) == canonical_state(FiniteChain{20}, Board{{10, 20, 5}}));

  // Gaps count unplayed cards, not value differences: 2 leaves the recording
  // sequence of 2,3,1 yet is no longer available.
  const GapState s = canonical_state(FiniteChain{6}, Board{{2, 3, 1}});
  CHECK(s.colour.to_string() == "PP");
  CHECK(s.gaps == std::vector<int>{0, 0, 3});

  CHECK_THROWS_AS(canonical_state(FiniteChain{4}, Board{{5}}), InputError);
  CHECK_THROWS_AS(canonical_state(FiniteChain{4}, Board{{2, 2}}), InputError);
}

TEST_CASE("gap sums match the unplayed cards") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto board = random_board(rng, 5, 5, n);
    const GapState s = canonical_state(FiniteChain{n}, Board{board});
    CHECK(s.gaps.size() == static_cast<std::size_t>(s.colour.size() + 1));
    int total = 0;
    for (int g : s.gaps) total += g;
    CHECK(total == n - static_cast<int>(board.size()));
  }
}

TEST_CASE("large gap bound") {
  for (int x = 1; x <= 10; ++x) {
    CHECK(large_gap_bound(x, 1) == 1);
    CHECK(large_gap_bound(1, x) == 1);
  }
  CHECK(large_gap_bound(2, 2) == 3);
  CHECK(large_gap_bound(3, 3) == 11);
  for (int x = 2; x <= 12; ++x) {
    for (int y = 2; y <= 12; ++y) {
      CHECK(large_gap_bound(x, y) == large_gap_bound(x - 1, y) + large_gap_bound(x, y - 1) + 1);
    }
  }
  CHECK(large_gap_bound(60, 60) == UINT64_MAX);
}

TEST_CASE("stabilization bound") {
  CHECK(stabilization_bound(4, 4) == 29);
  CHECK(stabilization_bound(2, 2) == 1);
  for (int a = 2; a <= 12; ++a) CHECK(stabilization_bound(a, 2) == static_cast<std::uint64_t>(a * (a - 1) - 1));
}

TEST_CASE("solver examples") {
  CHECK(solve(5, 4, 11) == Outcome::N);
  CHECK(solve(5, 4, 10) == Outcome::D);
  CHECK(solve(6, 4, 14) == Outcome::P);
  CHECK(solve(6, 4, 15) == Outcome::P);
  CHECK(solve(6, 4, 16) == Outcome::N);
  CHECK(solve(3, 3, 4, PlayMode::Misere) == Outcome::N);
  CHECK(solve(4, 4, 7, PlayMode::Misere) == Outcome::P);
  CHECK(solve(8, 4, 15, PlayMode::Misere) == Outcome::D);
  CHECK(solve(2, 2, 0) == Outcome::D);
  CHECK(solve(3, 4, 2) == Outcome::D);
}

TEST_CASE("smallest winning move is reported exactly for N") {
  for (int a = 2; a <= 4; ++a) {
    for (int d = 2; d <= 4; ++d) {
      for (int n = 0; n <= 9; ++n) {
        const GameParams params(a, d);
        const SolveReport rep = solve_chain(params, n);
        CHECK(rep.smallest_winning_move.has_value() == (rep.outcome == Outcome::N));
        if (!rep.smallest_winning_move) continue;
        const int m = *rep.smallest_winning_move;
        CHECK(solve_chain_position(params, n, Board{{m}}) == Outcome::P);
        for (int c = 1; c < m; ++c) CHECK(solve_chain_position(params, n, Board{{c}}) != Outcome::P);
      }
    }
  }
}

TEST_CASE("solver agrees with the brute-force chain game") {
  for (int a = 2; a <= 4; ++a) {
    for (int d = 2; d <= 4; ++d) {
      for (int n = 0; n <= 9; ++n) {
        for (bool misere : {false, true}) {
          oracle::ChainGame brute(a, d, misere, n);
          CAPTURE(a);
          CAPTURE(d);
          CAPTURE(n);
          CHECK(solve(a, d, n, misere ? PlayMode::Misere : PlayMode::Normal) == from_oracle(brute.solve({})));
        }
      }
    }
  }
}

TEST_CASE("equal gap states have equal brute-force outcomes") {
  std::mt19937 rng(2024);
  int pairs = 0;
  int attempts = 0;
  while (pairs < 1000 && attempts < 200) {
    ++attempts;
    const int a = 2 + static_cast<int>(rng() % 3);
    const int d = 2 + static_cast<int>(rng() % 3);
    const int n = 3 + static_cast<int>(rng() % 8);
    const bool misere = rng() % 2;
    const GameParams params(a, d, misere ? PlayMode::Misere : PlayMode::Normal);
    oracle::ChainGame brute(a, d, misere, n);
    std::map<std::string, std::vector<std::vector<int>>> buckets;
    for (int i = 0; i < 300; ++i) {
      const auto board = random_board(rng, a, d, n);
      buckets[state_key(canonical_state(FiniteChain{n}, Board{board}))].push_back(board);
    }
    for (auto& [key, boards] : buckets) {
      std::sort(boards.begin(), boards.end());
      boards.erase(std::unique(boards.begin(), boards.end()), boards.end());
      for (std::size_t i = 0; i + 1 < boards.size() && pairs < 1000; i += 2) {
        const auto x = brute.solve(boards[i]);
        const auto y = brute.solve(boards[i + 1]);
        CAPTURE(key);
        CHECK(x == y);
        CHECK(solve_chain_position(params, n, Board{boards[i]}) == from_oracle(x));
        ++pairs;
      }
    }
  }
  CHECK(pairs == 1000);
}

TEST_CASE("closed forms") {
  CHECK(closed_form_d2(3, 2) == Outcome::D);
  CHECK(closed_form_d2(3, 5) == Outcome::N);
  CHECK(closed_form_d2(4, 6) == Outcome::P);
  CHECK(closed_form_d3(4, 5) == Outcome::N);
  CHECK(closed_form_d3(5, 6) == Outcome::D);
  CHECK(closed_form_d3(5, 7) == Outcome::N);
  CHECK_THROWS_AS(closed_form_d2(3, 5, PlayMode::Misere), InputError);
  CHECK_THROWS_AS(closed_form_d3(3, 5, PlayMode::Misere), InputError);
  for (int a = 2; a <= 7; ++a) {
    for (int n = 0; n <= 14; ++n) CHECK(solve(a, 2, n) == closed_form_d2(a, n));
  }
  for (int a = 3; a <= 6; ++a) {
    for (int n = 0; n <= 14; ++n) CHECK(solve(a, 3, n) == closed_form_d3(a, n));
  }
}

TEST_CASE("(4,4) is a first player win from n = 9") {
  for (int n = 9; n <= 16; ++n) CHECK(solve(4, 4, n) == Outcome::N);
}

TEST_CASE("no draws on long decks") {
  for (int a = 2; a <= 4; ++a) {
    for (int d = 2; d <= 4; ++d) {
      for (int n = (a - 1) * (d - 1) + 1; n <= 14; ++n) {
        CHECK(solve(a, d, n) != Outcome::D);
        CHECK(solve(a, d, n, PlayMode::Misere) != Outcome::D);
      }
    }
  }
}

TEST_CASE("swapping the critical lengths preserves the outcome") {
  for (int a = 2; a <= 5; ++a) {
    for (int d = a + 1; d <= 5; ++d) {
      for (int n = 0; n <= 12; ++n) {
        for (PlayMode mode : {PlayMode::Normal, PlayMode::Misere}) CHECK(solve(a, d, n, mode) == solve(d, a, n, mode));
      }
    }
  }
}

TEST_CASE("shift implication") {
  CHECK(verify_shift_implication(GameParams(6, 4), 14));
  CHECK(verify_shift_implication(GameParams(5, 4), 11));
  CHECK(verify_shift_implication(GameParams(4, 3, PlayMode::Misere), 5));
  CHECK(solve(4, 3, 5, PlayMode::Misere) == Outcome::P);
  const OutcomeLookup liar = [](const GameParams& p, int n) {
    if (p.a() == 2 && p.d() == 2 && n == 2) return Outcome::P;
    return Outcome::D;
  };
  CHECK_FALSE(verify_shift_implication(GameParams(2, 2), 2, liar));
  CHECK(verify_shift_implication(GameParams(2, 2), 3, liar));
  for (int a = 2; a <= 5; ++a) {
    for (int d = 2; d <= 5; ++d) {
      for (int n = 0; n <= 11; ++n) {
        CHECK(verify_shift_implication(GameParams(a, d), n));
        CHECK(verify_shift_implication(GameParams(a, d, PlayMode::Misere), n));
      }
    }
  }
}

TEST_CASE("capped search equals exact search") {
  for (int a = 2; a <= 4; ++a) {
    for (int d = 2; d <= 4; ++d) {
      for (int n = 0; n <= 14; ++n) {
        for (PlayMode mode : {PlayMode::Normal, PlayMode::Misere}) {
          const GameParams params(a, d, mode);
          const SolveReport exact = solve_chain(params, n);
          const SolveReport capped = solve_chain_capped(params, n);
          CAPTURE(a);
          CAPTURE(d);
          CAPTURE(n);
          CHECK(capped.outcome == exact.outcome);
          CHECK(capped.smallest_winning_move == exact.smallest_winning_move);
        }
      }
    }
  }
}

TEST_CASE("capped search stabilizes") {
  const auto bound = static_cast<int>(stabilization_bound(3, 2));
  for (int n = bound; n <= bound + 20; ++n) CHECK(solve_chain_capped(GameParams(3, 2), n).outcome == Outcome::N);
  const SolveReport big = solve_chain_capped(GameParams(3, 3), 200);
  const SolveReport bigger = solve_chain_capped(GameParams(3, 3), 250);
  CHECK(big.outcome == bigger.outcome);
  CHECK(big.nodes_expanded == bigger.nodes_expanded);
}

TEST_CASE("parallel root split is deterministic") {
  for (int threads : {2, 3, 4}) {
    for (auto [a, d, n, mode] : std::vector<std::tuple<int, int, int, PlayMode>>{
             {4, 4, 7, PlayMode::Misere}, {5, 4, 11, PlayMode::Normal}, {4, 3, 9, PlayMode::Normal},
             {5, 3, 8, PlayMode::Misere}, {3, 3, 3, PlayMode::Normal}}) {
      ChainSolveOptions one;
      ChainSolveOptions many;
      many.threads = threads;
      const SolveReport x = solve_chain(GameParams(a, d, mode), n, one);
      const SolveReport y = solve_chain(GameParams(a, d, mode), n, many);
      CHECK(x.outcome == y.outcome);
      CHECK(x.smallest_winning_move == y.smallest_winning_move);
    }
  }
}

TEST_CASE("resource caps") {
  ChainSolveOptions nodes;
  nodes.node_limit = 10;
  CHECK_THROWS_AS(solve_chain(GameParams(4, 4), 10, nodes), ResourceError);
  ChainSolveOptions memo;
  memo.memo_limit = 10;
  CHECK_THROWS_AS(solve_chain(GameParams(4, 4), 10, memo), ResourceError);
  CHECK_THROWS_AS(solve_chain(GameParams(3, 3), -1), InputError);
}

TEST_CASE("positions") {
  const GameParams params(3, 3);
  CHECK(solve_chain_position(params, 5, Board{{1, 2, 3}}) == Outcome::P);
  CHECK(solve_chain_position(GameParams(3, 3, PlayMode::Misere), 5, Board{{1, 2, 3}}) == Outcome::N);
  CHECK(solve_chain_position(params, 2, Board{{1, 2}}) == Outcome::D);
  CHECK_THROWS_AS(solve_chain_position(params, 5, Board{{1, 2, 3, 4}}), InputError);
}
