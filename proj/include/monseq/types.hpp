#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace monseq {

enum class Outcome : std::uint8_t { N, P, D };

enum class PlayMode : std::uint8_t { Normal, Misere };

enum class BoardStatus : std::uint8_t { Ongoing, CriticalAscending, CriticalDescending, DeckExhausted };

char to_char(Outcome o);
std::optional<Outcome> parse_outcome(std::string_view s);

std::string_view to_string(PlayMode m);
std::optional<PlayMode> parse_mode(std::string_view s);

std::string_view to_string(BoardStatus s);

// Critical lengths plus termination rule. a, d >= 2 is enforced on construction.
class GameParams {
 public:
  GameParams(int a, int d, PlayMode mode = PlayMode::Normal);

  int a() const { return a_; }
  int d() const { return d_; }
  PlayMode mode() const { return mode_; }

  // Same game with the roles of ascending and descending exchanged.
  GameParams swapped() const { return GameParams(d_, a_, mode_); }

  // Type of a board that just completed a critical sequence.
  Outcome terminal_outcome() const { return mode_ == PlayMode::Normal ? Outcome::P : Outcome::N; }

  friend bool operator==(const GameParams&, const GameParams&) = default;

 private:
  int a_;
  int d_;
  PlayMode mode_;
};

// Three-valued combination of child types: a P child makes the parent N,
// all-N children make it P, anything else is D.
class OutcomeFold {
 public:
  // Returns true once the parent is known to be N (no further children matter).
  bool add(Outcome child) {
    if (child == Outcome::P) {
      found_p_ = true;
    } else if (child == Outcome::D) {
      all_n_ = false;
    }
    return found_p_;
  }
  Outcome result() const {
    if (found_p_) return Outcome::N;
    return all_n_ ? Outcome::P : Outcome::D;
  }

 private:
  bool found_p_ = false;
  bool all_n_ = true;
};

}  // namespace monseq
