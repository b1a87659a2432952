#include "monseq/types.hpp"

#include "monseq/errors.hpp"

namespace monseq {

char to_char(Outcome o) {
  switch (o) {
    case Outcome::N: return 'N';
    case Outcome::P: return 'P';
    case Outcome::D: return 'D';
  }
  return '?';
}

std::optional<Outcome> parse_outcome(std::string_view s) {
  if (s == "N") return Outcome::N;
  if (s == "P") return Outcome::P;
  if (s == "D") return Outcome::D;
  return std::nullopt;
}

std::string_view to_string(PlayMode m) { return m == PlayMode::Normal ? "normal" : "misere"; }

std::optional<PlayMode> parse_mode(std::string_view s) {
  if (s == "normal") return PlayMode::Normal;
  if (s == "misere") return PlayMode::Misere;
  return std::nullopt;
}

std::string_view to_string(BoardStatus s) {
  switch (s) {
    case BoardStatus::Ongoing: return "ongoing";
    case BoardStatus::CriticalAscending: return "critical-ascending";
    case BoardStatus::CriticalDescending: return "critical-descending";
    case BoardStatus::DeckExhausted: return "deck-exhausted";
  }
  return "?";
}

GameParams::GameParams(int a, int d, PlayMode mode) : a_(a), d_(d), mode_(mode) {
  if (a < 2 || d < 2) {
    throw InputError("critical lengths must satisfy a >= 2 and d >= 2 (got a=" + std::to_string(a) +
                     ", d=" + std::to_string(d) + ")");
  }
}

}  // namespace monseq
