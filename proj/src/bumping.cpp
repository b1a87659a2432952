#include "monseq/bumping.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "monseq/errors.hpp"

namespace monseq {

char to_char(Colour c) {
  switch (c) {
    case Colour::B: return 'B';
    case Colour::P: return 'P';
    case Colour::R: return 'R';
  }
  return '?';
}

ColourWord ColourWord::from_string(std::string_view letters) {
  if (static_cast<int>(letters.size()) > kMaxLength) {
    throw InputError("colour word longer than " + std::to_string(kMaxLength) + " letters");
  }
  ColourWord w;
  for (char ch : letters) {
    switch (ch) {
      case 'R': w.push_back(Colour::R); break;
      case 'B': w.push_back(Colour::B); break;
      case 'P': w.push_back(Colour::P); break;
      default: throw InputError(std::string("colour words use only R, B, P; got '") + ch + "'");
    }
  }
  return w;
}

ColourWord ColourWord::from_key(std::uint64_t key) {
  ColourWord w;
  w.size_ = static_cast<std::uint8_t>(key >> 58);
  w.bits_ = key & ((std::uint64_t{1} << 58) - 1);
  return w;
}

void ColourWord::set(int i, Colour c) {
  bits_ &= ~(std::uint64_t{3} << (2 * i));
  bits_ |= static_cast<std::uint64_t>(c) << (2 * i);
}

void ColourWord::insert(int i, Colour c) {
  if (size_ >= kMaxLength) throw ResourceError("colour word exceeds " + std::to_string(kMaxLength) + " letters");
  const std::uint64_t low_mask = (std::uint64_t{1} << (2 * i)) - 1;
  const std::uint64_t low = bits_ & low_mask;
  const std::uint64_t high = bits_ & ~low_mask;
  bits_ = low | (static_cast<std::uint64_t>(c) << (2 * i)) | (high << 2);
  ++size_;
}

void ColourWord::erase(int i) {
  const std::uint64_t low_mask = (std::uint64_t{1} << (2 * i)) - 1;
  const std::uint64_t low = bits_ & low_mask;
  const std::uint64_t high = (bits_ >> 2) & ~low_mask;
  bits_ = low | high;
  --size_;
}

namespace {
constexpr std::uint64_t kLowBits = 0x5555555555555555ULL;
}  // namespace

int ColourWord::reddish() const {
  // Any nonzero letter code (P or R) is reddish.
  return std::popcount((bits_ | (bits_ >> 1)) & kLowBits);
}

int ColourWord::bluish() const {
  // Code 2 is R, the only non-bluish letter.
  return size_ - std::popcount((bits_ >> 1) & kLowBits);
}

ColourWord ColourWord::reversed() const {
  ColourWord w;
  for (int i = size_ - 1; i >= 0; --i) {
    const Colour c = (*this)[i];
    w.push_back(c == Colour::R ? Colour::B : c == Colour::B ? Colour::R : Colour::P);
  }
  return w;
}

std::string ColourWord::to_string() const {
  std::string s;
  s.reserve(size_);
  for (int i = 0; i < size_; ++i) s += to_char((*this)[i]);
  return s;
}

std::strong_ordering operator<=>(const ColourWord& x, const ColourWord& y) {
  const int common = std::min(x.size(), y.size());
  for (int i = 0; i < common; ++i) {
    if (auto c = x[i] <=> y[i]; c != 0) return c;
  }
  return x.size() <=> y.size();
}

ColourWord RecordingSequence::colour() const {
  ColourWord w;
  for (const auto& e : entries) w.push_back(e.colour());
  return w;
}

std::string RecordingSequence::to_string() const {
  std::string s;
  for (const auto& e : entries) {
    if (!s.empty()) s += ' ';
    s += std::to_string(e.value);
    if (e.over) s += '^';
    if (e.under) s += '_';
  }
  return s;
}

RecordingSequence double_bump_step(const RecordingSequence& rec, int value) {
  RecordingSequence next = rec;
  auto& es = next.entries;
  auto pos = std::lower_bound(es.begin(), es.end(), value,
                              [](const RecordingEntry& e, int v) { return e.value < v; });
  if (pos != es.end() && pos->value == value) {
    throw InputError("value " + std::to_string(value) + " was already processed");
  }
  const auto at = static_cast<std::size_t>(pos - es.begin());
  es.insert(pos, RecordingEntry{value, true, true});
  for (std::size_t i = at + 1; i < es.size(); ++i) {
    if (es[i].over) {
      es[i].over = false;
      break;
    }
  }
  for (std::size_t i = at; i-- > 0;) {
    if (es[i].under) {
      es[i].under = false;
      break;
    }
  }
  std::erase_if(es, [](const RecordingEntry& e) { return !e.over && !e.under; });
  return next;
}

std::vector<RecordingSequence> double_bump_trace(std::span<const int> values) {
  std::vector<RecordingSequence> trace;
  RecordingSequence rec;
  for (int v : values) {
    rec = double_bump_step(rec, v);
    trace.push_back(rec);
  }
  return trace;
}

RecordingSequence double_bump(std::span<const int> values) {
  RecordingSequence rec;
  for (int v : values) rec = double_bump_step(rec, v);
  return rec;
}

ColourWord colour_of(std::span<const int> values) { return double_bump(values).colour(); }

bool is_admissible(const ColourWord& w) {
  if (w.empty()) return true;
  if (w[0] == Colour::B || w[w.size() - 1] == Colour::R) return false;
  bool has_purple = false;
  for (int i = 0; i < w.size(); ++i) {
    has_purple = has_purple || w[i] == Colour::P;
    if (i + 1 < w.size() && w[i] == Colour::R && w[i + 1] == Colour::B) return false;
  }
  return has_purple;
}

namespace {

void extend_admissible(ColourWord& prefix, int k, std::vector<ColourWord>& out) {
  if (prefix.size() == k) {
    if (is_admissible(prefix)) out.push_back(prefix);
    return;
  }
  for (Colour c : {Colour::B, Colour::P, Colour::R}) {
    if (prefix.empty() && c == Colour::B) continue;
    if (c == Colour::B && !prefix.empty() && prefix[prefix.size() - 1] == Colour::R) continue;
    prefix.push_back(c);
    extend_admissible(prefix, k, out);
    prefix.erase(prefix.size() - 1);
  }
}

}  // namespace

std::vector<ColourWord> enumerate_admissible(int k) {
  if (k < 0) throw InputError("word length must be non-negative");
  if (k > ColourWord::kMaxLength) throw ResourceError("word length exceeds the supported maximum");
  std::vector<ColourWord> out;
  ColourWord prefix;
  extend_admissible(prefix, k, out);
  return out;
}

std::string binary_encode(const ColourWord& word) {
  std::string bits;
  bits.reserve(2 * word.size());
  for (int i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case Colour::R: bits += "01"; break;
      case Colour::B: bits += "10"; break;
      case Colour::P: bits += "00"; break;
    }
  }
  return bits;
}

PurpleInsertion insert_purple_unchecked(const ColourWord& word, int position) {
  PurpleInsertion out{word, std::nullopt, std::nullopt};
  ColourWord& w = out.word;
  w.insert(position, Colour::P);
  // Above first: deleting there leaves lower indices untouched.
  for (int i = position + 1; i < w.size(); ++i) {
    if (w[i] == Colour::R) {
      w.erase(i);
      out.deleted_above = i;
      break;
    }
    if (w[i] == Colour::P) {
      w.set(i, Colour::B);
      break;
    }
  }
  for (int i = position - 1; i >= 0; --i) {
    if (w[i] == Colour::B) {
      w.erase(i);
      out.deleted_below = i;
      break;
    }
    if (w[i] == Colour::P) {
      w.set(i, Colour::R);
      break;
    }
  }
  return out;
}

ColourWord insert_purple(const ColourWord& word, int position) {
  if (!is_admissible(word)) throw InputError("colour word " + word.to_string() + " is not admissible");
  if (position < 0 || position > word.size()) {
    throw InputError("insertion position " + std::to_string(position) + " outside 0.." + std::to_string(word.size()));
  }
  return insert_purple_unchecked(word, position).word;
}

}  // namespace monseq
