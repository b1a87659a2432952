#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace monseq {

// Letter codes are ordered B < P < R so that numeric order is lexicographic order.
enum class Colour : std::uint8_t { B = 0, P = 1, R = 2 };

inline bool is_reddish(Colour c) { return c != Colour::B; }
inline bool is_bluish(Colour c) { return c != Colour::R; }
char to_char(Colour c);

// Word over {R, B, P}, packed two bits per letter. Letter 0 sits in the low bits.
class ColourWord {
 public:
  static constexpr int kMaxLength = 28;

  ColourWord() = default;
  // Throws InputError on letters outside {R, B, P} or overlong input.
  static ColourWord from_string(std::string_view letters);
  // Inverse of key().
  static ColourWord from_key(std::uint64_t key);

  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  Colour operator[](int i) const { return static_cast<Colour>((bits_ >> (2 * i)) & 3U); }

  void set(int i, Colour c);
  void insert(int i, Colour c);
  void erase(int i);
  void push_back(Colour c) { insert(size_, c); }

  int reddish() const;
  int bluish() const;

  // Order reversal: reverse the letters and exchange R with B.
  ColourWord reversed() const;

  // Unique 64-bit identity (letters plus length).
  std::uint64_t key() const { return bits_ | (static_cast<std::uint64_t>(size_) << 58); }

  std::string to_string() const;

  friend bool operator==(const ColourWord& x, const ColourWord& y) { return x.key() == y.key(); }
  // Lexicographic with B < P < R; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const ColourWord& x, const ColourWord& y);

 private:
  std::uint64_t bits_ = 0;
  std::uint8_t size_ = 0;
};

struct RecordingEntry {
  int value = 0;
  bool over = false;   // member of the ascending frontier
  bool under = false;  // member of the descending frontier

  Colour colour() const { return over ? (under ? Colour::P : Colour::R) : Colour::B; }
  friend bool operator==(const RecordingEntry&, const RecordingEntry&) = default;
};

// Merged Schensted state: entries sorted by value, none of them naked.
struct RecordingSequence {
  std::vector<RecordingEntry> entries;

  ColourWord colour() const;
  // e.g. "1^ 2^ 3^_ 4_ 6_" with ^ for an overline and _ for an underline.
  std::string to_string() const;
  friend bool operator==(const RecordingSequence&, const RecordingSequence&) = default;
};

// Inserts value with both marks, strips the first overline above it and the
// first underline below it, then drops naked entries. Throws InputError on a
// repeated value.
RecordingSequence double_bump_step(const RecordingSequence& rec, int value);
RecordingSequence double_bump(std::span<const int> values);
// Every intermediate recording sequence, one per processed value.
std::vector<RecordingSequence> double_bump_trace(std::span<const int> values);
ColourWord colour_of(std::span<const int> values);

bool is_admissible(const ColourWord& word);
// All admissible words of length k in lexicographic order (B < P < R).
std::vector<ColourWord> enumerate_admissible(int k);
// R -> 01, B -> 10, P -> 00.
std::string binary_encode(const ColourWord& word);

// Result of inserting a Purple: the final word plus which letters were deleted,
// indexed in the word as it stood right after the P was inserted.
struct PurpleInsertion {
  ColourWord word;
  std::optional<int> deleted_above;
  std::optional<int> deleted_below;
};

// No admissibility check; position must be in 0..size().
PurpleInsertion insert_purple_unchecked(const ColourWord& word, int position);
// Throws InputError for an inadmissible word or out-of-range position.
ColourWord insert_purple(const ColourWord& word, int position);

}  // namespace monseq

template <>
struct std::hash<monseq::ColourWord> {
  std::size_t operator()(const monseq::ColourWord& w) const noexcept { return std::hash<std::uint64_t>{}(w.key()); }
};
