#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monseq/types.hpp"

namespace monseq {

// Relative order of the chosen points: ranks[i] is the vertical rank of the
// i-th point from the left. Always a permutation of 1..size().
class Perm {
 public:
  static constexpr int kMaxLength = 16;

  Perm() = default;
  // Throws InputError unless ranks is a permutation of 1..m.
  explicit Perm(std::vector<int> ranks);
  // "2,1,3"; the empty string is the empty perm.
  static Perm parse(const std::string& text);

  int size() const { return static_cast<int>(ranks_.size()); }
  int operator[](int i) const { return ranks_[i]; }
  const std::vector<int>& ranks() const { return ranks_; }

  // New point at 1-based position `index` with 1-based value rank `value`.
  Perm inserted(int index, int value) const;

  Perm reversed() const;
  Perm complemented() const;
  Perm inverse() const;

  int longest_increasing() const;
  int longest_decreasing() const;

  std::string to_string() const;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> ranks_;
};

struct Slot {
  int index = 1;  // 1-based insertion position
  int value = 1;  // 1-based value rank
  friend bool operator==(const Slot&, const Slot&) = default;
};

// All distinct one-point extensions, sorted.
std::vector<Perm> extensions(const Perm& perm);

enum class Direction : std::uint8_t { Increasing, Decreasing };

struct Decomposition {
  Direction direction = Direction::Increasing;
  // Each part lists positions (0-based) of the perm, left to right.
  std::vector<std::vector<int>> parts;

  int part_count() const { return static_cast<int>(parts.size()); }
  int longest_part() const;
  // Values of each part, for display.
  std::vector<std::vector<int>> values(const Perm& perm) const;
};

// Left-to-right scan placing each point on the first part it extends.
Decomposition greedy_increasing_decomposition(const Perm& perm);
Decomposition greedy_decreasing_decomposition(const Perm& perm);

// First slot (index-major, then value) keeping LIS <= r and LDS <= s.
std::optional<Slot> safe_slot(const Perm& perm, int r, int s);

struct ExtendedSolveOptions {
  // Refuse games whose longest non-terminal position exceeds this many points.
  int max_size = 12;
  std::uint64_t node_limit = 1'000'000'000;
  std::uint64_t memo_limit = 100'000'000;
};

struct ExtendedReport {
  Outcome outcome = Outcome::D;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t memo_entries = 0;
  // Positions along one optimal line, starting with the empty perm.
  std::vector<Perm> principal_variation;
  std::chrono::duration<double> elapsed{};
};

// Normal play; moves choose both position and value.
ExtendedReport solve_extended(int a, int d, const ExtendedSolveOptions& options = {});

// N iff a*d is odd.
Outcome parity_outcome(int a, int d);

}  // namespace monseq
