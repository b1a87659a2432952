#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace monseq {

// [n] = {1, ..., n} with the usual order.
struct FiniteChain {
  int n = 0;
};

// A dense linear order without endpoints (the rationals). Boards on it carry
// arbitrary distinct integers; only their relative order matters.
struct DenseOrder {};

// Finite partial order over elements 0..size()-1, stored as the full strict
// relation (transitive closure of whatever was supplied).
class FinitePoset {
 public:
  static constexpr int kMaxElements = 64;

  FinitePoset() = default;
  // Pairs are (smaller, larger) by element index. Throws InputError when the
  // closure is not irreflexive.
  FinitePoset(std::vector<std::string> names, const std::vector<std::pair<int, int>>& less_than);

  static FinitePoset chain(int n);
  static FinitePoset antichain(int n);
  // Subsets of {1..k} under inclusion; element i is the subset with bitmask i.
  static FinitePoset boolean_lattice(int k);
  // Elements of `lower` come first, then those of `upper`; no cross comparabilities.
  static FinitePoset disjoint_union(const FinitePoset& lower, const FinitePoset& upper);

  // {"elements": [...], "less_than": [[x, y], ...]}
  static FinitePoset from_json(const std::string& text);
  std::string to_json() const;

  int size() const { return static_cast<int>(names_.size()); }
  bool less(int x, int y) const { return (below_[y] >> x) & 1U; }
  bool comparable(int x, int y) const { return less(x, y) || less(y, x); }
  bool is_minimal(int x) const { return below_[x] == 0; }
  bool is_maximal(int x) const { return above_[x] == 0; }
  // Length of the longest chain.
  int height() const;

  const std::string& name(int x) const { return names_[x]; }
  std::optional<int> index_of(const std::string& name) const;

  // Bitmask of the elements strictly below / above x.
  std::uint64_t below_mask(int x) const { return below_[x]; }
  std::uint64_t above_mask(int x) const { return above_[x]; }

 private:
  std::vector<std::string> names_;
  std::vector<std::uint64_t> below_;
  std::vector<std::uint64_t> above_;
};

using Deck = std::variant<FiniteChain, DenseOrder, FinitePoset>;

bool deck_contains(const Deck& deck, int x);
bool deck_less(const Deck& deck, int x, int y);
// Number of elements, or nullopt for the dense order.
std::optional<int> deck_size(const Deck& deck);

// The cards played so far, in play order. Chain elements are card values,
// poset elements are indices, dense-order elements are arbitrary integers.
struct Board {
  std::vector<int> moves;

  std::size_t size() const { return moves.size(); }
  bool empty() const { return moves.empty(); }
  friend bool operator==(const Board&, const Board&) = default;
};

}  // namespace monseq
