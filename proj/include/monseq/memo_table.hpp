#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "monseq/types.hpp"

namespace monseq {

// 126 usable key bits; the top two bits of `hi` are reserved for the stored
// outcome. A key must never be all zero (zero marks an empty slot).
struct Key128 {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  friend bool operator==(const Key128&, const Key128&) = default;
};

// Open-addressing outcome table with linear probing. Not thread-safe.
class OutcomeTable {
 public:
  explicit OutcomeTable(std::uint64_t entry_limit, std::size_t initial_capacity = 1 << 12);

  std::optional<Outcome> find(const Key128& key) const;
  // Insert-if-absent. Throws ResourceError when the entry limit is reached.
  void insert(const Key128& key, Outcome value);
  std::uint64_t size() const { return size_; }

 private:
  static constexpr std::uint64_t kValueShift = 62;
  static constexpr std::uint64_t kKeyMask = (std::uint64_t{1} << kValueShift) - 1;

  std::size_t slot_of(const Key128& key) const;
  void grow();

  std::vector<Key128> slots_;
  std::size_t mask_;
  std::uint64_t size_ = 0;
  std::uint64_t entry_limit_;
};

// Outcome table usable from several workers: sharded, one mutex per shard.
// With a single shard and locking disabled it is a plain OutcomeTable.
class SharedOutcomeTable {
 public:
  SharedOutcomeTable(std::uint64_t entry_limit, bool concurrent);

  std::optional<Outcome> find(const Key128& key) const;
  void insert(const Key128& key, Outcome value);
  std::uint64_t size() const;

 private:
  struct Shard {
    explicit Shard(std::uint64_t limit) : table(limit) {}
    mutable std::mutex mutex;
    OutcomeTable table;
  };
  std::size_t shard_of(const Key128& key) const;

  bool concurrent_;
  std::vector<std::unique_ptr<Shard>> shards_;
};

}  // namespace monseq
