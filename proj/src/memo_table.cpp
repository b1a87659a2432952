#include "monseq/memo_table.hpp"

#include <bit>
#include <string>

#include "monseq/errors.hpp"

namespace monseq {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t hash_key(const Key128& k) { return mix(k.lo ^ mix(k.hi + 0x9e3779b97f4a7c15ULL)); }

constexpr std::size_t kShards = 64;

}  // namespace

OutcomeTable::OutcomeTable(std::uint64_t entry_limit, std::size_t initial_capacity)
    : slots_(std::bit_ceil(std::max<std::size_t>(initial_capacity, 16))),
      mask_(slots_.size() - 1),
      entry_limit_(entry_limit) {}

std::size_t OutcomeTable::slot_of(const Key128& key) const { return hash_key(key) & mask_; }

std::optional<Outcome> OutcomeTable::find(const Key128& key) const {
  for (std::size_t i = slot_of(key);; i = (i + 1) & mask_) {
    const Key128& s = slots_[i];
    if (s.lo == 0 && s.hi == 0) return std::nullopt;
    if (s.lo == key.lo && (s.hi & kKeyMask) == key.hi) return static_cast<Outcome>(s.hi >> kValueShift);
  }
}

void OutcomeTable::insert(const Key128& key, Outcome value) {
  if ((key.hi & ~kKeyMask) != 0 || (key.lo == 0 && key.hi == 0)) {
    throw InvariantError("memo key uses reserved bits");
  }
  if ((size_ + 1) * 10 > slots_.size() * 7) grow();
  for (std::size_t i = slot_of(key);; i = (i + 1) & mask_) {
    Key128& s = slots_[i];
    if (s.lo == 0 && s.hi == 0) {
      if (size_ >= entry_limit_) {
        throw ResourceError("memo table exceeded its entry limit of " + std::to_string(entry_limit_));
      }
      s.lo = key.lo;
      s.hi = key.hi | (static_cast<std::uint64_t>(value) << kValueShift);
      ++size_;
      return;
    }
    if (s.lo == key.lo && (s.hi & kKeyMask) == key.hi) return;
  }
}

void OutcomeTable::grow() {
  std::vector<Key128> old(slots_.size() * 2);
  old.swap(slots_);
  mask_ = slots_.size() - 1;
  for (const Key128& s : old) {
    if (s.lo == 0 && s.hi == 0) continue;
    std::size_t i = hash_key(Key128{s.lo, s.hi & kKeyMask}) & mask_;
    while (slots_[i].lo != 0 || slots_[i].hi != 0) i = (i + 1) & mask_;
    slots_[i] = s;
  }
}

SharedOutcomeTable::SharedOutcomeTable(std::uint64_t entry_limit, bool concurrent) : concurrent_(concurrent) {
  const std::size_t count = concurrent ? kShards : 1;
  const std::uint64_t per_shard = concurrent ? entry_limit / count + 1 : entry_limit;
  for (std::size_t i = 0; i < count; ++i) shards_.push_back(std::make_unique<Shard>(per_shard));
}

std::size_t SharedOutcomeTable::shard_of(const Key128& key) const {
  return concurrent_ ? (hash_key(key) >> 58) % shards_.size() : 0;
}

std::optional<Outcome> SharedOutcomeTable::find(const Key128& key) const {
  const Shard& s = *shards_[shard_of(key)];
  if (!concurrent_) return s.table.find(key);
  std::lock_guard lock(s.mutex);
  return s.table.find(key);
}

void SharedOutcomeTable::insert(const Key128& key, Outcome value) {
  Shard& s = *shards_[shard_of(key)];
  if (!concurrent_) return s.table.insert(key, value);
  std::lock_guard lock(s.mutex);
  s.table.insert(key, value);
}

std::uint64_t SharedOutcomeTable::size() const {
  std::uint64_t total = 0;
  for (const auto& s : shards_) {
    if (concurrent_) {
      std::lock_guard lock(s->mutex);
      total += s->table.size();
    } else {
      total += s->table.size();
    }
  }
  return total;
}

}  // namespace monseq
