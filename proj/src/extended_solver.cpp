#include "monseq/extended_solver.hpp"

#include <algorithm>
#include <sstream>

#include "monseq/errors.hpp"
#include "monseq/memo_table.hpp"

namespace monseq {

Perm::Perm(std::vector<int> ranks) : ranks_(std::move(ranks)) {
  const int m = size();
  if (m > kMaxLength) throw InputError("patterns are limited to " + std::to_string(kMaxLength) + " points");
  std::vector<bool> seen(m + 1, false);
  for (int r : ranks_) {
    if (r < 1 || r > m || seen[r]) throw InputError("ranks must be a permutation of 1.." + std::to_string(m));
    seen[r] = true;
  }
}

Perm Perm::parse(const std::string& text) {
  std::vector<int> ranks;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      ranks.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("cannot read '" + item + "' as a rank");
    }
  }
  return Perm(std::move(ranks));
}

Perm Perm::inserted(int index, int value) const {
  const int m = size();
  if (index < 1 || index > m + 1 || value < 1 || value > m + 1) throw InputError("slot outside 1..m+1");
  std::vector<int> out;
  out.reserve(m + 1);
  for (int i = 0; i < m; ++i) {
    if (i == index - 1) out.push_back(value);
    out.push_back(ranks_[i] >= value ? ranks_[i] + 1 : ranks_[i]);
  }
  if (index == m + 1) out.push_back(value);
  Perm p;
  p.ranks_ = std::move(out);
  return p;
}

Perm Perm::reversed() const {
  Perm p = *this;
  std::reverse(p.ranks_.begin(), p.ranks_.end());
  return p;
}

Perm Perm::complemented() const {
  Perm p = *this;
  for (int& r : p.ranks_) r = size() + 1 - r;
  return p;
}

Perm Perm::inverse() const {
  Perm p = *this;
  for (int i = 0; i < size(); ++i) p.ranks_[ranks_[i] - 1] = i + 1;
  return p;
}

namespace {

// Patience sorting length.
int patience(const std::vector<int>& v, bool increasing) {
  std::vector<int> tops;
  for (int x : v) {
    const int key = increasing ? x : -x;
    auto it = std::lower_bound(tops.begin(), tops.end(), key);
    if (it == tops.end()) {
      tops.push_back(key);
    } else {
      *it = key;
    }
  }
  return static_cast<int>(tops.size());
}

}  // namespace

int Perm::longest_increasing() const { return patience(ranks_, true); }
int Perm::longest_decreasing() const { return patience(ranks_, false); }

std::string Perm::to_string() const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(ranks_[i]);
  }
  return s;
}

std::vector<Perm> extensions(const Perm& perm) {
  std::vector<Perm> out;
  for (int index = 1; index <= perm.size() + 1; ++index) {
    for (int value = 1; value <= perm.size() + 1; ++value) out.push_back(perm.inserted(index, value));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int Decomposition::longest_part() const {
  std::size_t best = 0;
  for (const auto& p : parts) best = std::max(best, p.size());
  return static_cast<int>(best);
}

std::vector<std::vector<int>> Decomposition::values(const Perm& perm) const {
  std::vector<std::vector<int>> out;
  for (const auto& part : parts) {
    std::vector<int> vals;
    for (int i : part) vals.push_back(perm[i]);
    out.push_back(std::move(vals));
  }
  return out;
}

namespace {

Decomposition greedy(const Perm& perm, Direction dir) {
  Decomposition dec;
  dec.direction = dir;
  for (int i = 0; i < perm.size(); ++i) {
    bool placed = false;
    for (auto& part : dec.parts) {
      const int last = perm[part.back()];
      if (dir == Direction::Increasing ? last < perm[i] : last > perm[i]) {
        part.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) dec.parts.push_back({i});
  }
  return dec;
}

}  // namespace

Decomposition greedy_increasing_decomposition(const Perm& perm) { return greedy(perm, Direction::Increasing); }
Decomposition greedy_decreasing_decomposition(const Perm& perm) { return greedy(perm, Direction::Decreasing); }

std::optional<Slot> safe_slot(const Perm& perm, int r, int s) {
  if (perm.size() >= Perm::kMaxLength) throw ResourceError("pattern too long to extend");
  for (int index = 1; index <= perm.size() + 1; ++index) {
    for (int value = 1; value <= perm.size() + 1; ++value) {
      const Perm next = perm.inserted(index, value);
      if (next.longest_increasing() <= r && next.longest_decreasing() <= s) return Slot{index, value};
    }
  }
  return std::nullopt;
}

Outcome parity_outcome(int a, int d) {
  const GameParams checked(a, d);
  return (checked.a() * checked.d()) % 2 == 1 ? Outcome::N : Outcome::P;
}

namespace {

Key128 pack(const Perm& p) {
  Key128 k;
  for (int i = 0; i < p.size(); ++i) k.lo |= static_cast<std::uint64_t>(p[i] - 1) << (4 * i);
  k.hi = static_cast<std::uint64_t>(p.size()) + 1;
  return k;
}

bool key_less(const Key128& x, const Key128& y) { return x.hi != y.hi ? x.hi < y.hi : x.lo < y.lo; }

class ExtendedSearch {
 public:
  ExtendedSearch(int a, int d, const ExtendedSolveOptions& options)
      : a_(a), d_(d), options_(options), memo_(options.memo_limit) {}

  bool terminal(const Perm& p) const { return p.longest_increasing() >= a_ || p.longest_decreasing() >= d_; }
  bool suicidal(const Perm& p) const {
    return p.longest_increasing() >= a_ - 1 || p.longest_decreasing() >= d_ - 1;
  }

  // Symmetries preserving both monotone lengths; with a == d also those swapping them.
  Key128 canonical(const Perm& p) const {
    const Perm rc = p.reversed().complemented();
    Key128 best = pack(p);
    auto consider = [&](const Perm& q) {
      const Key128 k = pack(q);
      if (key_less(k, best)) best = k;
    };
    consider(rc);
    consider(p.inverse());
    consider(rc.inverse());
    if (a_ == d_) {
      const Perm r = p.reversed();
      const Perm c = p.complemented();
      consider(r);
      consider(c);
      consider(r.inverse());
      consider(c.inverse());
    }
    return best;
  }

  std::vector<Perm> children(const Perm& p) const {
    std::vector<Perm> out;
    for (int index = 1; index <= p.size() + 1; ++index) {
      for (int value = 1; value <= p.size() + 1; ++value) {
        Perm q = p.inserted(index, value);
        if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
      }
    }
    return out;
  }

  // Normal play: a terminal child is a win for the mover.
  Outcome type_of(const Perm& p) {
    if (terminal(p)) return Outcome::P;
    const Key128 key = canonical(p);
    if (auto hit = memo_.find(key)) return *hit;
    if (++nodes_ > options_.node_limit) {
      throw ResourceError("extended solver exceeded node limit " + std::to_string(options_.node_limit));
    }
    const std::vector<Perm> kids = children(p);
    Outcome result;
    if (std::any_of(kids.begin(), kids.end(), [&](const Perm& c) { return terminal(c); })) {
      result = Outcome::N;
    } else {
      OutcomeFold fold;
      for (const Perm& c : kids) {
        if (fold.add(type_of(c))) break;
      }
      result = fold.result();
    }
    memo_.insert(key, result);
    return result;
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t memo_entries() const { return memo_.size(); }

 private:
  int a_;
  int d_;
  ExtendedSolveOptions options_;
  OutcomeTable memo_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ExtendedReport solve_extended(int a, int d, const ExtendedSolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const GameParams checked(a, d);
  const int longest = (checked.a() - 1) * (checked.d() - 1);
  if (longest > options.max_size) {
    throw ResourceError("extended game (" + std::to_string(a) + "," + std::to_string(d) + ") reaches " +
                        std::to_string(longest) + " points; the cap is " + std::to_string(options.max_size));
  }
  if (longest + 1 > Perm::kMaxLength) {
    throw ResourceError("extended game positions exceed the " + std::to_string(Perm::kMaxLength) + "-point limit");
  }
  ExtendedSearch search(a, d, options);
  ExtendedReport report;
  Perm position;
  report.outcome = search.type_of(position);

  // One optimal line: the winner moves to a P child, the loser avoids suicide when it can.
  report.principal_variation.push_back(position);
  while (!search.terminal(position)) {
    const std::vector<Perm> kids = search.children(position);
    const Outcome here = search.type_of(position);
    std::optional<Perm> next;
    for (const Perm& c : kids) {
      const bool fits = here == Outcome::N ? search.type_of(c) == Outcome::P : !search.suicidal(c);
      if (fits) {
        next = c;
        break;
      }
    }
    position = next ? *next : kids.front();
    report.principal_variation.push_back(position);
  }
  report.nodes_expanded = search.nodes();
  report.memo_entries = search.memo_entries();
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace monseq
