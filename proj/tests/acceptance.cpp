// Acceptance checks, one verdict line per criterion. Exit status is nonzero
// when any criterion fails. Pass --full for the n = 20 and a <= 16 tiers.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "monseq/bumping.hpp"
#include "monseq/chain_solver.hpp"
#include "monseq/errors.hpp"
#include "monseq/extended_solver.hpp"
#include "monseq/golden.hpp"
#include "monseq/order_core.hpp"
#include "monseq/q_solver.hpp"
#include "oracles.hpp"

using namespace monseq;

namespace {

using Clock = std::chrono::steady_clock;

// Time budgets in seconds.
constexpr double kMisereQuickBudget = 60.0;
constexpr double kMisereFullBudget = 1800.0;
constexpr double kExtendedCaseBudget = 60.0;

struct Tier {
  bool full = false;
  int max_n() const { return full ? 20 : 12; }
  int normal_max_n() const { return full ? 20 : 16; }
  int max_a_computed() const { return full ? 16 : 10; }
  int max_d_computed() const { return full ? 8 : 6; }
};

// Collects failures for one criterion; the first few are echoed.
class Verdict {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) notes_ << "\n    mismatch: " << what;
  }
  void note(const std::string& s) { extra_ << "; " << s; }
  bool ok() const { return failures_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks, " << failures_ << " failed" << extra_.str() << notes_.str();
    return s.str();
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::ostringstream notes_;
  std::ostringstream extra_;
};

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string triple(int a, int d, int n, PlayMode mode) {
  return std::string(to_string(mode)) + " (" + std::to_string(a) + "," + std::to_string(d) + "," +
         std::to_string(n) + ")";
}

Outcome chain(int a, int d, int n, PlayMode mode = PlayMode::Normal) {
  return solve_chain(GameParams(a, d, mode), n).outcome;
}

Outcome from_oracle(oracle::Result r) {
  return r == oracle::Result::N ? Outcome::N : r == oracle::Result::P ? Outcome::P : Outcome::D;
}

void criterion_misere_table(const Tier& tier, Verdict& v) {
  const auto start = Clock::now();
  int cases = 0;
  for (const ChainResult& row : embedded_misere_table()) {
    if (row.n > tier.max_n()) continue;
    ++cases;
    v.expect(chain(row.a, row.d, row.n, row.mode) == row.outcome, triple(row.a, row.d, row.n, row.mode));
  }
  const double elapsed = since(start);
  const double budget = tier.full ? kMisereFullBudget : kMisereQuickBudget;
  v.expect(elapsed <= budget, "time budget");
  std::ostringstream s;
  s << cases << " table entries in " << elapsed << " s (budget " << budget << " s)";
  v.note(s.str());
}

void criterion_normal_results(const Tier& tier, Verdict& v) {
  for (int a = 2; a <= 7; ++a) {
    for (int n = 0; n <= 14; ++n) v.expect(chain(a, 2, n) == closed_form_d2(a, n), triple(a, 2, n, PlayMode::Normal));
  }
  for (int a = 3; a <= 7; ++a) {
    for (int n = 0; n <= 14; ++n) v.expect(chain(a, 3, n) == closed_form_d3(a, n), triple(a, 3, n, PlayMode::Normal));
  }
  for (const ChainResult& row : embedded_normal_results()) {
    if (row.d <= 3 || row.n > tier.normal_max_n()) continue;
    v.expect(chain(row.a, row.d, row.n) == row.outcome, triple(row.a, row.d, row.n, row.mode));
  }
  // Stated values, written out independently of the embedded table.
  const std::vector<std::tuple<int, int, int, Outcome>> stated{
      {5, 4, 10, Outcome::D}, {5, 4, 11, Outcome::N}, {6, 4, 14, Outcome::P}, {6, 4, 15, Outcome::P},
      {6, 4, 16, Outcome::N}, {5, 5, 14, Outcome::D}, {5, 5, 15, Outcome::N}, {5, 5, 16, Outcome::N},
      {7, 4, 15, Outcome::N}, {7, 4, 16, Outcome::N}, {7, 4, 17, Outcome::P}, {7, 4, 18, Outcome::N}};
  for (auto [a, d, n, want] : stated) v.expect(chain(a, d, n) == want, triple(a, d, n, PlayMode::Normal));
  for (int n = 9; n <= 16; ++n) v.expect(chain(4, 4, n) == Outcome::N, triple(4, 4, n, PlayMode::Normal));
}

void criterion_rationals(const Tier& tier, Verdict& v) {
  auto q = [](int a, int d, PlayMode mode = PlayMode::Normal) { return solve_q(GameParams(a, d, mode)).outcome; };
  for (int d = 2; d <= 5; ++d) {
    for (int a = d; a <= 12; ++a) {
      Outcome want = Outcome::N;
      if (d == 2) want = Outcome::P;
      if (d == 3) want = a % 2 == 1 ? Outcome::N : Outcome::P;
      v.expect(q(a, d) == want, "closed form (" + std::to_string(a) + "," + std::to_string(d) + ")");
    }
  }
  for (int d = 4; d <= tier.max_d_computed(); ++d) {
    for (int a = d; a <= tier.max_a_computed(); ++a) {
      v.expect(q(a, d) == Outcome::N, "computed (" + std::to_string(a) + "," + std::to_string(d) + ")");
    }
  }
  for (int a = 3; a <= 7; ++a) {
    for (int d = 3; d <= 7; ++d) v.expect(duality_check(a, d), "duality (" + std::to_string(a) + "," + std::to_string(d) + ")");
  }
  for (int a = 2; a <= 4; ++a) {
    for (int d = 2; d <= 4; ++d) {
      for (bool misere : {false, true}) {
        oracle::DenseGame brute(a, d, misere);
        v.expect(q(a, d, misere ? PlayMode::Misere : PlayMode::Normal) == from_oracle(brute.solve()),
                 "dense brute force (" + std::to_string(a) + "," + std::to_string(d) + ")");
      }
    }
  }
  v.note("d <= " + std::to_string(tier.max_d_computed()) + ", a <= " + std::to_string(tier.max_a_computed()));
}

void criterion_certificates(Verdict& v) {
  for (int a = 4; a <= 10; ++a) v.expect(verify_exact_pset(p4_set(a), GameParams(a, 4)), "p4 a=" + std::to_string(a));
  for (int a = 5; a <= 10; ++a) {
    v.expect(verify_sufficient_pset(p5_set(a), GameParams(a, 5)), "p5 a=" + std::to_string(a));
  }
  const auto p4 = p4_set(6);
  for (std::size_t i = 0; i < p4.size(); ++i) {
    auto cut = p4;
    cut.erase(cut.begin() + static_cast<std::ptrdiff_t>(i));
    v.expect(!verify_exact_pset(cut, GameParams(6, 4)), "p4 without " + p4[i].to_string() + " must fail");
  }
  const auto p5 = p5_set(6);
  for (std::size_t i = 0; i < p5.size(); ++i) {
    auto cut = p5;
    cut.erase(cut.begin() + static_cast<std::ptrdiff_t>(i));
    v.expect(!verify_sufficient_pset(cut, GameParams(6, 5)), "p5 without " + p5[i].to_string() + " must fail");
  }
}

void criterion_admissibility(Verdict& v) {
  const std::size_t counts[] = {1, 3, 8, 21, 55, 144};
  for (int k = 1; k <= 6; ++k) {
    std::size_t brute = 0;
    for (const auto& s : oracle::all_words(k)) brute += oracle::admissible(s) ? 1 : 0;
    v.expect(enumerate_admissible(k).size() == counts[k - 1], "count k=" + std::to_string(k));
    v.expect(brute == counts[k - 1], "brute count k=" + std::to_string(k));
  }
  std::set<std::string> realized;
  for (int m = 0; m <= 7; ++m) {
    for (const auto& perm : oracle::all_perms(m)) {
      const ColourWord w = colour_of(perm);
      realized.insert(w.to_string());
      if (!is_admissible(w) || w.reddish() != oracle::brute_lis(perm) || w.bluish() != oracle::brute_lds(perm)) {
        v.expect(false, "colour of a permutation of length " + std::to_string(m));
      }
    }
  }
  v.expect(true, "permutations up to length 7");
  for (int k = 0; k <= 4; ++k) {
    for (const auto& s : oracle::all_words(k)) {
      v.expect(is_admissible(ColourWord::from_string(s)) == (realized.count(s) == 1), "reachability of " + s);
    }
  }
  for (int k = 0; k <= 6; ++k) {
    std::set<std::string> codes;
    for (const auto& w : enumerate_admissible(k)) {
      const auto code = binary_encode(w);
      v.expect(code.find("11") == std::string::npos && codes.insert(code).second, "encoding of " + w.to_string());
    }
  }
}

void criterion_extended(Verdict& v) {
  for (auto [a, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {4, 3}, {3, 4}, {5, 3}}) {
    const auto start = Clock::now();
    const Outcome got = solve_extended(a, d).outcome;
    const double elapsed = since(start);
    const std::string id = "(" + std::to_string(a) + "," + std::to_string(d) + ")";
    v.expect(got == parity_outcome(a, d), "parity " + id);
    v.expect(elapsed <= kExtendedCaseBudget, "time " + id);
  }
  for (int r = 1; r <= 3; ++r) {
    for (int s = 1; s <= 3; ++s) {
      for (int m = 0; m <= 6 && m < r * s; ++m) {
        for (const auto& p : oracle::all_perms(m)) {
          if (oracle::brute_lis(p) > r || oracle::brute_lds(p) > s) continue;
          const auto slot = safe_slot(Perm(p), r, s);
          bool ok = slot.has_value();
          if (ok) {
            const auto next = oracle::insert_point(p, slot->index, slot->value);
            ok = oracle::brute_lis(next) <= r && oracle::brute_lds(next) <= s;
          }
          if (!ok) v.expect(false, "safe slot for " + Perm(p).to_string());
        }
      }
    }
  }
  v.expect(true, "safe slot scan");
  const auto start = Clock::now();
  const Outcome four = solve_extended(4, 4).outcome;
  v.expect(four == Outcome::P, "(4,4)");
  std::ostringstream s;
  s << "(4,4) = " << to_char(four) << " in " << since(start) << " s";
  v.note(s.str());
}

void criterion_posets(Verdict& v) {
  const FinitePoset cube = FinitePoset::boolean_lattice(3);
  v.expect(solve_poset(cube, GameParams(3, 3)) == Outcome::P, "cube outcome");
  v.expect(draw_reachable(cube, GameParams(3, 3)), "cube draw reachable");

  auto complement = [](const FinitePoset& p) {
    Involution inv;
    for (int i = 0; i < p.size(); ++i) inv.image.push_back((p.size() - 1) ^ i);
    return inv;
  };
  auto swap = [](int half) {
    Involution inv;
    for (int i = 0; i < 2 * half; ++i) inv.image.push_back(i < half ? i + half : i - half);
    return inv;
  };
  struct Case {
    std::string name;
    FinitePoset deck;
    Involution inv;
    InvolutionFlavour flavour;
  };
  std::vector<Case> cases;
  for (int k = 1; k <= 4; ++k) {
    cases.push_back({"two chains of " + std::to_string(k),
                     FinitePoset::disjoint_union(FinitePoset::chain(k), FinitePoset::chain(k)), swap(k),
                     InvolutionFlavour::OrderPreserving});
  }
  cases.push_back({"two squares", FinitePoset::disjoint_union(FinitePoset::boolean_lattice(2), FinitePoset::boolean_lattice(2)),
                   swap(4), InvolutionFlavour::OrderPreserving});
  cases.push_back({"antichain of 8", FinitePoset::antichain(8), swap(4), InvolutionFlavour::OrderPreserving});
  cases.push_back({"cube", cube, complement(cube), InvolutionFlavour::OrderReversing});
  cases.push_back({"square", FinitePoset::boolean_lattice(2), complement(FinitePoset::boolean_lattice(2)),
                   InvolutionFlavour::OrderReversing});
  int games = 0;
  for (const Case& c : cases) {
    v.expect(validate_involution(c.deck, c.inv, c.flavour), "involution for " + c.name);
    for (int a = 2; a <= 4; ++a) {
      for (int d = 2; d <= 4; ++d) {
        if (c.flavour == InvolutionFlavour::OrderReversing && a != d) continue;
        const Outcome o = evaluate_mirror_strategy(c.deck, c.inv, c.flavour, GameParams(a, d));
        v.expect(o != Outcome::N, c.name + " a=" + std::to_string(a) + " d=" + std::to_string(d));
        ++games;
      }
    }
  }
  v.note(std::to_string(games) + " strategy evaluations");
}

std::string state_key(const GapState& s) {
  std::string key = s.colour.to_string() + "|";
  for (int g : s.gaps) key += std::to_string(g) + ",";
  return key;
}

void criterion_properties(const Tier& tier, Verdict& v) {
  // Memo soundness against the board-level brute force.
  std::mt19937 rng(20240601);
  int pairs = 0;
  for (int round = 0; pairs < 1000 && round < 500; ++round) {
    const int a = 2 + static_cast<int>(rng() % 3);
    const int d = 2 + static_cast<int>(rng() % 3);
    const int n = 3 + static_cast<int>(rng() % 8);
    const bool misere = rng() % 2;
    oracle::ChainGame brute(a, d, misere, n);
    std::map<std::string, std::set<std::vector<int>>> buckets;
    for (int i = 0; i < 300; ++i) {
      std::vector<int> cards(n);
      for (int c = 0; c < n; ++c) cards[c] = c + 1;
      std::shuffle(cards.begin(), cards.end(), rng);
      std::vector<int> board;
      const int len = static_cast<int>(rng() % (n + 1));
      for (int k = 0; k < len; ++k) {
        board.push_back(cards[k]);
        if (oracle::brute_lis(board) >= a || oracle::brute_lds(board) >= d) break;
      }
      buckets[state_key(canonical_state(FiniteChain{n}, Board{board}))].insert(board);
    }
    for (const auto& [key, boards] : buckets) {
      for (auto it = boards.begin(); it != boards.end() && std::next(it) != boards.end() && pairs < 1000;
           std::advance(it, 2)) {
        v.expect(brute.solve(*it) == brute.solve(*std::next(it)), "memo soundness " + key);
        ++pairs;
      }
    }
  }
  v.expect(pairs == 1000, "1000 memo pairs");

  for (int a = 2; a <= 4; ++a) {
    for (int d = 2; d <= 4; ++d) {
      for (int n = (a - 1) * (d - 1) + 1; n <= 14; ++n) {
        for (PlayMode mode : {PlayMode::Normal, PlayMode::Misere}) {
          v.expect(chain(a, d, n, mode) != Outcome::D, "no draw " + triple(a, d, n, mode));
        }
      }
    }
  }
  for (int a = 2; a <= 5; ++a) {
    for (int d = 2; d <= 5; ++d) {
      for (int n = 0; n <= 12; ++n) {
        for (PlayMode mode : {PlayMode::Normal, PlayMode::Misere}) {
          v.expect(chain(a, d, n, mode) == chain(d, a, n, mode), "symmetry " + triple(a, d, n, mode));
          v.expect(verify_shift_implication(GameParams(a, d, mode), n), "shift " + triple(a, d, n, mode));
        }
      }
    }
  }
  // Shift implication on every tabulated triple whose successors are tabulated too.
  std::map<std::tuple<int, int, int, PlayMode>, Outcome> known;
  for (const auto& rows : {embedded_misere_table(), embedded_normal_results()}) {
    for (const auto& r : rows) {
      if (r.n <= tier.max_n() && r.outcome) known[{r.a, r.d, r.n, r.mode}] = *r.outcome;
    }
  }
  int shifts = 0;
  for (const auto& [k, o] : known) {
    auto [a, d, n, mode] = k;
    const auto up_a = known.find({a + 1, d, n + 1, mode});
    const auto up_d = known.find({a, d + 1, n + 1, mode});
    if (up_a == known.end() || up_d == known.end()) continue;
    const OutcomeLookup lookup = [&](const GameParams& p, int m) {
      return known.at({p.a(), p.d(), m, p.mode()});
    };
    v.expect(verify_shift_implication(GameParams(a, d, mode), n, lookup), "shift on table " + triple(a, d, n, mode));
    ++shifts;
  }
  for (int a = 2; a <= 4; ++a) {
    for (int d = 2; d <= 4; ++d) {
      for (int n = 0; n <= 14; ++n) {
        for (PlayMode mode : {PlayMode::Normal, PlayMode::Misere}) {
          const GameParams params(a, d, mode);
          const SolveReport exact = solve_chain(params, n);
          const SolveReport capped = solve_chain_capped(params, n);
          v.expect(exact.outcome == capped.outcome && exact.smallest_winning_move == capped.smallest_winning_move,
                   "capped " + triple(a, d, n, mode));
        }
      }
    }
  }
  for (int a = 2; a <= 6; ++a) {
    for (int d = 2; d <= 6; ++d) {
      for (PlayMode mode : {PlayMode::Normal, PlayMode::Misere}) {
        bool ok = true;
        try {
          const QSolveReport rep = solve_q(GameParams(a, d, mode));
          ok = rep.max_depth <= (a - 1) * (d - 1) + 1;
        } catch (const InvariantError&) {
          ok = false;
        }
        v.expect(ok, "q invariants (" + std::to_string(a) + "," + std::to_string(d) + ")");
      }
    }
  }
  v.note(std::to_string(pairs) + " memo pairs, " + std::to_string(shifts) + " tabulated shift checks");
}

}  // namespace

int main(int argc, char** argv) {
  Tier tier;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--full") == 0) {
      tier.full = true;
    } else {
      std::cerr << "usage: acceptance [--full]\n";
      return 2;
    }
  }
  std::cout << "tier: " << (tier.full ? "full" : "quick") << "\n";

  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
      {"1 misere golden table", [&](Verdict& v) { criterion_misere_table(tier, v); }},
      {"2 normal-play results", [&](Verdict& v) { criterion_normal_results(tier, v); }},
      {"3 rationals outcomes", [&](Verdict& v) { criterion_rationals(tier, v); }},
      {"4 P-set certificates", [](Verdict& v) { criterion_certificates(v); }},
      {"5 admissibility", [](Verdict& v) { criterion_admissibility(v); }},
      {"6 extended game", [](Verdict& v) { criterion_extended(v); }},
      {"7 poset cases", [](Verdict& v) { criterion_posets(v); }},
      {"8 property suites", [&](Verdict& v) { criterion_properties(tier, v); }},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    const auto start = Clock::now();
    try {
      check(v);
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (v.ok() ? "PASS" : "FAIL") << "  criterion " << name << "  [" << v.summary() << "; "
              << since(start) << " s]" << std::endl;
    failed += v.ok() ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
