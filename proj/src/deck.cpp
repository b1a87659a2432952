#include "monseq/deck.hpp"

#include <algorithm>
#include <bit>

#include <json.hpp>

#include "monseq/errors.hpp"

namespace monseq {

FinitePoset::FinitePoset(std::vector<std::string> names, const std::vector<std::pair<int, int>>& less_than)
    : names_(std::move(names)) {
  const int n = size();
  if (n > kMaxElements) {
    throw InputError("poset has " + std::to_string(n) + " elements; at most " + std::to_string(kMaxElements) +
                     " are supported");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (names_[i] == names_[j]) throw InputError("duplicate poset element name '" + names_[i] + "'");
    }
  }
  below_.assign(n, 0);
  for (auto [x, y] : less_than) {
    if (x < 0 || x >= n || y < 0 || y >= n) throw InputError("poset relation refers to an unknown element");
    below_[y] |= std::uint64_t{1} << x;
  }
  // Warshall closure on bitmask rows.
  for (int k = 0; k < n; ++k) {
    for (int y = 0; y < n; ++y) {
      if ((below_[y] >> k) & 1U) below_[y] |= below_[k];
    }
  }
  above_.assign(n, 0);
  for (int y = 0; y < n; ++y) {
    if ((below_[y] >> y) & 1U) {
      throw InputError("poset relation is not a strict order: '" + names_[y] + "' lies below itself");
    }
    for (int x = 0; x < n; ++x) {
      if ((below_[y] >> x) & 1U) above_[x] |= std::uint64_t{1} << y;
    }
  }
}

FinitePoset FinitePoset::chain(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i) {
    names.push_back(std::to_string(i + 1));
    if (i > 0) rel.emplace_back(i - 1, i);
  }
  return FinitePoset(std::move(names), rel);
}

FinitePoset FinitePoset::antichain(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
  return FinitePoset(std::move(names), {});
}

FinitePoset FinitePoset::boolean_lattice(int k) {
  if (k < 0 || k > 6) throw InputError("boolean lattice rank must be in 0..6");
  const int n = 1 << k;
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> rel;
  for (int s = 0; s < n; ++s) {
    std::string name = "{";
    bool first = true;
    for (int b = 0; b < k; ++b) {
      if ((s >> b) & 1) {
        if (!first) name += ",";
        name += std::to_string(b + 1);
        first = false;
      }
    }
    names.push_back(name + "}");
    for (int b = 0; b < k; ++b) {
      if (!((s >> b) & 1)) rel.emplace_back(s, s | (1 << b));
    }
  }
  return FinitePoset(std::move(names), rel);
}

FinitePoset FinitePoset::disjoint_union(const FinitePoset& lower, const FinitePoset& upper) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> rel;
  const int off = lower.size();
  for (int x = 0; x < lower.size(); ++x) {
    names.push_back("a" + lower.name(x));
    for (int y = 0; y < lower.size(); ++y) {
      if (lower.less(x, y)) rel.emplace_back(x, y);
    }
  }
  for (int x = 0; x < upper.size(); ++x) {
    names.push_back("b" + upper.name(x));
    for (int y = 0; y < upper.size(); ++y) {
      if (upper.less(x, y)) rel.emplace_back(off + x, off + y);
    }
  }
  return FinitePoset(std::move(names), rel);
}

FinitePoset FinitePoset::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("poset JSON does not parse: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array()) {
    throw InputError("poset JSON needs an \"elements\" array");
  }
  std::vector<std::string> names;
  for (const auto& e : doc["elements"]) {
    names.push_back(e.is_string() ? e.get<std::string>() : e.dump());
  }
  auto lookup = [&](const nlohmann::json& e) {
    const std::string key = e.is_string() ? e.get<std::string>() : e.dump();
    auto it = std::find(names.begin(), names.end(), key);
    if (it == names.end()) throw InputError("poset relation names unknown element " + key);
    return static_cast<int>(it - names.begin());
  };
  std::vector<std::pair<int, int>> rel;
  if (doc.contains("less_than")) {
    for (const auto& pair : doc["less_than"]) {
      if (!pair.is_array() || pair.size() != 2) throw InputError("\"less_than\" entries must be [x, y] pairs");
      rel.emplace_back(lookup(pair[0]), lookup(pair[1]));
    }
  }
  return FinitePoset(std::move(names), rel);
}

std::string FinitePoset::to_json() const {
  nlohmann::json doc;
  doc["elements"] = names_;
  nlohmann::json rel = nlohmann::json::array();
  for (int x = 0; x < size(); ++x) {
    for (int y = 0; y < size(); ++y) {
      if (less(x, y)) rel.push_back({names_[x], names_[y]});
    }
  }
  doc["less_than"] = rel;
  return doc.dump();
}

int FinitePoset::height() const {
  // Longest chain ending at each element; process in a linear extension
  // (fewest elements below first).
  std::vector<int> order(size());
  for (int i = 0; i < size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return std::popcount(below_[x]) < std::popcount(below_[y]); });
  std::vector<int> best(size(), 1);
  int h = 0;
  for (int y : order) {
    for (int x = 0; x < size(); ++x) {
      if (less(x, y)) best[y] = std::max(best[y], best[x] + 1);
    }
    h = std::max(h, best[y]);
  }
  return h;
}

std::optional<int> FinitePoset::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

namespace {
template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;
}  // namespace

bool deck_contains(const Deck& deck, int x) {
  return std::visit(Overloaded{[x](const FiniteChain& c) { return x >= 1 && x <= c.n; },
                               [](const DenseOrder&) { return true; },
                               [x](const FinitePoset& p) { return x >= 0 && x < p.size(); }},
                    deck);
}

bool deck_less(const Deck& deck, int x, int y) {
  if (const auto* p = std::get_if<FinitePoset>(&deck)) return p->less(x, y);
  return x < y;
}

std::optional<int> deck_size(const Deck& deck) {
  return std::visit(Overloaded{[](const FiniteChain& c) -> std::optional<int> { return c.n; },
                               [](const DenseOrder&) -> std::optional<int> { return std::nullopt; },
                               [](const FinitePoset& p) -> std::optional<int> { return p.size(); }},
                    deck);
}

}  // namespace monseq
