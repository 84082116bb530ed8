#include "seedlang/subshift.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>

#include <nlohmann/json.hpp>

#include "seedlang/laser.hpp"

namespace seedlang {

int max_enumerable_margin(int k) {
  if (k <= 1) return 15;
  if (k == 2) return 8;
  return 6;
}

bool GeneratingSet::contains(const Seed& tile) const {
  return std::binary_search(tiles.begin(), tiles.end(), tile);
}

bool compatible(std::span<const Seed> tiles, int margin, int k) {
  if (margin < 0) throw std::invalid_argument("margin must be non-negative");
  if (static_cast<int>(tiles.size()) != k) throw std::invalid_argument("compatibility takes exactly k tiles");
  for (const auto& tile : tiles) {
    if (tile.length() != static_cast<std::size_t>(margin) + 1) {
      throw std::invalid_argument("tile '" + tile.str() + "' does not have length margin + 1");
    }
  }
  return sh_k_capped(tiles, margin + 1) <= margin;
}

namespace {

std::uint64_t full_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

// OR of any k factors with repetition equals the OR of at most k distinct ones.
bool some_cover(std::span<const std::uint64_t> factors, std::size_t from, int remaining, std::uint64_t acc,
                std::uint64_t full) {
  if (acc == full) return true;
  if (remaining == 0) return false;
  for (std::size_t i = from; i < factors.size(); ++i) {
    if (some_cover(factors, i + 1, remaining - 1, acc | factors[i], full)) return true;
  }
  return false;
}

}  // namespace

bool valid_factor_check(const Seed& seed, int margin, int k) {
  if (margin < 0) throw std::invalid_argument("margin must be non-negative");
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (margin + 1 > 64) throw ResourceLimitError("factor check supports margins below 64");
  const int width = margin + 1;
  const std::string padded = std::string(static_cast<std::size_t>(margin), kJoker) + seed.str() +
                             std::string(static_cast<std::size_t>(margin), kJoker);
  std::vector<std::uint64_t> factors{0};  // -^{margin+1}
  for (std::size_t start = 0; start + static_cast<std::size_t>(width) <= padded.size(); ++start) {
    std::uint64_t mask = 0;
    for (int j = 0; j < width; ++j) {
      if (padded[start + static_cast<std::size_t>(j)] == kMatch) mask |= std::uint64_t{1} << j;
    }
    factors.push_back(mask);
  }
  std::sort(factors.begin(), factors.end());
  factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
  return !some_cover(factors, 0, k, 0, full_mask(width));
}

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : size_(n), words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }
  Bits without(const Bits& o) const {
    Bits r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::size_t size_;
  std::vector<std::uint64_t> words_;
};

void check_parameters(int margin, int k) {
  if (margin < 0) throw std::invalid_argument("margin must be non-negative");
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (margin > max_enumerable_margin(k)) {
    throw ResourceLimitError("enumerating (" + std::to_string(margin) + "," + std::to_string(k) +
                             ")-generating sets is beyond the supported bound (margin <= " +
                             std::to_string(max_enumerable_margin(k)) + " for k = " + std::to_string(k) + ")");
  }
}

std::vector<Seed> all_words(int length) {
  std::vector<Seed> words;
  const std::uint64_t count = std::uint64_t{1} << length;
  words.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    words.push_back(Seed::from_mask(mask, static_cast<std::size_t>(length)));
  }
  std::sort(words.begin(), words.end());
  return words;
}

std::vector<Seed> self_compatible_tiles(int margin, int k) {
  std::vector<Seed> candidates;
  for (auto& word : all_words(margin + 1)) {
    const std::vector<Seed> copies(static_cast<std::size_t>(k), word);
    if (compatible(copies, margin, k)) candidates.push_back(std::move(word));
  }
  return candidates;
}

GeneratingSet make_set(int margin, int k, std::vector<Seed> tiles) {
  std::sort(tiles.begin(), tiles.end());
  return GeneratingSet{margin, k, std::move(tiles)};
}

// Tomita-style Bron-Kerbosch with pivoting.
class CliqueSearch {
 public:
  using Visit = std::function<void(const std::vector<std::size_t>&)>;

  CliqueSearch(std::vector<Bits> adjacency, Visit visit)
      : adjacency_(std::move(adjacency)), visit_(std::move(visit)) {}

  void run() {
    const std::size_t n = adjacency_.size();
    Bits all(n);
    for (std::size_t i = 0; i < n; ++i) all.set(i);
    std::vector<std::size_t> clique;
    expand(clique, all, Bits(n));
  }

 private:
  void expand(std::vector<std::size_t>& clique, Bits candidates, Bits excluded) {
    if (candidates.none()) {
      if (excluded.none()) visit_(clique);
      return;
    }
    std::size_t pivot = 0;
    std::size_t pivot_degree = 0;
    bool have_pivot = false;
    (candidates | excluded).for_each([&](std::size_t u) {
      const std::size_t degree = (candidates & adjacency_[u]).count();
      if (!have_pivot || degree > pivot_degree) {
        pivot = u;
        pivot_degree = degree;
        have_pivot = true;
      }
    });
    std::vector<std::size_t> branch;
    candidates.without(adjacency_[pivot]).for_each([&](std::size_t v) { branch.push_back(v); });
    for (std::size_t v : branch) {
      clique.push_back(v);
      expand(clique, candidates & adjacency_[v], excluded & adjacency_[v]);
      clique.pop_back();
      candidates.reset(v);
      excluded.set(v);
    }
  }

  std::vector<Bits> adjacency_;
  Visit visit_;
};

void for_each_pairwise(int margin, const std::function<void(const GeneratingSet&)>& visit) {
  const auto tiles = self_compatible_tiles(margin, 2);
  const std::size_t n = tiles.size();
  std::vector<Bits> adjacency(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Seed pair[] = {tiles[i], tiles[j]};
      if (compatible(pair, margin, 2)) {
        adjacency[i].set(j);
        adjacency[j].set(i);
      }
    }
  }
  CliqueSearch(std::move(adjacency), [&](const std::vector<std::size_t>& clique) {
    std::vector<Seed> members;
    members.reserve(clique.size());
    for (std::size_t v : clique) members.push_back(tiles[v]);
    visit(make_set(margin, 2, std::move(members)));
  }).run();
}

// k-uniform compatibility over a fixed candidate list, cached by sorted index tuple.
class TupleOracle {
 public:
  TupleOracle(const std::vector<Seed>& words, int margin, int k) : words_(words), margin_(margin), k_(k) {}

  bool compatible_tuple(std::vector<std::size_t> tuple) {
    std::sort(tuple.begin(), tuple.end());
    auto it = cache_.find(tuple);
    if (it != cache_.end()) return it->second;
    std::vector<Seed> tiles;
    tiles.reserve(tuple.size());
    for (std::size_t i : tuple) tiles.push_back(words_[i]);
    const bool ok = compatible(tiles, margin_, k_);
    cache_.emplace(std::move(tuple), ok);
    return ok;
  }

  /// Some k-multiset over pool ∪ {x} that contains x is incompatible.
  bool blocked(std::size_t x, std::span<const std::size_t> pool) {
    std::vector<std::size_t> draw{x};
    draw.insert(draw.end(), pool.begin(), pool.end());
    std::vector<std::size_t> tuple{x};
    return blocked_from(tuple, draw, 0);
  }

 private:
  bool blocked_from(std::vector<std::size_t>& tuple, std::span<const std::size_t> draw, std::size_t from) {
    if (static_cast<int>(tuple.size()) == k_) return !compatible_tuple(tuple);
    for (std::size_t i = from; i < draw.size(); ++i) {
      tuple.push_back(draw[i]);
      const bool hit = blocked_from(tuple, draw, i);
      tuple.pop_back();
      if (hit) return true;
    }
    return false;
  }

  const std::vector<Seed>& words_;
  int margin_;
  int k_;
  std::map<std::vector<std::size_t>, bool> cache_;
};

class ExtendSearch {
 public:
  using Visit = std::function<void(const std::vector<std::size_t>&)>;

  ExtendSearch(const std::vector<Seed>& candidates, int margin, int k, Visit visit)
      : candidates_(candidates), oracle_(candidates, margin, k), visit_(std::move(visit)) {}

  void run() { extend(0); }

 private:
  void extend(std::size_t i) {
    if (i == candidates_.size()) {
      for (std::size_t x : skipped_) {
        if (!oracle_.blocked(x, chosen_)) return;  // not maximal
      }
      visit_(chosen_);
      return;
    }
    if (oracle_.blocked(i, chosen_)) {
      skipped_.push_back(i);
      extend(i + 1);
      skipped_.pop_back();
      return;
    }
    chosen_.push_back(i);
    extend(i + 1);
    chosen_.pop_back();
    // Leaving i out only pays off if something still to come can block it.
    std::vector<std::size_t> pool = chosen_;
    for (std::size_t j = i + 1; j < candidates_.size(); ++j) pool.push_back(j);
    if (oracle_.blocked(i, pool)) {
      skipped_.push_back(i);
      extend(i + 1);
      skipped_.pop_back();
    }
  }

  const std::vector<Seed>& candidates_;
  TupleOracle oracle_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> skipped_;
  Visit visit_;
};

void for_each_generic(int margin, int k, const std::function<void(const GeneratingSet&)>& visit) {
  const auto candidates = self_compatible_tiles(margin, k);
  ExtendSearch(candidates, margin, k, [&](const std::vector<std::size_t>& chosen) {
    std::vector<Seed> members;
    members.reserve(chosen.size());
    for (std::size_t v : chosen) members.push_back(candidates[v]);
    visit(make_set(margin, k, std::move(members)));
  }).run();
}

std::vector<GeneratingSet> collect_sorted(int margin, int k,
                                          void (*each)(int, int, const std::function<void(const GeneratingSet&)>&)) {
  std::vector<GeneratingSet> sets;
  each(margin, k, [&](const GeneratingSet& set) { sets.push_back(set); });
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace

void for_each_generating_set(int margin, int k, const std::function<void(const GeneratingSet&)>& visit) {
  check_parameters(margin, k);
  if (k == 2) {
    for_each_pairwise(margin, visit);
  } else {
    for_each_generic(margin, k, visit);
  }
}

std::vector<GeneratingSet> enumerate_generating_sets(int margin, int k) {
  return collect_sorted(margin, k, &for_each_generating_set);
}

std::vector<GeneratingSet> enumerate_generating_sets_generic(int margin, int k) {
  check_parameters(margin, k);
  return collect_sorted(margin, k, &for_each_generic);
}

std::vector<std::string> generating_set_violations(const GeneratingSet& set) {
  std::vector<std::string> problems;
  const int margin = set.margin;
  const int k = set.k;
  const std::size_t width = static_cast<std::size_t>(margin) + 1;
  for (const auto& tile : set.tiles) {
    if (tile.length() != width) {
      problems.push_back("tile " + tile.str() + " has the wrong length");
      return problems;
    }
  }
  if (!std::is_sorted(set.tiles.begin(), set.tiles.end()) ||
      std::adjacent_find(set.tiles.begin(), set.tiles.end()) != set.tiles.end()) {
    problems.push_back("tiles are not sorted and duplicate-free");
  }

  std::vector<Seed> universe = all_words(margin + 1);
  TupleOracle oracle(universe, margin, k);
  std::vector<std::size_t> members;
  for (const auto& tile : set.tiles) {
    members.push_back(static_cast<std::size_t>(
        std::lower_bound(universe.begin(), universe.end(), tile) - universe.begin()));
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    // Multisets drawn from tiles[0..i] that contain tiles[i].
    const std::span<const std::size_t> earlier(members.data(), i);
    if (oracle.blocked(members[i], earlier)) {
      problems.push_back("tile " + set.tiles[i].str() + " is incompatible with the set");
    }
  }
  for (std::size_t u = 0; u < universe.size(); ++u) {
    if (set.contains(universe[u])) continue;
    if (!oracle.blocked(u, members)) problems.push_back("not maximal: " + universe[u].str() + " could be added");
  }
  if (!set.contains(Seed::jokers(width))) problems.push_back("missing the all-joker tile");
  for (const auto& tile : set.tiles) {
    const Seed right = Seed::jokers(1) + tile.substr(0, width - 1);
    const Seed left = tile.substr(1) + Seed::jokers(1);
    if (!set.contains(right) || !set.contains(left)) {
      problems.push_back("not closed under '-' padding at tile " + tile.str());
    }
  }
  return problems;
}

bool generated_by(const Seed& seed, const GeneratingSet& set) {
  const std::size_t width = static_cast<std::size_t>(set.margin) + 1;
  if (seed.length() < width) {
    return std::any_of(set.tiles.begin(), set.tiles.end(),
                       [&](const Seed& tile) { return tile.str().find(seed.str()) != std::string::npos; });
  }
  for (std::size_t start = 0; start + width <= seed.length(); ++start) {
    if (!set.contains(seed.substr(start, width))) return false;
  }
  return true;
}

namespace {

// Sort key under which numeric order equals the '#' < '-' string order.
std::uint64_t lexicographic_key(std::uint64_t mask, int length) {
  std::uint64_t key = 0;
  for (int j = 0; j < length; ++j) {
    if (!((mask >> j) & 1U)) key |= std::uint64_t{1} << (length - 1 - j);
  }
  return key;
}

}  // namespace

WordGraph construction_graph(const GeneratingSet& set) {
  const int margin = set.margin;
  if (margin + 1 > 63) throw ResourceLimitError("tiles longer than 63 letters are not supported");
  std::vector<std::uint64_t> tiles;
  tiles.reserve(set.tiles.size());
  for (const auto& tile : set.tiles) tiles.push_back(tile.mask());
  std::sort(tiles.begin(), tiles.end());
  auto is_tile = [&](std::uint64_t t) { return std::binary_search(tiles.begin(), tiles.end(), t); };

  const std::uint64_t low = full_mask(margin);
  std::vector<std::uint64_t> vertices;
  for (std::uint64_t t : tiles) {
    vertices.push_back(t & low);
    vertices.push_back(t >> 1);
  }
  std::sort(vertices.begin(), vertices.end(), [&](std::uint64_t a, std::uint64_t b) {
    return lexicographic_key(a, margin) < lexicographic_key(b, margin);
  });
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  std::vector<std::pair<std::uint64_t, int>> index;
  for (std::size_t v = 0; v < vertices.size(); ++v) index.emplace_back(vertices[v], static_cast<int>(v));
  std::sort(index.begin(), index.end());
  auto id_of = [&](std::uint64_t u) {
    return std::lower_bound(index.begin(), index.end(), std::pair<std::uint64_t, int>{u, -1})->second;
  };

  WordGraph graph;
  graph.vertices.reserve(vertices.size());
  graph.successors.assign(vertices.size(), {SeedAutomaton::kNone, SeedAutomaton::kNone});
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    graph.vertices.push_back(Seed::from_mask(vertices[v], static_cast<std::size_t>(margin)).str());
    for (std::size_t a = 0; a < 2; ++a) {
      const std::uint64_t extended = vertices[v] | (a == 0 ? std::uint64_t{1} << margin : 0);
      if (is_tile(extended)) graph.successors[v][a] = id_of(extended >> 1);
    }
  }
  return graph;
}

SeedAutomaton build_automaton(const GeneratingSet& set) {
  const WordGraph graph[] = {construction_graph(set)};
  return determinize(graph);
}

SeedAutomaton union_automaton(int margin, int k) {
  std::vector<WordGraph> graphs;
  for (const auto& set : enumerate_generating_sets(margin, k)) graphs.push_back(construction_graph(set));
  return minimize(determinize(graphs, kMaxUnionStates));
}

namespace {

nlohmann::json set_to_json(const GeneratingSet& set) {
  nlohmann::json tiles = nlohmann::json::array();
  for (const auto& tile : set.tiles) tiles.push_back(tile.str());
  return {{"l", set.margin}, {"k", set.k}, {"tiles", tiles}};
}

GeneratingSet set_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("l") || !j.contains("k") || !j.contains("tiles")) {
    throw std::invalid_argument("generating set JSON needs \"l\", \"k\" and \"tiles\"");
  }
  std::vector<Seed> tiles;
  for (const auto& t : j.at("tiles")) tiles.push_back(Seed::parse(t.get<std::string>()));
  auto set = make_set(j.at("l").get<int>(), j.at("k").get<int>(), std::move(tiles));
  if (set.margin < 0 || set.k < 1) throw std::invalid_argument("generating set JSON has invalid l or k");
  for (const auto& tile : set.tiles) {
    if (tile.length() != static_cast<std::size_t>(set.margin) + 1) {
      throw std::invalid_argument("tile " + tile.str() + " does not have length l + 1");
    }
  }
  return set;
}

}  // namespace

std::string to_json(const GeneratingSet& set) { return set_to_json(set).dump(); }

std::string to_json(std::span<const GeneratingSet> sets) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& set : sets) out.push_back(set_to_json(set));
  return out.dump();
}

std::vector<GeneratingSet> generating_sets_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed generating set JSON: ") + e.what());
  }
  std::vector<GeneratingSet> sets;
  try {
    if (j.is_array()) {
      for (const auto& item : j) sets.push_back(set_from_json(item));
    } else {
      sets.push_back(set_from_json(j));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed generating set JSON: ") + e.what());
  }
  return sets;
}

}  // namespace seedlang
