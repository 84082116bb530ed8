#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seedlang/automaton.hpp"
#include "seedlang/seed.hpp"

namespace seedlang {

/// Largest margin the generating-set enumerators accept for a given error
/// count. Past these the candidate space is out of reach on a desktop.
int max_enumerable_margin(int k);

/// A maximal set of mutually compatible words of length margin + 1.
/// The seeds it generates are the words whose every (margin+1)-factor is a tile.
struct GeneratingSet {
  int margin = 0;
  int k = 1;
  std::vector<Seed> tiles;  // sorted, duplicate-free

  bool contains(const Seed& tile) const;

  friend bool operator==(const GeneratingSet&, const GeneratingSet&) = default;
  friend auto operator<=>(const GeneratingSet&, const GeneratingSet&) = default;
};

/// sh_k(tiles) <= margin. Expects exactly k tiles of length margin + 1;
/// throws std::invalid_argument otherwise.
bool compatible(std::span<const Seed> tiles, int margin, int k);

/// Decides whether the seed solves the (|Q| + margin, k) problem from the
/// (margin+1)-factors of -^margin Q -^margin alone: no k of them (repetition
/// allowed) may OR to an all-'#' word.
bool valid_factor_check(const Seed& seed, int margin, int k);

/// Calls `visit` once per (margin, k)-generating set, in an unspecified but
/// deterministic order, without holding them all in memory.
void for_each_generating_set(int margin, int k, const std::function<void(const GeneratingSet&)>& visit);

/// Every (margin, k)-generating set, sorted. k = 2 runs a pivoting maximal
/// clique search on the compatibility graph; other k use the generic
/// extend-and-prune search. Throws ResourceLimitError past max_enumerable_margin.
std::vector<GeneratingSet> enumerate_generating_sets(int margin, int k);

/// The generic extend-and-prune search for any k, exposed for cross-checks.
std::vector<GeneratingSet> enumerate_generating_sets_generic(int margin, int k);

/// Invariant violations of a candidate generating set, one message each;
/// empty when the set is a genuine generating set.
std::vector<std::string> generating_set_violations(const GeneratingSet& set);

/// True iff the seed is generated by the set: all of its (margin+1)-factors are
/// tiles, or, when shorter than a tile, it is a factor of some tile.
bool generated_by(const Seed& seed, const GeneratingSet& set);

/// de Bruijn-style graph: vertices are the margin-length prefixes and suffixes
/// of tiles, with u -a-> (u·a)[1..] whenever u·a is a tile.
WordGraph construction_graph(const GeneratingSet& set);

/// DFA for the seeds generated by the set (subset construction, not minimized).
SeedAutomaton build_automaton(const GeneratingSet& set);

/// Minimal DFA for all seeds solving (|Q| + margin, k) problems, obtained as
/// the union over every generating set. The subset construction is capped at
/// kMaxUnionStates states; larger languages raise ResourceLimitError.
inline constexpr std::size_t kMaxUnionStates = 200000;
SeedAutomaton union_automaton(int margin, int k);

/// JSON form {"l": int, "k": int, "tiles": [string, ...]} with sorted tiles.
std::string to_json(const GeneratingSet& set);
std::string to_json(std::span<const GeneratingSet> sets);

/// Accepts either a single object or an array of objects. Tiles are
/// re-sorted; throws std::invalid_argument on malformed input.
std::vector<GeneratingSet> generating_sets_from_json(std::string_view text);

}  // namespace seedlang
