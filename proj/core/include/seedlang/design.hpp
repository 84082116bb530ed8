#pragma once

#include <map>
#include <ostream>
#include <vector>

#include "seedlang/automaton.hpp"
#include "seedlang/seed.hpp"
#include "seedlang/subshift.hpp"

namespace seedlang {

/// Builds a seed of `length` letters generated by `set`.
///
/// Greedy mode extends a tile letter by letter, taking '#' whenever the new
/// (margin+1)-suffix is a tile and '-' otherwise ('-' is always available).
/// It is deterministic but not weight-optimal. With `maximize` the result is
/// a maximum-weight word of the set's automaton instead.
Seed synthesize(const GeneratingSet& set, int length, bool maximize = false);

/// All words of length margin + 1 except #^{margin+1}: the only generating
/// set for a single error.
GeneratingSet k1_generating_set(int margin);

/// Best seed for an (m,k) problem over margins [1, max_margin].
struct OptimalResult {
  int m = 0;
  int k = 0;
  int best_weight = 0;
  Seed witness;
  int margin = 0;  // m - |witness|
};

/// Sweeps margins in increasing order and keeps the heaviest seed; ties go to
/// the smaller margin, then the lexicographically smaller witness.
///
/// For each margin the heaviest word of length m - margin is the best of the
/// heaviest words over every generating set's graph (the seed language is
/// their union). Margins that cannot beat the current best, by length or by
/// the counting bound, are skipped. k = 1 uses the closed form: no run of
/// margin + 1 '#'. Results are cached per (margin, length), so one instance
/// can serve a whole table.
class OptimalSeedSearch {
 public:
  explicit OptimalSeedSearch(int k);

  /// Throws ResourceLimitError when a margin that could still improve the
  /// result needs generating sets past max_enumerable_margin(k).
  OptimalResult run(int m, int max_margin);

  /// Heaviest seed of `length` letters solving the (length + margin, k) problem.
  const Seed& heaviest(int margin, int length);

 private:
  int k_;
  std::map<std::pair<int, int>, Seed> heaviest_;
};

OptimalResult optimal_seed(const ProblemSpec& spec, int max_margin);

/// Reference search straight from the definition: weights from high to low,
/// margins from small to large, seeds in lexicographic order, checked with
/// solves(). Only for small m.
OptimalResult exhaustive_optimal_seed(const ProblemSpec& spec);

struct AsymptoticsRow {
  int m = 0;
  int weight = 0;
  int margin = 0;
  int loss = 0;  // m - weight
  double ratio = 0.0;  // margin / loss
  Seed witness;
};

/// One optimal-seed row per m in [m_min, m_max], all margins searched.
std::vector<AsymptoticsRow> asymptotics_table(int k, int m_min, int m_max);

/// Header `m\tw\tl\tloss\tratio\twitness`, one line per row.
void write_tsv(std::ostream& os, const std::vector<AsymptoticsRow>& rows);

}  // namespace seedlang
