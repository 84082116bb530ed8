#include "seedlang/design.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

namespace seedlang {

Seed synthesize(const GeneratingSet& set, int length, bool maximize) {
  if (length < 0) throw std::invalid_argument("seed length must be non-negative");
  if (set.tiles.empty()) throw std::invalid_argument("generating set has no tiles");
  if (length == 0) return {};
  if (maximize) return max_weight_word(build_automaton(set), length);

  const std::size_t n = static_cast<std::size_t>(length);
  const std::size_t width = static_cast<std::size_t>(set.margin) + 1;
  if (n <= width) {
    // Smallest factor of that length over all tiles; '#' sorts first.
    Seed best = set.tiles.front().substr(0, std::min(n, width));
    for (const auto& tile : set.tiles) {
      for (std::size_t start = 0; start + n <= width; ++start) best = std::min(best, tile.substr(start, n));
    }
    return best;
  }

  Seed seed = set.tiles.front();
  const std::size_t margin = width - 1;
  while (seed.length() < n) {
    const Seed suffix = seed.substr(seed.length() - margin);
    seed += set.contains(suffix + Seed::matches(1)) ? kMatch : kJoker;
  }
  return seed;
}

GeneratingSet k1_generating_set(int margin) {
  if (margin < 0) throw std::invalid_argument("margin must be non-negative");
  if (margin > max_enumerable_margin(1)) throw ResourceLimitError("margin too large for an explicit tile list");
  const std::size_t width = static_cast<std::size_t>(margin) + 1;
  GeneratingSet set{margin, 1, {}};
  const std::uint64_t all = (std::uint64_t{1} << width) - 1;
  for (std::uint64_t mask = 0; mask < all; ++mask) set.tiles.push_back(Seed::from_mask(mask, width));
  std::sort(set.tiles.begin(), set.tiles.end());
  return set;
}

namespace {

// (#^margin -)* cut to `length`: no run of margin + 1, as many '#' as possible,
// and the lexicographically smallest such word.
Seed single_error_witness(int length, int margin) {
  Seed seed;
  for (int i = 0; i < length; ++i) seed += ((i + 1) % (margin + 1) == 0) ? kJoker : kMatch;
  return seed;
}

Seed heaviest_short_seed(int length, int margin, int k) {
  for (int weight = length; weight >= 0; --weight) {
    std::optional<Seed> found;
    for_each_combination(length, weight, [&](std::span<const int> matches) {
      std::string letters(static_cast<std::size_t>(length), kJoker);
      for (int p : matches) letters[static_cast<std::size_t>(p)] = kMatch;
      Seed seed = Seed::parse(letters);
      if (!valid_factor_check(seed, margin, k)) return true;
      found = std::move(seed);
      return false;
    });
    if (found) return *found;
  }
  throw std::logic_error("the all-joker seed always solves");
}

// Heaviest weight still allowed by C(m,k) <= C(m-w,k)(margin+1), capped at length.
int counting_weight_cap(const ProblemSpec& spec, int length, int margin) {
  int w = length;
  while (w > 0 && !counting_bound_holds(spec, static_cast<std::size_t>(w), margin)) --w;
  return w;
}

}  // namespace

OptimalSeedSearch::OptimalSeedSearch(int k) : k_(k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
}

const Seed& OptimalSeedSearch::heaviest(int margin, int length) {
  const auto key = std::make_pair(margin, length);
  if (auto it = heaviest_.find(key); it != heaviest_.end()) return it->second;

  Seed best;
  if (length > 0 && k_ == 1) {
    best = single_error_witness(length, margin);
  } else if (length > 0 && length <= margin + 1) {
    // A seed no longer than a tile: scan heaviest first with the factor test,
    // which skips enumerating generating sets altogether.
    best = heaviest_short_seed(length, margin, k_);
  } else if (length > 0) {
    if (margin > max_enumerable_margin(k_)) {
      throw ResourceLimitError("heaviest seed of length " + std::to_string(length) + " for k=" + std::to_string(k_) +
                               " needs margin " + std::to_string(margin) + ", beyond the supported " +
                               std::to_string(max_enumerable_margin(k_)));
    }
    bool first = true;
    for_each_generating_set(margin, k_, [&](const GeneratingSet& set) {
      Seed word = max_weight_word(construction_graph(set), length);
      if (first || word.weight() > best.weight() || (word.weight() == best.weight() && word < best)) {
        best = std::move(word);
        first = false;
      }
    });
  }
  return heaviest_.emplace(key, std::move(best)).first->second;
}

OptimalResult OptimalSeedSearch::run(int m, int max_margin) {
  const ProblemSpec spec(m, k_);
  if (max_margin < 1) throw std::invalid_argument("the margin range must include 1");
  const int top = std::min(max_margin, m);
  // No error combination exists, so every seed solves.
  if (k_ > m) return OptimalResult{m, k_, m - 1, Seed::matches(static_cast<std::size_t>(m - 1)), 1};

  OptimalResult best{m, k_, -1, Seed{}, 0};
  for (int margin = 1; margin <= top; ++margin) {
    const int length = m - margin;
    if (best.best_weight >= length) break;  // later margins are shorter still
    if (counting_weight_cap(spec, length, margin) <= best.best_weight) continue;

    const Seed& candidate = heaviest(margin, length);
    const int weight = static_cast<int>(candidate.weight());
    if (weight > best.best_weight) best = OptimalResult{m, k_, weight, candidate, margin};
  }
  return best;
}

OptimalResult optimal_seed(const ProblemSpec& spec, int max_margin) {
  return OptimalSeedSearch(spec.k).run(spec.m, max_margin);
}

OptimalResult exhaustive_optimal_seed(const ProblemSpec& spec) {
  for (int weight = spec.m - 1; weight >= 0; --weight) {
    for (int margin = 1; spec.m - margin >= weight; ++margin) {
      const int length = spec.m - margin;
      std::optional<Seed> found;
      for_each_combination(length, weight, [&](std::span<const int> matches) {
        std::string letters(static_cast<std::size_t>(length), kJoker);
        for (int p : matches) letters[static_cast<std::size_t>(p)] = kMatch;
        Seed seed = Seed::parse(letters);
        if (!solves(seed, spec)) return true;
        found = std::move(seed);
        return false;
      });
      if (found) return OptimalResult{spec.m, spec.k, weight, std::move(*found), margin};
    }
  }
  throw std::logic_error("the empty seed always solves");
}

std::vector<AsymptoticsRow> asymptotics_table(int k, int m_min, int m_max) {
  if (m_min < 1 || m_max < m_min) throw std::invalid_argument("invalid m range");
  OptimalSeedSearch search(k);
  std::vector<AsymptoticsRow> rows;
  for (int m = m_min; m <= m_max; ++m) {
    auto result = search.run(m, m);
    AsymptoticsRow row;
    row.m = m;
    row.weight = result.best_weight;
    row.margin = result.margin;
    row.loss = m - result.best_weight;
    row.ratio = static_cast<double>(row.margin) / static_cast<double>(row.loss);
    row.witness = std::move(result.witness);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_tsv(std::ostream& os, const std::vector<AsymptoticsRow>& rows) {
  os << "m\tw\tl\tloss\tratio\twitness\n";
  for (const auto& row : rows) {
    std::ostringstream ratio;
    ratio << std::fixed << std::setprecision(6) << row.ratio;
    os << row.m << '\t' << row.weight << '\t' << row.margin << '\t' << row.loss << '\t' << ratio.str() << '\t'
       << row.witness.str() << '\n';
  }
}

}  // namespace seedlang
