#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "seedlang/design.hpp"

using namespace seedlang;

namespace {

const GeneratingSet& example_set() {
  static const GeneratingSet set = enumerate_generating_sets(3, 2)[0];
  return set;
}

// Best weight over all seeds of length < m, by trying every word.
int brute_force_best_weight(int m, int k) {
  int best = 0;
  for (int n = 0; n < m; ++n) {
    for (const auto& w : oracle::all_words(n)) {
      if (oracle::weight(w) > best && oracle::solves(w, m, k)) best = oracle::weight(w);
    }
  }
  return best;
}

}  // namespace

TEST(Synthesize, Examples) {
  const Seed four = synthesize(example_set(), 4);
  EXPECT_TRUE(example_set().contains(four));
  EXPECT_TRUE(solves(four, ProblemSpec(7, 2)));
  EXPECT_EQ(synthesize(example_set(), 0), Seed{});

  const Seed ten = synthesize(example_set(), 10);
  EXPECT_EQ(ten.length(), 10u);
  EXPECT_TRUE(solves(ten, ProblemSpec(13, 2)));
  EXPECT_THROW(synthesize(example_set(), -1), std::invalid_argument);
}

TEST(Synthesize, GeneratedAndSolvingForEverySet) {
  for (auto [l, k] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{5, 2}, std::pair{2, 1}, std::pair{3, 3}}) {
    for (const auto& set : enumerate_generating_sets(l, k)) {
      const auto automaton = build_automaton(set);
      for (int s = 0; s <= 10; ++s) {
        for (bool maximize : {false, true}) {
          const Seed seed = synthesize(set, s, maximize);
          ASSERT_EQ(seed.length(), static_cast<std::size_t>(s));
          EXPECT_TRUE(generated_by(seed, set)) << seed;
          EXPECT_TRUE(automaton.accepts(seed)) << seed;
          const ProblemSpec spec(s + l, k);
          if (spec.m >= k) {
            EXPECT_TRUE(solves(seed, spec)) << seed << " l=" << l << " k=" << k;
            EXPECT_TRUE(counting_bound_holds(spec, seed.weight(), l));
          }
        }
      }
    }
  }
}

TEST(Synthesize, MaximizeIsAtLeastGreedy) {
  for (const auto& set : enumerate_generating_sets(5, 2)) {
    for (int s = 1; s <= 12; ++s) EXPECT_GE(synthesize(set, s, true).weight(), synthesize(set, s).weight());
  }
}

TEST(K1GeneratingSet, ClosedForm) {
  EXPECT_EQ(k1_generating_set(1).tiles, (std::vector<Seed>{Seed::parse("#-"), Seed::parse("-#"), Seed::parse("--")}));
  EXPECT_EQ(k1_generating_set(2).tiles.size(), 7u);
  EXPECT_FALSE(k1_generating_set(2).contains(Seed::parse("###")));
  for (int l = 0; l <= 5; ++l) {
    EXPECT_EQ(k1_generating_set(l), enumerate_generating_sets(l, 1)[0]);
    EXPECT_EQ(k1_generating_set(l), enumerate_generating_sets_generic(l, 1)[0]);
  }
}

TEST(OptimalSeed, Examples) {
  const auto eleven = optimal_seed(ProblemSpec(11, 2), 10);
  EXPECT_GE(eleven.best_weight, 3);
  EXPECT_EQ(eleven.best_weight, brute_force_best_weight(11, 2));

  const auto two = optimal_seed(ProblemSpec(2, 1), 2);
  EXPECT_EQ(two.best_weight, 1);
  EXPECT_EQ(two.witness.str(), "#");
  EXPECT_EQ(two.margin, 1);
}

TEST(OptimalSeed, SingleErrorMatchesRunOracle) {
  for (int m = 1; m <= 16; ++m) {
    int expected = 0;
    for (int l = 1; l <= m; ++l) {
      for (const auto& w : oracle::all_words(m - l)) {
        if (!oracle::has_run(w, l + 1)) expected = std::max(expected, oracle::weight(w));
      }
    }
    EXPECT_EQ(optimal_seed(ProblemSpec(m, 1), m).best_weight, expected) << m;
  }
}

TEST(OptimalSeed, MatchesExhaustiveSearch) {
  for (int k = 1; k <= 2; ++k) {
    OptimalSeedSearch search(k);
    for (int m = 1; m <= 14; ++m) {
      const ProblemSpec spec(m, k);
      const auto fast = search.run(m, m);
      const auto slow = exhaustive_optimal_seed(spec);
      EXPECT_EQ(fast.best_weight, slow.best_weight) << "m=" << m << " k=" << k;
      EXPECT_EQ(fast.witness, slow.witness) << "m=" << m << " k=" << k;
      EXPECT_EQ(fast.margin, slow.margin);
      EXPECT_EQ(fast.margin, m - static_cast<int>(fast.witness.length()));
      EXPECT_TRUE(solves(fast.witness, spec));
      EXPECT_TRUE(counting_bound_holds(spec, fast.witness.weight(), fast.margin));
    }
  }
}

TEST(OptimalSeed, ExhaustiveAgreesWithIndependentOracle) {
  for (int k = 1; k <= 3; ++k) {
    for (int m = 1; m <= 9; ++m) EXPECT_EQ(exhaustive_optimal_seed(ProblemSpec(m, k)).best_weight, brute_force_best_weight(m, k));
  }
}

TEST(OptimalSeed, ThreeErrors) {
  for (int m = 3; m <= 11; ++m) {
    const auto fast = optimal_seed(ProblemSpec(m, 3), m);
    EXPECT_EQ(fast.best_weight, exhaustive_optimal_seed(ProblemSpec(m, 3)).best_weight) << m;
  }
}

TEST(OptimalSeed, MarginRangeAndGuards) {
  // Restricting margins to 1 leaves only length m - 1.
  const auto narrow = optimal_seed(ProblemSpec(9, 2), 1);
  EXPECT_EQ(narrow.margin, 1);
  EXPECT_EQ(narrow.witness.length(), 8u);
  EXPECT_TRUE(solves(narrow.witness, ProblemSpec(9, 2)));
  EXPECT_THROW(optimal_seed(ProblemSpec(9, 2), 0), std::invalid_argument);
  EXPECT_THROW(OptimalSeedSearch(0), std::invalid_argument);

  const auto vacuous = optimal_seed(ProblemSpec(2, 3), 2);
  EXPECT_EQ(vacuous.best_weight, 1);
  EXPECT_EQ(vacuous.best_weight, exhaustive_optimal_seed(ProblemSpec(2, 3)).best_weight);
}

TEST(OptimalSeed, HeaviestUsesTheUnionLanguage) {
  OptimalSeedSearch search(2);
  for (int l = 1; l <= 5; ++l) {
    const auto automaton = union_automaton(l, 2);
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(search.heaviest(l, n), max_weight_word(automaton, n)) << l << " " << n;
  }
}

TEST(Asymptotics, SingleErrorTable) {
  const auto rows = asymptotics_table(1, 5, 40);
  ASSERT_EQ(rows.size(), 36u);
  for (const auto& row : rows) {
    const ProblemSpec spec(row.m, 1);
    EXPECT_LE(row.margin, row.m - row.weight);
    EXPECT_GT(row.ratio, 0.0);
    EXPECT_LE(row.ratio, 1.0);
    EXPECT_TRUE(counting_bound_holds(spec, static_cast<std::size_t>(row.weight), row.margin));
    EXPECT_TRUE(solves(row.witness, spec));
    EXPECT_EQ(static_cast<int>(row.witness.weight()), row.weight);
  }
}

TEST(Asymptotics, TwoErrorTableMatchesSearch) {
  const auto rows = asymptotics_table(2, 2, 12);
  for (const auto& row : rows) {
    EXPECT_EQ(row.weight, exhaustive_optimal_seed(ProblemSpec(row.m, 2)).best_weight);
    EXPECT_LE(row.margin, row.loss);
  }
}

TEST(Asymptotics, TsvFormat) {
  std::ostringstream os;
  write_tsv(os, asymptotics_table(1, 5, 6));
  EXPECT_EQ(os.str(),
            "m\tw\tl\tloss\tratio\twitness\n"
            "5\t2\t1\t3\t0.333333\t#-#-\n"
            "6\t3\t1\t3\t0.333333\t#-#-#\n");
  EXPECT_THROW(asymptotics_table(1, 0, 3), std::invalid_argument);
  EXPECT_THROW(asymptotics_table(1, 5, 4), std::invalid_argument);
}
