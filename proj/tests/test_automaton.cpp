#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "seedlang/automaton.hpp"

using namespace seedlang;

namespace {

constexpr int N = SeedAutomaton::kNone;

// Words without "##": states remember whether the last letter was '#'.
SeedAutomaton no_double_match() { return SeedAutomaton(0, {{1, 0}, {N, 0}}); }

// A redundant copy of the same language with an extra duplicated state.
SeedAutomaton no_double_match_redundant() { return SeedAutomaton(0, {{1, 2}, {N, 2}, {1, 0}}); }

// Graph on 1-letter windows recognizing words with no "##".
WordGraph no_double_match_graph() { return WordGraph{{"#", "-"}, {{N, 1}, {0, 1}}}; }

}  // namespace

TEST(SeedAutomaton, AcceptsAndCounts) {
  const auto a = no_double_match();
  EXPECT_EQ(a.state_count(), 2u);
  EXPECT_EQ(a.transition_count(), 3u);
  EXPECT_TRUE(a.accepts(Seed{}));
  EXPECT_TRUE(a.accepts(Seed::parse("#-#--#")));
  EXPECT_FALSE(a.accepts(Seed::parse("-##")));
  EXPECT_THROW(SeedAutomaton(0, {{5, 0}}), std::invalid_argument);
  EXPECT_THROW(SeedAutomaton(2, {{N, 0}}), std::invalid_argument);
}

TEST(WordGraph, AcceptsPathLabels) {
  const auto g = no_double_match_graph();
  for (const auto& w : oracle::words_up_to(8)) EXPECT_EQ(g.accepts(Seed::parse(w)), !oracle::has_run(w, 2)) << w;
}

TEST(Determinize, MatchesGraphLanguage) {
  const std::vector<WordGraph> graphs = {no_double_match_graph()};
  const auto dfa = determinize(graphs);
  for (const auto& w : oracle::words_up_to(10)) EXPECT_EQ(dfa.accepts(Seed::parse(w)), !oracle::has_run(w, 2));
  EXPECT_THROW(determinize(graphs, 1), ResourceLimitError);
}

TEST(Determinize, UnionOfGraphs) {
  // Only '-' loops, and only '#' loops: union accepts the constant words.
  const std::vector<WordGraph> graphs = {WordGraph{{"a"}, {{N, 0}}}, WordGraph{{"b"}, {{0, N}}}};
  const auto dfa = determinize(graphs);
  for (const auto& w : oracle::words_up_to(6)) {
    const bool constant = w.find('#') == std::string::npos || w.find('-') == std::string::npos;
    EXPECT_EQ(dfa.accepts(Seed::parse(w)), constant) << w;
  }
}

TEST(Minimize, ReducesAndPreservesLanguage) {
  const auto big = no_double_match_redundant();
  const auto small = minimize(big);
  EXPECT_EQ(small.state_count(), 2u);
  EXPECT_TRUE(small.same_structure(minimize(no_double_match())));
  for (const auto& w : oracle::words_up_to(10)) EXPECT_EQ(small.accepts(Seed::parse(w)), big.accepts(Seed::parse(w)));
}

TEST(Minimize, Idempotent) {
  const auto once = minimize(no_double_match_redundant());
  EXPECT_TRUE(minimize(once).same_structure(once));
}

TEST(Minimize, DropsUnreachableStates) {
  const SeedAutomaton a(0, {{N, 0}, {1, 1}});
  const auto m = minimize(a);
  EXPECT_EQ(m.state_count(), 1u);
  EXPECT_TRUE(m.accepts(Seed::parse("---")));
  EXPECT_FALSE(m.accepts(Seed::parse("#")));
}

TEST(MaxWeightWord, DfaAndGraphAgree) {
  const auto dfa = no_double_match();
  const auto graph = no_double_match_graph();
  for (int n = 0; n <= 12; ++n) {
    const Seed best = max_weight_word(dfa, n);
    EXPECT_EQ(best.length(), static_cast<std::size_t>(n));
    EXPECT_EQ(best.weight(), static_cast<std::size_t>((n + 1) / 2));
    EXPECT_TRUE(dfa.accepts(best));
    EXPECT_EQ(max_weight_word(graph, n), best);
  }
  EXPECT_EQ(max_weight_word(dfa, 4).str(), "#-#-");
  EXPECT_EQ(max_weight_word(dfa, 0), Seed{});
}

TEST(MaxWeightWord, LexicographicTieBreakAgainstOracle) {
  // Language: words whose '#'s are at least three apart.
  const auto dfa = SeedAutomaton(0, {{1, 0}, {N, 2}, {N, 0}});
  for (int n = 0; n <= 10; ++n) {
    std::string expected;
    int best = -1;
    for (const auto& w : oracle::all_words(n)) {
      if (!dfa.accepts(Seed::parse(w))) continue;
      if (oracle::weight(w) > best) {
        best = oracle::weight(w);
        expected = w;
      }
    }
    EXPECT_EQ(max_weight_word(dfa, n).str(), expected) << n;
  }
}

TEST(MaxWeightWord, SignalsEmptyLanguage) {
  const SeedAutomaton only_match(0, {{1, N}, {N, N}});
  EXPECT_THROW(max_weight_word(only_match, 2), std::domain_error);
  const WordGraph dead{{"x"}, {{N, N}}};
  EXPECT_THROW(max_weight_word(dead, 1), std::domain_error);
}

TEST(WriteDot, ContainsStatesAndEdges) {
  std::ostringstream os;
  write_dot(os, no_double_match());
  const std::string dot = os.str();
  EXPECT_EQ(dot.rfind("digraph seeds {", 0), 0u);
  EXPECT_NE(dot.find("0 -> 1 [label=\"#\"]"), std::string::npos);
  EXPECT_NE(dot.find("1 -> 0 [label=\"-\"]"), std::string::npos);

  std::ostringstream graph;
  write_dot(graph, no_double_match_graph());
  EXPECT_NE(graph.str().find("\"#\""), std::string::npos);
}
