#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seedlang/seed.hpp"

namespace seedlang {

/// '#' -> 0, '-' -> 1. The order matches '#' < '-'.
constexpr int letter_index(char letter) { return letter == kMatch ? 0 : 1; }
inline constexpr std::array<char, 2> kLetters = {kMatch, kJoker};

/// Partial DFA over {#,-} in which every state is accepting.
///
/// A missing transition means rejection, so the language is prefix-closed and
/// always contains the empty word.
class SeedAutomaton {
 public:
  static constexpr int kNone = -1;
  using Row = std::array<int, 2>;

  SeedAutomaton(int start, std::vector<Row> transitions, std::vector<std::string> labels = {});

  int start() const { return start_; }
  std::size_t state_count() const { return transitions_.size(); }
  std::size_t transition_count() const;

  int next(int state, char letter) const {
    return transitions_[static_cast<std::size_t>(state)][static_cast<std::size_t>(letter_index(letter))];
  }
  std::span<const Row> transitions() const { return transitions_; }

  /// Human-readable description of each state; empty strings when unnamed.
  const std::vector<std::string>& labels() const { return labels_; }

  bool accepts(const Seed& word) const;

  /// Same transition structure and start state (labels ignored).
  bool same_structure(const SeedAutomaton& other) const {
    return start_ == other.start_ && transitions_ == other.transitions_;
  }

 private:
  int start_;
  std::vector<Row> transitions_;
  std::vector<std::string> labels_;
};

/// Letter-labeled graph on words of a fixed length; each vertex has at most
/// one successor per letter. Every vertex is initial, so the recognized
/// language is the set of labels of finite paths.
struct WordGraph {
  std::vector<std::string> vertices;
  std::vector<SeedAutomaton::Row> successors;

  /// True iff some path spells `word`.
  bool accepts(const Seed& word) const;
};

/// Subset construction from the set of all vertices of all graphs; the result
/// recognizes the union of the path languages. States are numbered in
/// breadth-first order ('#' before '-') and labeled with their vertex sets.
/// Throws ResourceLimitError once more than `max_states` states appear.
SeedAutomaton determinize(std::span<const WordGraph> graphs,
                          std::size_t max_states = std::numeric_limits<std::size_t>::max());

/// Minimal DFA of the same language (Hopcroft refinement after completing the
/// automaton with a rejecting sink). States are numbered breadth-first, so
/// equal languages give structurally identical results.
SeedAutomaton minimize(const SeedAutomaton& automaton);

/// An accepted word of exactly `length` letters with the most '#', the
/// lexicographically smallest ('#' < '-') among those.
/// Throws std::domain_error if no word of that length is accepted.
Seed max_weight_word(const SeedAutomaton& automaton, int length);

/// Same contract as above, computed on the graph directly (all vertices initial).
Seed max_weight_word(const WordGraph& graph, int length);

/// Graphviz rendering; states use their labels when present, else ids.
void write_dot(std::ostream& os, const SeedAutomaton& automaton, std::string_view name = "seeds");
void write_dot(std::ostream& os, const WordGraph& graph, std::string_view name = "debruijn");

}  // namespace seedlang
