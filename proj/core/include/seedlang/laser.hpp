#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seedlang/seed.hpp"

namespace seedlang {

/// A bi-infinite word over {#,-} with finitely many '#'.
///
/// Stored as a window plus the index of its first letter; every letter outside
/// the window is '-'. The window is kept trimmed so that it starts and ends
/// with '#' (or is empty for the all-'-' word), hence == is semantic equality.
class PaddedWord {
 public:
  PaddedWord() = default;
  PaddedWord(std::string_view letters, int offset);

  char letter_at(int i) const;
  bool is_match(int i) const { return letter_at(i) == kMatch; }

  int offset() const { return offset_; }
  const std::string& window() const { return window_; }
  bool all_jokers() const { return window_.empty(); }

  /// Letters at indices [from, from + n).
  std::string factor(int from, int n) const;

  friend bool operator==(const PaddedWord&, const PaddedWord&) = default;

 private:
  std::string window_;
  int offset_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PaddedWord& word);

/// The word ...--|-^margin Q--... : letter margin + j is Q_j.
PaddedWord embed(const Seed& seed, int margin);

/// sigma^i: the result v satisfies v_j = w_{j+i}.
PaddedWord shift(const PaddedWord& word, int i);

/// Position-wise OR with '#' dominant. Throws std::invalid_argument on an empty list.
PaddedWord or_words(std::span<const PaddedWord> words);

/// Longest block of consecutive '#'.
int max_run(const PaddedWord& word);

/// Longest '#' run obtainable by OR-ing independently shifted copies of the
/// (finite, '-'-padded) words. Exact. Throws std::invalid_argument on an empty list.
int sh_k(std::span<const Seed> words);

/// min(sh_k(words), cap). Cheaper than sh_k when only a threshold matters.
int sh_k_capped(std::span<const Seed> words, int cap);

/// Evaluates whether (⊕ sigma^{i_r}(w))_{margin - t} is '-' for w = embed(seed, margin).
/// Agrees with detects() for the (|Q| + margin, k) problem.
bool detection_criterion(const Seed& seed, int margin, const ErrorCombination& combo, int t);

/// The pairs {i,j} for which (⊕(sigma^i w, sigma^j w))[0, margin] is all '#'.
std::vector<ErrorCombination> laser_undetected_pairs(const Seed& seed, const ProblemSpec& spec);

/// Writes the text report for a k = 2 problem. Throws std::invalid_argument if k != 2.
void write_laser_table(std::ostream& os, const Seed& seed, const ProblemSpec& spec);
std::string laser_table(const Seed& seed, const ProblemSpec& spec);

}  // namespace seedlang
