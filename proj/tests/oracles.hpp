#pragma once

// Small independent reference implementations, written straight from the
// definitions on plain strings and bitmasks. They share nothing with the
// library beyond the alphabet.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::vector<std::string> all_words(int length) {
  std::vector<std::string> words;
  for (std::uint32_t bits = 0; bits < (1u << length); ++bits) {
    std::string w(static_cast<std::size_t>(length), '-');
    for (int i = 0; i < length; ++i) {
      if (bits >> i & 1u) w[static_cast<std::size_t>(i)] = '#';
    }
    words.push_back(w);
  }
  std::sort(words.begin(), words.end());
  return words;
}

inline std::vector<std::string> words_up_to(int length) {
  std::vector<std::string> words;
  for (int n = 0; n <= length; ++n) {
    auto level = all_words(n);
    words.insert(words.end(), level.begin(), level.end());
  }
  return words;
}

inline int weight(const std::string& w) { return static_cast<int>(std::count(w.begin(), w.end(), '#')); }

// Error positions as a bitmask over [0, m).
inline bool hits(const std::string& seed, std::uint32_t errors, int t) {
  for (std::size_t j = 0; j < seed.size(); ++j) {
    if (seed[j] == '#' && (errors >> (static_cast<int>(j) + t) & 1u)) return true;
  }
  return false;
}

inline bool solves(const std::string& seed, int m, int k) {
  const int l = m - static_cast<int>(seed.size());
  for (std::uint32_t errors = 0; errors < (1u << m); ++errors) {
    if (std::popcount(errors) != k) continue;
    bool seen = false;
    for (int t = 0; t <= l && !seen; ++t) seen = !hits(seed, errors, t);
    if (!seen) return false;
  }
  return true;
}

inline bool has_run(const std::string& w, int n) { return w.find(std::string(static_cast<std::size_t>(n), '#')) != std::string::npos; }

// Longest '#'-run of the OR of the words placed at every combination of
// offsets in a window wide enough that all overlaps are covered.
inline int sh(const std::vector<std::string>& words) {
  int span = 0;
  for (const auto& w : words) span += static_cast<int>(w.size());
  const int width = 3 * span + 1;
  int best = 0;
  std::vector<int> offsets(words.size(), 0);
  offsets[0] = span;
  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == words.size()) {
      std::string line(static_cast<std::size_t>(width), '-');
      for (std::size_t w = 0; w < words.size(); ++w) {
        for (std::size_t j = 0; j < words[w].size(); ++j) {
          if (words[w][j] == '#') line[static_cast<std::size_t>(offsets[w]) + j] = '#';
        }
      }
      int run = 0;
      for (char c : line) {
        run = c == '#' ? run + 1 : 0;
        best = std::max(best, run);
      }
      return;
    }
    for (int o = 0; o <= 2 * span; ++o) {
      offsets[i] = o;
      place(i + 1);
    }
  };
  place(1);
  return best;
}

// Every word whose (l+1)-factors all belong to `tiles`, or, if shorter, is a
// factor of a tile.
inline bool generated(const std::string& w, const std::set<std::string>& tiles, int l) {
  const std::size_t n = static_cast<std::size_t>(l) + 1;
  if (w.size() < n) {
    for (const auto& tile : tiles) {
      if (tile.find(w) != std::string::npos) return true;
    }
    return false;
  }
  for (std::size_t i = 0; i + n <= w.size(); ++i) {
    if (!tiles.count(w.substr(i, n))) return false;
  }
  return true;
}

}  // namespace oracle
