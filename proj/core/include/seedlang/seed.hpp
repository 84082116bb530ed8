#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seedlang {

inline constexpr char kMatch = '#';
inline constexpr char kJoker = '-';

/// Raised when a request would exceed the enumeration limits of the library.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite word over {#,-}. Also used for generating-set tiles.
class Seed {
 public:
  Seed() = default;

  /// Parses a seed. '1' and '0' are accepted as aliases of '#' and '-'.
  /// Throws std::invalid_argument on any other character.
  static Seed parse(std::string_view text);

  static Seed matches(std::size_t n) { return Seed(std::string(n, kMatch), Trusted{}); }
  static Seed jokers(std::size_t n) { return Seed(std::string(n, kJoker), Trusted{}); }

  /// The word of length `length` whose '#' positions are the set bits of `mask`
  /// (bit j <-> letter j).
  static Seed from_mask(std::uint64_t mask, std::size_t length);

  std::size_t length() const { return letters_.size(); }
  std::size_t weight() const;
  bool empty() const { return letters_.empty(); }
  bool is_match(std::size_t j) const { return letters_[j] == kMatch; }
  char operator[](std::size_t j) const { return letters_[j]; }

  const std::string& str() const { return letters_; }

  /// Bit j set iff letter j is '#'. Requires length() <= 64.
  std::uint64_t mask() const;

  Seed substr(std::size_t pos, std::size_t n = std::string::npos) const {
    return Seed(letters_.substr(pos, n), Trusted{});
  }
  Seed operator+(const Seed& other) const { return Seed(letters_ + other.letters_, Trusted{}); }
  Seed& operator+=(char letter);

  friend auto operator<=>(const Seed&, const Seed&) = default;
  friend bool operator==(const Seed&, const Seed&) = default;

 private:
  struct Trusted {};
  Seed(std::string letters, Trusted) : letters_(std::move(letters)) {}

  std::string letters_;
};

std::ostream& operator<<(std::ostream& os, const Seed& seed);

/// Length m of the compared strings and number k of mismatches.
struct ProblemSpec {
  int m;
  int k;

  ProblemSpec(int m_, int k_);
};

/// A set of k mismatch positions in [0, m), stored strictly increasing.
class ErrorCombination {
 public:
  ErrorCombination(std::vector<int> positions, const ProblemSpec& spec);

  std::span<const int> positions() const { return positions_; }
  std::size_t size() const { return positions_.size(); }
  bool contains(int position) const;

  friend auto operator<=>(const ErrorCombination&, const ErrorCombination&) = default;
  friend bool operator==(const ErrorCombination&, const ErrorCombination&) = default;

 private:
  std::vector<int> positions_;
};

std::ostream& operator<<(std::ostream& os, const ErrorCombination& combo);

/// Calls `visit` with every k-subset of [0, m) in lexicographic order.
/// Iteration stops early when `visit` returns false. Returns false iff stopped.
bool for_each_combination(int m, int k, const std::function<bool(std::span<const int>)>& visit);

/// Seed margin m - |Q|. Throws std::invalid_argument if |Q| > m.
int margin(const Seed& seed, const ProblemSpec& spec);

/// True iff no '#' of the seed placed at offset t lands on an error.
/// Throws std::out_of_range unless 0 <= t <= margin.
bool detects(const Seed& seed, const ErrorCombination& combo, int t, const ProblemSpec& spec);

/// Exhaustive check of every error combination. Vacuously true when k > m.
bool solves(const Seed& seed, const ProblemSpec& spec);

/// Every combination detected at no position, in lexicographic order.
std::vector<ErrorCombination> undetected_combinations(const Seed& seed, const ProblemSpec& spec);

__extension__ using Count = unsigned __int128;

/// Exact binomial coefficient. Throws std::overflow_error past 128 bits.
Count binomial(int n, int r);

/// C(m,k) <= C(m - weight, k) * (margin + 1); necessary for any solving seed.
bool counting_bound_holds(const ProblemSpec& spec, std::size_t weight, int margin);

}  // namespace seedlang
