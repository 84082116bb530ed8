#include "seedlang/seed.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

namespace seedlang {

Seed Seed::parse(std::string_view text) {
  std::string letters;
  letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case kMatch:
      case '1':
        letters.push_back(kMatch);
        break;
      case kJoker:
      case '0':
        letters.push_back(kJoker);
        break;
      default:
        throw std::invalid_argument("invalid seed letter '" + std::string(1, c) +
                                    "' (expected '#', '-', '1' or '0')");
    }
  }
  return Seed(std::move(letters), Trusted{});
}

Seed Seed::from_mask(std::uint64_t mask, std::size_t length) {
  std::string letters(length, kJoker);
  for (std::size_t j = 0; j < length; ++j) {
    if ((mask >> j) & 1U) letters[j] = kMatch;
  }
  return Seed(std::move(letters), Trusted{});
}

std::size_t Seed::weight() const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), kMatch));
}

std::uint64_t Seed::mask() const {
  if (letters_.size() > 64) throw std::length_error("seed longer than 64 letters has no mask");
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < letters_.size(); ++j) {
    if (letters_[j] == kMatch) mask |= std::uint64_t{1} << j;
  }
  return mask;
}

Seed& Seed::operator+=(char letter) {
  if (letter != kMatch && letter != kJoker) throw std::invalid_argument("invalid seed letter");
  letters_.push_back(letter);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Seed& seed) { return os << seed.str(); }

ProblemSpec::ProblemSpec(int m_, int k_) : m(m_), k(k_) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (k < 1) throw std::invalid_argument("k must be positive");
}

ErrorCombination::ErrorCombination(std::vector<int> positions, const ProblemSpec& spec)
    : positions_(std::move(positions)) {
  if (positions_.size() != static_cast<std::size_t>(spec.k)) {
    throw std::invalid_argument("error combination must hold exactly k positions");
  }
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (positions_[i] < 0 || positions_[i] >= spec.m) {
      throw std::invalid_argument("error position outside [0, m)");
    }
    if (i > 0 && positions_[i] <= positions_[i - 1]) {
      throw std::invalid_argument("error positions must be strictly increasing");
    }
  }
}

bool ErrorCombination::contains(int position) const {
  return std::binary_search(positions_.begin(), positions_.end(), position);
}

std::ostream& operator<<(std::ostream& os, const ErrorCombination& combo) {
  os << '{';
  for (std::size_t i = 0; i < combo.size(); ++i) {
    if (i) os << ',';
    os << combo.positions()[i];
  }
  return os << '}';
}

bool for_each_combination(int m, int k, const std::function<bool(std::span<const int>)>& visit) {
  if (k < 0 || k > m) return true;
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    if (!visit(c)) return false;
    int i = k - 1;
    while (i >= 0 && c[i] == m - k + i) --i;
    if (i < 0) return true;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

int margin(const Seed& seed, const ProblemSpec& spec) {
  if (seed.length() > static_cast<std::size_t>(spec.m)) {
    throw std::invalid_argument("seed is longer than the compared strings (|Q| > m)");
  }
  return spec.m - static_cast<int>(seed.length());
}

namespace {

bool detects_at(const Seed& seed, std::span<const int> errors, int t) {
  for (std::size_t j = 0; j < seed.length(); ++j) {
    if (!seed.is_match(j)) continue;
    const int position = static_cast<int>(j) + t;
    if (std::find(errors.begin(), errors.end(), position) != errors.end()) return false;
  }
  return true;
}

bool detected_somewhere(const Seed& seed, std::span<const int> errors, int margin) {
  for (int t = 0; t <= margin; ++t) {
    if (detects_at(seed, errors, t)) return true;
  }
  return false;
}

}  // namespace

bool detects(const Seed& seed, const ErrorCombination& combo, int t, const ProblemSpec& spec) {
  const int l = margin(seed, spec);
  if (t < 0 || t > l) throw std::out_of_range("placement t outside [0, margin]");
  return detects_at(seed, combo.positions(), t);
}

bool solves(const Seed& seed, const ProblemSpec& spec) {
  const int l = margin(seed, spec);
  return for_each_combination(spec.m, spec.k, [&](std::span<const int> errors) {
    return detected_somewhere(seed, errors, l);
  });
}

std::vector<ErrorCombination> undetected_combinations(const Seed& seed, const ProblemSpec& spec) {
  const int l = margin(seed, spec);
  std::vector<ErrorCombination> missed;
  for_each_combination(spec.m, spec.k, [&](std::span<const int> errors) {
    if (!detected_somewhere(seed, errors, l)) {
      missed.emplace_back(std::vector<int>(errors.begin(), errors.end()), spec);
    }
    return true;
  });
  return missed;
}

Count binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  Count result = 1;
  constexpr auto kMax = ~static_cast<Count>(0);
  for (int i = 1; i <= r; ++i) {
    const auto factor = static_cast<Count>(n - r + i);
    if (result > kMax / factor) throw std::overflow_error("binomial coefficient overflow");
    // result * factor is divisible by i since it equals C(n-r+i, i) * i.
    result = result * factor / static_cast<Count>(i);
  }
  return result;
}

bool counting_bound_holds(const ProblemSpec& spec, std::size_t weight, int margin) {
  const int free_positions = spec.m - static_cast<int>(weight);
  const auto lhs = binomial(spec.m, spec.k);
  const auto rhs = binomial(free_positions, spec.k) * static_cast<Count>(margin + 1);
  return lhs <= rhs;
}

}  // namespace seedlang
