#include "seedlang/laser.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

namespace seedlang {

PaddedWord::PaddedWord(std::string_view letters, int offset) {
  for (char c : letters) {
    if (c != kMatch && c != kJoker) throw std::invalid_argument("invalid letter in padded word");
  }
  const auto first = letters.find(kMatch);
  if (first == std::string_view::npos) return;
  const auto last = letters.rfind(kMatch);
  window_ = std::string(letters.substr(first, last - first + 1));
  offset_ = offset + static_cast<int>(first);
}

char PaddedWord::letter_at(int i) const {
  const int local = i - offset_;
  if (local < 0 || local >= static_cast<int>(window_.size())) return kJoker;
  return window_[static_cast<std::size_t>(local)];
}

std::string PaddedWord::factor(int from, int n) const {
  std::string out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) out.push_back(letter_at(from + i));
  return out;
}

std::ostream& operator<<(std::ostream& os, const PaddedWord& word) {
  if (word.all_jokers()) return os << "...--...";
  return os << "...--[" << word.offset() << "]" << word.window() << "--...";
}

PaddedWord embed(const Seed& seed, int margin) {
  if (margin < 0) throw std::invalid_argument("margin must be non-negative");
  return PaddedWord(seed.str(), margin);
}

PaddedWord shift(const PaddedWord& word, int i) {
  return PaddedWord(word.window(), word.offset() - i);
}

PaddedWord or_words(std::span<const PaddedWord> words) {
  if (words.empty()) throw std::invalid_argument("or_words needs at least one word");
  int lo = 0;
  int hi = 0;
  bool any = false;
  for (const auto& w : words) {
    if (w.all_jokers()) continue;
    const int end = w.offset() + static_cast<int>(w.window().size());
    lo = any ? std::min(lo, w.offset()) : w.offset();
    hi = any ? std::max(hi, end) : end;
    any = true;
  }
  if (!any) return {};
  std::string letters(static_cast<std::size_t>(hi - lo), kJoker);
  for (const auto& w : words) {
    for (std::size_t j = 0; j < w.window().size(); ++j) {
      if (w.window()[j] == kMatch) letters[static_cast<std::size_t>(w.offset() - lo) + j] = kMatch;
    }
  }
  return PaddedWord(letters, lo);
}

int max_run(const PaddedWord& word) {
  int best = 0;
  int run = 0;
  for (char c : word.window()) {
    run = (c == kMatch) ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

namespace {

// Bit rows over [0, width), `limbs` 64-bit words each, stored back to back.
struct RowSet {
  std::size_t limbs = 0;
  std::vector<std::uint64_t> data;

  std::size_t size() const { return limbs == 0 ? 0 : data.size() / limbs; }
  const std::uint64_t* row(std::size_t r) const { return data.data() + r * limbs; }
};

int prefix_ones(const std::uint64_t* row, std::size_t limbs, int width) {
  int count = 0;
  for (std::size_t l = 0; l < limbs; ++l) {
    const int ones = std::countr_one(row[l]);
    count += ones;
    if (ones < 64) break;
  }
  return std::min(count, width);
}

// Distinct restrictions to [0, width) of the word under every shift that
// places at least one of its letters inside the window.
RowSet shifted_rows(const Seed& word, int width) {
  RowSet rows;
  rows.limbs = (static_cast<std::size_t>(width) + 63) / 64;
  const int len = static_cast<int>(word.length());
  // The all-'-' row stands for a word shifted entirely out of the window.
  std::vector<std::vector<std::uint64_t>> distinct{std::vector<std::uint64_t>(rows.limbs, 0)};
  for (int s = -(len - 1); s <= width - 1; ++s) {
    std::vector<std::uint64_t> row(rows.limbs, 0);
    for (int j = 0; j < len; ++j) {
      const int p = j + s;
      if (p < 0 || p >= width || !word.is_match(static_cast<std::size_t>(j))) continue;
      row[static_cast<std::size_t>(p) / 64] |= std::uint64_t{1} << (p % 64);
    }
    distinct.push_back(std::move(row));
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (const auto& row : distinct) rows.data.insert(rows.data.end(), row.begin(), row.end());
  return rows;
}

class RunSearch {
 public:
  RunSearch(std::span<const Seed> words, int width) : width_(width) {
    limbs_ = (static_cast<std::size_t>(width) + 63) / 64;
    for (const auto& w : words) rows_.push_back(shifted_rows(w, width));
    // Fewest alternatives first keeps the search tree narrow near the root.
    std::sort(rows_.begin(), rows_.end(),
              [](const RowSet& a, const RowSet& b) { return a.size() < b.size(); });
    acc_.assign((rows_.size() + 1) * limbs_, 0);
  }

  int run() {
    descend(0);
    return best_;
  }

 private:
  void descend(std::size_t depth) {
    const std::uint64_t* current = acc_.data() + depth * limbs_;
    if (depth == rows_.size()) {
      best_ = std::max(best_, prefix_ones(current, limbs_, width_));
      return;
    }
    std::uint64_t* next = acc_.data() + (depth + 1) * limbs_;
    const RowSet& choices = rows_[depth];
    for (std::size_t r = 0; r < choices.size() && best_ < width_; ++r) {
      const std::uint64_t* row = choices.row(r);
      for (std::size_t l = 0; l < limbs_; ++l) next[l] = current[l] | row[l];
      descend(depth + 1);
    }
  }

  int width_;
  std::size_t limbs_ = 0;
  std::vector<RowSet> rows_;
  std::vector<std::uint64_t> acc_;
  int best_ = 0;
};

}  // namespace

int sh_k_capped(std::span<const Seed> words, int cap) {
  if (words.empty()) throw std::invalid_argument("sh_k needs at least one word");
  // Every run can be translated to start at index 0, and it cannot be longer
  // than the total number of '#'. Words that miss [0, width) only add '#'
  // elsewhere, so restricting each word to shifts touching the window is exact.
  std::size_t total = 0;
  for (const auto& w : words) total += w.weight();
  const int width = static_cast<int>(std::min<std::size_t>(total, static_cast<std::size_t>(std::max(cap, 0))));
  if (width == 0) return 0;
  return RunSearch(words, width).run();
}

int sh_k(std::span<const Seed> words) {
  std::size_t total = 0;
  for (const auto& w : words) total += w.weight();
  return sh_k_capped(words, static_cast<int>(total));
}

bool detection_criterion(const Seed& seed, int margin, const ErrorCombination& combo, int t) {
  if (t < 0 || t > margin) throw std::out_of_range("placement t outside [0, margin]");
  const PaddedWord w = embed(seed, margin);
  std::vector<PaddedWord> shifted;
  shifted.reserve(combo.size());
  for (int i : combo.positions()) shifted.push_back(shift(w, i));
  return or_words(shifted).letter_at(margin - t) == kJoker;
}

namespace {

bool pair_undetected(const PaddedWord& w, int i, int j, int margin) {
  const PaddedWord both[] = {shift(w, i), shift(w, j)};
  return or_words(both).factor(0, margin + 1) == std::string(static_cast<std::size_t>(margin + 1), kMatch);
}

}  // namespace

std::vector<ErrorCombination> laser_undetected_pairs(const Seed& seed, const ProblemSpec& spec) {
  if (spec.k != 2) throw std::invalid_argument("the laser table is defined for k = 2 only");
  const int l = margin(seed, spec);
  const PaddedWord w = embed(seed, l);
  std::vector<ErrorCombination> pairs;
  for (int i = 0; i < spec.m; ++i) {
    for (int j = i + 1; j < spec.m; ++j) {
      if (pair_undetected(w, i, j, l)) pairs.emplace_back(std::vector<int>{i, j}, spec);
    }
  }
  return pairs;
}

void write_laser_table(std::ostream& os, const Seed& seed, const ProblemSpec& spec) {
  const auto pairs = laser_undetected_pairs(seed, spec);
  const int l = margin(seed, spec);
  const PaddedWord w = embed(seed, l);

  const int width = static_cast<int>(std::to_string(spec.m - 1).size()) + 1;
  auto cell = [&](const std::string& text) {
    return std::string(static_cast<std::size_t>(width) - std::min<std::size_t>(text.size(), width), ' ') + text;
  };

  os << "seed " << seed.str() << " m=" << spec.m << " k=" << spec.k << " l=" << l << '\n';
  os << cell("") << ' ';
  for (int j = 0; j < spec.m; ++j) os << cell(std::to_string(j));
  os << '\n';
  os << cell("w") << ' ';
  for (int j = 0; j < spec.m; ++j) os << cell(std::string(1, w.letter_at(j)));
  os << '\n';

  std::vector<std::vector<bool>> missed(static_cast<std::size_t>(spec.m),
                                        std::vector<bool>(static_cast<std::size_t>(spec.m), false));
  for (const auto& p : pairs) {
    missed[static_cast<std::size_t>(p.positions()[0])][static_cast<std::size_t>(p.positions()[1])] = true;
  }
  for (int i = 0; i < spec.m; ++i) {
    os << cell(std::to_string(i)) << ' ';
    for (int j = 0; j < spec.m; ++j) {
      if (j <= i) {
        os << cell("");
      } else {
        os << cell(missed[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ? "X" : ".");
      }
    }
    os << '\n';
  }
  os << "UNDETECTED:";
  for (const auto& p : pairs) os << ' ' << p;
  os << '\n';
}

std::string laser_table(const Seed& seed, const ProblemSpec& spec) {
  std::ostringstream os;
  write_laser_table(os, seed, spec);
  return os.str();
}

}  // namespace seedlang
