#include "seedlang/automaton.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <queue>

namespace seedlang {

SeedAutomaton::SeedAutomaton(int start, std::vector<Row> transitions, std::vector<std::string> labels)
    : start_(start), transitions_(std::move(transitions)), labels_(std::move(labels)) {
  const int n = static_cast<int>(transitions_.size());
  if (start_ < 0 || start_ >= n) throw std::invalid_argument("start state out of range");
  for (const auto& row : transitions_) {
    for (int target : row) {
      if (target != kNone && (target < 0 || target >= n)) {
        throw std::invalid_argument("transition target out of range");
      }
    }
  }
  if (labels_.empty()) labels_.assign(transitions_.size(), std::string{});
  if (labels_.size() != transitions_.size()) throw std::invalid_argument("one label per state expected");
}

std::size_t SeedAutomaton::transition_count() const {
  std::size_t count = 0;
  for (const auto& row : transitions_) {
    count += static_cast<std::size_t>(row[0] != kNone) + static_cast<std::size_t>(row[1] != kNone);
  }
  return count;
}

bool SeedAutomaton::accepts(const Seed& word) const {
  int state = start_;
  for (char c : word.str()) {
    state = next(state, c);
    if (state == kNone) return false;
  }
  return true;
}

bool WordGraph::accepts(const Seed& word) const {
  std::vector<char> alive(vertices.size(), 1);
  std::vector<char> next(vertices.size(), 0);
  bool any = !vertices.empty();
  for (char c : word.str()) {
    std::fill(next.begin(), next.end(), 0);
    any = false;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      if (!alive[v]) continue;
      const int to = successors[v][static_cast<std::size_t>(letter_index(c))];
      if (to == SeedAutomaton::kNone) continue;
      next[static_cast<std::size_t>(to)] = 1;
      any = true;
    }
    alive.swap(next);
    if (!any) return false;
  }
  return any || word.empty();
}

SeedAutomaton determinize(std::span<const WordGraph> graphs, std::size_t max_states) {
  struct Vertex {
    std::size_t graph;
    int local;
  };
  std::vector<Vertex> vertices;
  std::vector<std::size_t> base;
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    base.push_back(vertices.size());
    for (std::size_t v = 0; v < graphs[g].vertices.size(); ++v) vertices.push_back({g, static_cast<int>(v)});
  }
  if (vertices.empty()) throw std::invalid_argument("cannot determinize an empty graph");

  using Subset = std::vector<int>;
  std::map<Subset, int> index;
  std::vector<Subset> subsets;
  std::vector<SeedAutomaton::Row> rows;

  Subset all(vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  index.emplace(all, 0);
  subsets.push_back(all);
  rows.push_back({SeedAutomaton::kNone, SeedAutomaton::kNone});

  for (std::size_t s = 0; s < subsets.size(); ++s) {
    for (std::size_t a = 0; a < 2; ++a) {
      Subset target;
      for (int id : subsets[s]) {
        const auto& v = vertices[static_cast<std::size_t>(id)];
        const int to = graphs[v.graph].successors[static_cast<std::size_t>(v.local)][a];
        if (to != SeedAutomaton::kNone) target.push_back(static_cast<int>(base[v.graph]) + to);
      }
      if (target.empty()) continue;
      std::sort(target.begin(), target.end());
      target.erase(std::unique(target.begin(), target.end()), target.end());
      auto [it, inserted] = index.emplace(target, static_cast<int>(subsets.size()));
      if (inserted) {
        if (subsets.size() >= max_states) {
          throw ResourceLimitError("subset construction exceeded " + std::to_string(max_states) + " states");
        }
        subsets.push_back(std::move(target));
        rows.push_back({SeedAutomaton::kNone, SeedAutomaton::kNone});
      }
      rows[s][a] = it->second;
    }
  }

  std::vector<std::string> labels;
  labels.reserve(subsets.size());
  for (const auto& subset : subsets) {
    std::string label;
    for (int id : subset) {
      const auto& v = vertices[static_cast<std::size_t>(id)];
      if (!label.empty()) label += ' ';
      if (graphs.size() > 1) label += 'G' + std::to_string(v.graph + 1) + ':';
      const auto& word = graphs[v.graph].vertices[static_cast<std::size_t>(v.local)];
      label += word.empty() ? std::string("ε") : word;
    }
    labels.push_back(std::move(label));
  }
  return SeedAutomaton(0, std::move(rows), std::move(labels));
}

SeedAutomaton minimize(const SeedAutomaton& automaton) {
  const int n = static_cast<int>(automaton.state_count());
  const int sink = n;
  const int total = n + 1;

  auto delta = [&](int q, std::size_t a) {
    if (q == sink) return sink;
    const int to = automaton.transitions()[static_cast<std::size_t>(q)][a];
    return to == SeedAutomaton::kNone ? sink : to;
  };

  std::array<std::vector<std::vector<int>>, 2> inverse;
  for (std::size_t a = 0; a < 2; ++a) {
    inverse[a].assign(static_cast<std::size_t>(total), {});
    for (int q = 0; q < total; ++q) inverse[a][static_cast<std::size_t>(delta(q, a))].push_back(q);
  }

  // Accepting states vs. the sink.
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(static_cast<std::size_t>(total), 0);
  {
    std::vector<int> accepting(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) accepting[static_cast<std::size_t>(q)] = q;
    blocks.push_back(std::move(accepting));
    blocks.push_back({sink});
    block_of[static_cast<std::size_t>(sink)] = 1;
  }

  std::deque<std::pair<int, std::size_t>> work;
  std::vector<std::array<bool, 2>> queued(blocks.size(), {false, false});
  auto enqueue = [&](int b, std::size_t a) {
    if (queued[static_cast<std::size_t>(b)][a]) return;
    queued[static_cast<std::size_t>(b)][a] = true;
    work.emplace_back(b, a);
  };
  for (std::size_t a = 0; a < 2; ++a) enqueue(1, a);

  std::vector<std::vector<int>> touched(blocks.size());
  std::vector<char> marked(static_cast<std::size_t>(total), 0);
  while (!work.empty()) {
    const auto [splitter, a] = work.front();
    work.pop_front();
    queued[static_cast<std::size_t>(splitter)][a] = false;

    std::vector<int> hit_blocks;
    for (int q : blocks[static_cast<std::size_t>(splitter)]) {
      for (int p : inverse[a][static_cast<std::size_t>(q)]) {
        if (marked[static_cast<std::size_t>(p)]) continue;
        marked[static_cast<std::size_t>(p)] = 1;
        const int b = block_of[static_cast<std::size_t>(p)];
        if (touched[static_cast<std::size_t>(b)].empty()) hit_blocks.push_back(b);
        touched[static_cast<std::size_t>(b)].push_back(p);
      }
    }

    for (int b : hit_blocks) {
      auto& inside = touched[static_cast<std::size_t>(b)];
      auto& members = blocks[static_cast<std::size_t>(b)];
      if (inside.size() < members.size()) {
        const int fresh = static_cast<int>(blocks.size());
        std::vector<int> rest;
        rest.reserve(members.size() - inside.size());
        for (int q : members) {
          if (!marked[static_cast<std::size_t>(q)]) rest.push_back(q);
        }
        for (int q : inside) block_of[static_cast<std::size_t>(q)] = fresh;
        members = std::move(rest);
        blocks.push_back(inside);
        queued.push_back({false, false});
        touched.emplace_back();
        for (std::size_t c = 0; c < 2; ++c) {
          if (queued[static_cast<std::size_t>(b)][c]) {
            enqueue(fresh, c);
          } else {
            const bool fresh_smaller = blocks[static_cast<std::size_t>(fresh)].size() <=
                                       blocks[static_cast<std::size_t>(b)].size();
            enqueue(fresh_smaller ? fresh : b, c);
          }
        }
      }
    }
    for (int b : hit_blocks) {
      for (int q : touched[static_cast<std::size_t>(b)]) marked[static_cast<std::size_t>(q)] = 0;
      touched[static_cast<std::size_t>(b)].clear();
    }
  }

  const int sink_block = block_of[static_cast<std::size_t>(sink)];
  std::vector<int> number(blocks.size(), SeedAutomaton::kNone);
  std::vector<int> order;
  const int start_block = block_of[static_cast<std::size_t>(automaton.start())];
  number[static_cast<std::size_t>(start_block)] = 0;
  order.push_back(start_block);
  std::vector<SeedAutomaton::Row> rows;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int b = order[i];
    const int representative = blocks[static_cast<std::size_t>(b)].front();
    SeedAutomaton::Row row{SeedAutomaton::kNone, SeedAutomaton::kNone};
    for (std::size_t a = 0; a < 2; ++a) {
      const int target = block_of[static_cast<std::size_t>(delta(representative, a))];
      if (target == sink_block) continue;
      if (number[static_cast<std::size_t>(target)] == SeedAutomaton::kNone) {
        number[static_cast<std::size_t>(target)] = static_cast<int>(order.size());
        order.push_back(target);
      }
      row[a] = number[static_cast<std::size_t>(target)];
    }
    rows.push_back(row);
  }
  return SeedAutomaton(0, std::move(rows));
}

Seed max_weight_word(const SeedAutomaton& automaton, int length) {
  if (length < 0) throw std::invalid_argument("length must be non-negative");
  constexpr int kUnreachable = std::numeric_limits<int>::min();
  const std::size_t n = automaton.state_count();
  // best[i][q]: most '#' in a word of i letters readable from q.
  std::vector<std::vector<int>> best(static_cast<std::size_t>(length) + 1, std::vector<int>(n, kUnreachable));
  std::fill(best[0].begin(), best[0].end(), 0);
  for (std::size_t i = 1; i <= static_cast<std::size_t>(length); ++i) {
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t a = 0; a < 2; ++a) {
        const int to = automaton.transitions()[q][a];
        if (to == SeedAutomaton::kNone) continue;
        const int tail = best[i - 1][static_cast<std::size_t>(to)];
        if (tail == kUnreachable) continue;
        best[i][q] = std::max(best[i][q], tail + (a == 0 ? 1 : 0));
      }
    }
  }
  int state = automaton.start();
  if (best[static_cast<std::size_t>(length)][static_cast<std::size_t>(state)] == kUnreachable) {
    throw std::domain_error("automaton accepts no word of length " + std::to_string(length));
  }
  Seed word;
  for (std::size_t remaining = static_cast<std::size_t>(length); remaining > 0; --remaining) {
    const int goal = best[remaining][static_cast<std::size_t>(state)];
    for (std::size_t a = 0; a < 2; ++a) {
      const int to = automaton.transitions()[static_cast<std::size_t>(state)][a];
      if (to == SeedAutomaton::kNone) continue;
      const int tail = best[remaining - 1][static_cast<std::size_t>(to)];
      if (tail != kUnreachable && tail + (a == 0 ? 1 : 0) == goal) {
        word += kLetters[a];
        state = to;
        break;
      }
    }
  }
  return word;
}

Seed max_weight_word(const WordGraph& graph, int length) {
  if (length < 0) throw std::invalid_argument("length must be non-negative");
  constexpr int kUnreachable = std::numeric_limits<int>::min();
  const std::size_t n = graph.vertices.size();
  const std::size_t rows = static_cast<std::size_t>(length) + 1;
  // best[i * n + v]: most '#' on a path of i letters leaving v.
  std::vector<int> best(rows * n, kUnreachable);
  std::fill(best.begin(), best.begin() + static_cast<std::ptrdiff_t>(n), 0);
  for (std::size_t i = 1; i < rows; ++i) {
    for (std::size_t v = 0; v < n; ++v) {
      int value = kUnreachable;
      for (std::size_t a = 0; a < 2; ++a) {
        const int to = graph.successors[v][a];
        if (to == SeedAutomaton::kNone) continue;
        const int tail = best[(i - 1) * n + static_cast<std::size_t>(to)];
        if (tail != kUnreachable) value = std::max(value, tail + (a == 0 ? 1 : 0));
      }
      best[i * n + v] = value;
    }
  }

  // Walk the subset of vertices still consistent with the prefix chosen so far.
  std::vector<char> alive(n, 1);
  std::vector<char> next(n, 0);
  auto goal_of = [&](const std::vector<char>& set, std::size_t remaining) {
    int goal = kUnreachable;
    for (std::size_t v = 0; v < n; ++v) {
      if (set[v]) goal = std::max(goal, best[remaining * n + v]);
    }
    return goal;
  };
  int goal = goal_of(alive, static_cast<std::size_t>(length));
  if (n == 0 || goal == kUnreachable) {
    if (length == 0) return {};
    throw std::domain_error("graph spells no word of length " + std::to_string(length));
  }
  Seed word;
  for (std::size_t remaining = static_cast<std::size_t>(length); remaining > 0; --remaining) {
    for (std::size_t a = 0; a < 2; ++a) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t v = 0; v < n; ++v) {
        const int to = graph.successors[v][a];
        if (alive[v] && to != SeedAutomaton::kNone) next[static_cast<std::size_t>(to)] = 1;
      }
      const int tail = goal_of(next, remaining - 1);
      if (tail != kUnreachable && tail + (a == 0 ? 1 : 0) == goal) {
        word += kLetters[a];
        goal = tail;
        alive.swap(next);
        break;
      }
    }
  }
  return word;
}

namespace {

std::string dot_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

void write_dot(std::ostream& os, const SeedAutomaton& automaton, std::string_view name) {
  os << "digraph " << name << " {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=doublecircle];\n";
  os << "  __start [shape=point];\n";
  os << "  __start -> " << automaton.start() << ";\n";
  for (std::size_t q = 0; q < automaton.state_count(); ++q) {
    const auto& label = automaton.labels()[q];
    os << "  " << q << " [label=\"" << (label.empty() ? std::to_string(q) : dot_escape(label)) << "\"];\n";
  }
  for (std::size_t q = 0; q < automaton.state_count(); ++q) {
    for (std::size_t a = 0; a < 2; ++a) {
      const int to = automaton.transitions()[q][a];
      if (to == SeedAutomaton::kNone) continue;
      os << "  " << q << " -> " << to << " [label=\"" << kLetters[a] << "\"];\n";
    }
  }
  os << "}\n";
}

void write_dot(std::ostream& os, const WordGraph& graph, std::string_view name) {
  os << "digraph " << name << " {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    const auto& word = graph.vertices[v];
    os << "  " << v << " [label=\"" << (word.empty() ? std::string("ε") : word) << "\"];\n";
  }
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    for (std::size_t a = 0; a < 2; ++a) {
      const int to = graph.successors[v][a];
      if (to == SeedAutomaton::kNone) continue;
      os << "  " << v << " -> " << to << " [label=\"" << kLetters[a] << "\"];\n";
    }
  }
  os << "}\n";
}

}  // namespace seedlang
