#include "commands.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "seedlang/seedlang.hpp"

namespace seedlang::cli {
namespace {

using Json = nlohmann::ordered_json;

CommandResult failure(const std::string& message) { return {2, {}, message}; }

CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const ResourceLimitError& e) {
    return failure(std::string("resource limit: ") + e.what());
  } catch (const std::bad_alloc&) {
    return failure("resource limit: out of memory");
  } catch (const std::logic_error& e) {
    return failure(e.what());
  } catch (const std::runtime_error& e) {
    return failure(e.what());
  }
}

std::string dump(const Json& json) { return json.dump() + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

CommandResult cmd_verify(std::string_view text, int m, int k, std::string_view method) {
  return guarded([&] {
    const bool all = method == "all";
    if (!all && method != "bruteforce" && method != "factors" && method != "automaton") {
      return failure("unknown method '" + std::string(method) + "'");
    }
    const Seed seed = Seed::parse(text);
    const ProblemSpec spec(m, k);
    const int l = margin(seed, spec);

    std::vector<bool> answers;
    const auto undetected = undetected_combinations(seed, spec);
    if (all || method == "bruteforce") answers.push_back(undetected.empty());
    if (all || method == "factors") answers.push_back(valid_factor_check(seed, l, k));
    if (all || method == "automaton") answers.push_back(union_automaton(l, k).accepts(seed));

    bool agree = true;
    for (bool answer : answers) agree = agree && answer == answers.front();

    Json out;
    out["solves"] = static_cast<bool>(answers.front());
    out["l"] = l;
    out["undetected"] = Json::array();
    for (const auto& combo : undetected) {
      out["undetected"].push_back(Json(std::vector<int>(combo.positions().begin(), combo.positions().end())));
    }
    out["methods_agree"] = agree;
    return CommandResult{answers.front() ? 0 : 1, dump(out), {}};
  });
}

CommandResult cmd_gensets(int l, int k) {
  return guarded([&] {
    const auto sets = enumerate_generating_sets(l, k);
    return CommandResult{0, to_json(sets) + "\n", {}};
  });
}

CommandResult cmd_automaton(const AutomatonRequest& request) {
  return guarded([&] {
    if (request.union_all && request.genset_file) return failure("--union cannot be combined with --genset-file");
    std::optional<SeedAutomaton> automaton;
    if (request.union_all) {
      automaton = union_automaton(request.l, request.k);
    } else {
      const auto sets = request.genset_file ? generating_sets_from_json(read_file(*request.genset_file))
                                            : enumerate_generating_sets(request.l, request.k);
      if (request.index < 0 || static_cast<std::size_t>(request.index) >= sets.size()) {
        return failure("index " + std::to_string(request.index) + " out of range: " + std::to_string(sets.size()) +
                       " generating set(s)");
      }
      automaton = build_automaton(sets[static_cast<std::size_t>(request.index)]);
    }
    if (request.minimize) automaton = minimize(*automaton);

    if (request.dot_path) {
      std::ofstream dot(*request.dot_path);
      if (!dot) return failure("cannot write " + *request.dot_path);
      write_dot(dot, *automaton);
    }
    Json out;
    out["states"] = automaton->state_count();
    out["transitions"] = automaton->transition_count();
    return CommandResult{0, dump(out), {}};
  });
}

CommandResult cmd_synthesize(int l, int k, int length, bool maximize) {
  return guarded([&] {
    const auto sets = enumerate_generating_sets(l, k);
    const Seed seed = synthesize(sets.front(), length, maximize);
    return CommandResult{0, seed.str() + "\n", {}};
  });
}

CommandResult cmd_search(int m, int k, std::optional<int> l_max) {
  return guarded([&] {
    const auto result = optimal_seed(ProblemSpec(m, k), l_max.value_or(m));
    Json out;
    out["m"] = result.m;
    out["k"] = result.k;
    out["best_weight"] = result.best_weight;
    out["witness"] = result.witness.str();
    out["l"] = result.margin;
    return CommandResult{0, dump(out), {}};
  });
}

CommandResult cmd_laser(std::string_view seed, int m) {
  return guarded([&] { return CommandResult{0, laser_table(Seed::parse(seed), ProblemSpec(m, 2)), {}}; });
}

CommandResult cmd_asymptotics(int k, int m_min, int m_max) {
  return guarded([&] {
    std::ostringstream tsv;
    write_tsv(tsv, asymptotics_table(k, m_min, m_max));
    return CommandResult{0, tsv.str(), {}};
  });
}

}  // namespace seedlang::cli
