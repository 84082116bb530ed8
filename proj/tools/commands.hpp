#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace seedlang::cli {

/// exit_code: 0 success, 1 negative answer, 2 usage or resource error.
/// `payload` goes to standard output, `diagnostic` (one line) to standard error.
struct CommandResult {
  int exit_code = 0;
  std::string payload;
  std::string diagnostic;
};

/// method is one of bruteforce, factors, automaton, all. The undetected list
/// always comes from the brute-force decider.
CommandResult cmd_verify(std::string_view seed, int m, int k, std::string_view method);

CommandResult cmd_gensets(int l, int k);

struct AutomatonRequest {
  int l = 0;
  int k = 1;
  int index = 0;
  bool union_all = false;
  std::optional<std::string> genset_file;
  bool minimize = false;
  std::optional<std::string> dot_path;
};

/// Payload is {"states": n, "transitions": n}; the DOT text goes to dot_path.
CommandResult cmd_automaton(const AutomatonRequest& request);

CommandResult cmd_synthesize(int l, int k, int length, bool maximize);

/// l_max defaults to m.
CommandResult cmd_search(int m, int k, std::optional<int> l_max);

/// Two-error table of the seed inside the (m,2) problem.
CommandResult cmd_laser(std::string_view seed, int m);

CommandResult cmd_asymptotics(int k, int m_min, int m_max);

}  // namespace seedlang::cli
