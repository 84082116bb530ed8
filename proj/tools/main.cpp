#include <iostream>
#include <optional>
#include <string>

#ifdef SEEDLANG_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include "commands.hpp"

namespace cli = seedlang::cli;

int main(int argc, char** argv) {
  CLI::App app{"Lossless spaced seeds: verification, generating sets, automata and optimal search"};
  app.require_subcommand(1);
  cli::CommandResult result;

  std::string seed;
  int m = 0;
  int k = 2;
  std::string method = "bruteforce";
  auto* verify = app.add_subcommand("verify", "Check whether a seed solves the (m,k) problem");
  verify->add_option("seed,--seed", seed, "Seed over {#,-} (1/0 accepted)")->required();
  verify->add_option("--m", m, "Length of the compared strings")->required();
  verify->add_option("--k", k, "Number of mismatches")->required();
  verify->add_option("--method", method, "bruteforce, factors, automaton or all")
      ->check(CLI::IsMember({"bruteforce", "factors", "automaton", "all"}));
  verify->callback([&] { result = cli::cmd_verify(seed, m, k, method); });

  int l = 0;
  auto* gensets = app.add_subcommand("gensets", "List all generating sets as JSON");
  gensets->add_option("--l", l, "Seed margin")->required();
  gensets->add_option("--k", k, "Number of mismatches")->required();
  gensets->callback([&] { result = cli::cmd_gensets(l, k); });

  cli::AutomatonRequest request;
  std::string genset_file;
  std::string dot_path;
  auto* automaton = app.add_subcommand("automaton", "Build a seed automaton and report its size");
  automaton->add_option("--l", request.l, "Seed margin");
  automaton->add_option("--k", request.k, "Number of mismatches");
  auto* index = automaton->add_option("--index", request.index, "Generating set, 0-based in sorted order");
  auto* union_flag = automaton->add_flag("--union", request.union_all, "Union over all generating sets");
  index->excludes(union_flag);
  automaton->add_option("--genset-file", genset_file, "Read generating sets from a JSON file");
  automaton->add_flag("--minimize", request.minimize, "Minimize the automaton");
  automaton->add_option("--dot", dot_path, "Write Graphviz output to this file");
  automaton->callback([&] {
    if (!genset_file.empty()) {
      request.genset_file = genset_file;
    } else if (!automaton->count("--l") || !automaton->count("--k")) {
      throw CLI::RequiredError("--l and --k (or --genset-file)");
    }
    if (!dot_path.empty()) request.dot_path = dot_path;
    result = cli::cmd_automaton(request);
  });

  int length = 0;
  bool maximize = false;
  auto* synthesize = app.add_subcommand("synthesize", "Build a seed from the first generating set");
  synthesize->add_option("--l", l, "Seed margin")->required();
  synthesize->add_option("--k", k, "Number of mismatches")->required();
  synthesize->add_option("--length", length, "Seed length")->required();
  synthesize->add_flag("--maximize", maximize, "Maximum weight instead of greedy");
  synthesize->callback([&] { result = cli::cmd_synthesize(l, k, length, maximize); });

  int l_max = 0;
  auto* search = app.add_subcommand("search", "Find a maximum-weight seed for the (m,k) problem");
  search->add_option("--m", m, "Length of the compared strings")->required();
  search->add_option("--k", k, "Number of mismatches")->required();
  auto* l_max_opt = search->add_option("--l-max", l_max, "Largest margin to try (default m)");
  search->callback([&] {
    result = cli::cmd_search(m, k, l_max_opt->count() ? std::optional<int>(l_max) : std::nullopt);
  });

  auto* laser = app.add_subcommand("laser", "Two-error detection table");
  laser->add_option("--seed", seed, "Seed over {#,-}")->required();
  laser->add_option("--m", m, "Length of the compared strings")->required();
  laser->callback([&] { result = cli::cmd_laser(seed, m); });

  int m_min = 0;
  int m_max = 0;
  auto* asymptotics = app.add_subcommand("asymptotics", "Optimal weights and margins over a range of m as TSV");
  asymptotics->add_option("--k", k, "Number of mismatches")->required();
  asymptotics->add_option("--m-min", m_min, "First m")->required();
  asymptotics->add_option("--m-max", m_max, "Last m")->required();
  asymptotics->callback([&] { result = cli::cmd_asymptotics(k, m_min, m_max); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::cout << result.payload;
  if (!result.diagnostic.empty()) std::cerr << "error: " << result.diagnostic << '\n';
  return result.exit_code;
}
