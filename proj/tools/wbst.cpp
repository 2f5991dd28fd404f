// wbst — build, query, audit, and differential-fuzz certified binary
// search trees from the command line.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "wbst/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"certified binary search trees: build, query, audit, fuzz"};
  app.require_subcommand(1);

  std::string script_path;
  std::string tree_path;
  std::string out_path;
  wbst::Key key = 0;
  std::uint64_t seed = 0;
  std::uint64_t ops = 1000;
  wbst::Key key_range = 100;

  auto* build = app.add_subcommand("build", "Replay a script and print the resulting tree");
  build->add_option("script", script_path, "script file (insert/search lines)")->required();
  auto* out_opt = build->add_option("-o,--output", out_path, "write the tree here instead of stdout");

  auto* search = app.add_subcommand("search", "Look up a key in a serialized tree");
  search->add_option("tree", tree_path, "tree file")->required();
  search->add_option("key", key, "key to look up")->required();

  auto* check = app.add_subcommand("check", "Verify search-tree order");
  check->add_option("tree", tree_path, "tree file")->required();

  auto* stats = app.add_subcommand("stats", "Print depth and size statistics");
  stats->add_option("tree", tree_path, "tree file")->required();

  auto* fuzz = app.add_subcommand("fuzz", "Differential-fuzz inserts/searches against a reference model");
  fuzz->add_option("--seed", seed, "script generator seed")->capture_default_str();
  fuzz->add_option("--ops", ops, "number of operations")->capture_default_str();
  fuzz->add_option("--key-range", key_range, "keys are drawn from [-R, R]")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (build->parsed()) {
    const std::optional<std::string> out_file =
        out_opt->count() > 0 ? std::optional<std::string>(out_path) : std::nullopt;
    return wbst::run_build(script_path, out_file, std::cout, std::cerr);
  }
  if (search->parsed()) return wbst::run_search(tree_path, key, std::cout, std::cerr);
  if (check->parsed()) return wbst::run_check(tree_path, std::cout, std::cerr);
  if (stats->parsed()) return wbst::run_stats(tree_path, std::cout, std::cerr);
  return wbst::run_fuzz(seed, ops, key_range, std::cout, std::cerr);
}
