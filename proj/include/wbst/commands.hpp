// Command implementations behind the CLI binary, stream-injected so tests
// can drive them directly. Exit codes: 0 success/holds, 1 invariant
// violation or divergence, 2 usage or parse error.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "wbst/bst.hpp"

namespace wbst {

// Replays a script: inserts build the tree, searches print one result line
// each; the final tree text goes to out_path when given, stdout otherwise.
int run_build(const std::string& script_path, const std::optional<std::string>& out_path,
              std::ostream& out, std::ostream& err);

// Prints the value bound to key, or `<default>` on a miss.
int run_search(const std::string& tree_path, Key key, std::ostream& out, std::ostream& err);

// Prints BST (exit 0) or NOT-BST (exit 1).
int run_check(const std::string& tree_path, std::ostream& out, std::ostream& err);

// Prints `comp=<n> nodes=<n> keys=<n> min=<k|-> max=<k|->`.
int run_stats(const std::string& tree_path, std::ostream& out, std::ostream& err);

// Differential fuzzing; exit 1 with a report on stdout when the tree and
// the model disagree.
int run_fuzz(std::uint64_t seed, std::uint64_t op_count, Key key_range, std::ostream& out,
             std::ostream& err);

}  // namespace wbst
