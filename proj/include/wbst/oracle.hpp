// Reference model and differential-test runner. The model is a sorted
// association list — deliberately too simple to be wrong — and the runner
// replays the same operation script against it and the certified tree,
// reporting the first point of disagreement.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "wbst/bst.hpp"

namespace wbst {

// Sorted by key, unique keys; lookup of an absent key yields default_value.
struct ModelMap {
  std::vector<std::pair<Key, Value>> entries;
};

ModelMap model_insert(Key key, Value value, const ModelMap& m);
Value model_search(Key key, const ModelMap& m);

struct InsertOp {
  Key key{};
  Value value;
  friend bool operator==(const InsertOp&, const InsertOp&) = default;
};

struct SearchOp {
  Key key{};
  friend bool operator==(const SearchOp&, const SearchOp&) = default;
};

using Op = std::variant<InsertOp, SearchOp>;

struct Script {
  std::vector<Op> ops;
  std::uint64_t seed = 0;
};

// Deterministic script generation: identical (seed, op_count, key_range)
// always yields an identical script. Keys are uniform in
// [-key_range, key_range], inserts outnumber searches roughly 2:1, and
// generated values are short, printable, and never default_value.
// pre: key_range >= 1.
Script gen_script(std::uint64_t seed, std::size_t op_count, Key key_range);

struct DiffReport {
  bool ok = false;
  std::optional<std::size_t> first_divergence;
  bool final_tree_is_bst = false;
  // inorder of the final tree equals the model's entries
  bool final_matches_model = false;
  // populated when first_divergence is set
  Value diverged_tree_value;
  Value diverged_model_value;
};

// Replays the script against certified_empty/certified_insert/certified_search
// and against the model. ok iff no search diverged, the final tree is in
// search-tree order, and its inorder sequence equals the model's entries.
DiffReport run_differential(const Script& script);

// Same runner with the tree-side search swapped out; the seam tests use to
// verify that the harness actually detects divergence.
using TreeSearchFn = std::function<Value(Key, const CertifiedBst&)>;
DiffReport run_differential(const Script& script, const TreeSearchFn& tree_search);

}  // namespace wbst
