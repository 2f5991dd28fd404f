#include "wbst/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace wbst {

namespace {

auto key_position(auto& entries, Key key) {
  return std::lower_bound(entries.begin(), entries.end(), key,
                          [](const std::pair<Key, Value>& entry, Key k) { return entry.first < k; });
}

Key draw_key(std::mt19937_64& rng, Key key_range) {
  const std::uint64_t magnitude = static_cast<std::uint64_t>(key_range);
  const std::uint64_t spread = 2 * magnitude + 1;
  const std::uint64_t offset = rng() % spread;
  return offset >= magnitude ? static_cast<Key>(offset - magnitude)
                             : -static_cast<Key>(magnitude - offset);
}

Value draw_value(std::mt19937_64& rng) {
  static constexpr char alphabet[] = "abcdefghijklmnopqrstuvwxyz0123456789";
  const std::size_t len = 1 + rng() % 8;  // never empty, so never default_value
  Value v;
  v.reserve(len);
  for (std::size_t i = 0; i < len; ++i) v.push_back(alphabet[rng() % 36]);
  return v;
}

}  // namespace

ModelMap model_insert(Key key, Value value, const ModelMap& m) {
  ModelMap out = m;
  const auto it = key_position(out.entries, key);
  if (it != out.entries.end() && it->first == key) {
    it->second = std::move(value);
  } else {
    out.entries.insert(it, {key, std::move(value)});
  }
  return out;
}

Value model_search(Key key, const ModelMap& m) {
  const auto it = key_position(m.entries, key);
  if (it != m.entries.end() && it->first == key) return it->second;
  return default_value;
}

Script gen_script(std::uint64_t seed, std::size_t op_count, Key key_range) {
  assert(key_range >= 1);
  std::mt19937_64 rng(seed);
  Script script;
  script.seed = seed;
  script.ops.reserve(op_count);
  for (std::size_t i = 0; i < op_count; ++i) {
    const bool insert_op = rng() % 3 != 2;
    const Key key = draw_key(rng, key_range);
    if (insert_op) {
      script.ops.emplace_back(InsertOp{key, draw_value(rng)});
    } else {
      script.ops.emplace_back(SearchOp{key});
    }
  }
  return script;
}

DiffReport run_differential(const Script& script) {
  return run_differential(
      script, [](Key key, const CertifiedBst& c) { return certified_search(key, c); });
}

DiffReport run_differential(const Script& script, const TreeSearchFn& tree_search) {
  DiffReport report;
  CertifiedBst tree = certified_empty();
  ModelMap model;
  for (std::size_t i = 0; i < script.ops.size(); ++i) {
    if (const auto* ins = std::get_if<InsertOp>(&script.ops[i])) {
      tree = certified_insert(ins->key, ins->value, tree);
      model = model_insert(ins->key, ins->value, model);
    } else {
      const SearchOp& op = std::get<SearchOp>(script.ops[i]);
      Value from_tree = tree_search(op.key, tree);
      Value from_model = model_search(op.key, model);
      if (from_tree != from_model && !report.first_divergence) {
        report.first_divergence = i;
        report.diverged_tree_value = std::move(from_tree);
        report.diverged_model_value = std::move(from_model);
      }
    }
  }
  report.final_tree_is_bst = is_bst(tree.tree());
  report.final_matches_model = inorder(tree.tree()) == model.entries;
  report.ok = !report.first_divergence && report.final_tree_is_bst && report.final_matches_model;
  return report;
}

}  // namespace wbst
