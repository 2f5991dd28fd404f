#include "wbst/commands.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>
#include <vector>

#include "wbst/oracle.hpp"
#include "wbst/textio.hpp"

namespace wbst {

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return std::move(buf).str();
}

std::optional<BTree> load_tree(const std::string& path, std::ostream& err) {
  const auto text = read_file(path);
  if (!text) {
    err << "wbst: cannot read '" << path << "'\n";
    return std::nullopt;
  }
  try {
    return parse_tree(*text);
  } catch (const ParseError& e) {
    err << "wbst: " << path << ":" << e.what() << "\n";
    return std::nullopt;
  }
}

void print_result_line(std::ostream& out, const Value& value) {
  out << (value.empty() ? std::string_view{"<default>"} : std::string_view{value}) << "\n";
}

}  // namespace

int run_build(const std::string& script_path, const std::optional<std::string>& out_path,
              std::ostream& out, std::ostream& err) {
  const auto text = read_file(script_path);
  if (!text) {
    err << "wbst: cannot read '" << script_path << "'\n";
    return 2;
  }
  Script script;
  try {
    script = parse_script(*text);
  } catch (const ParseError& e) {
    err << "wbst: " << script_path << ":" << e.what() << "\n";
    return 2;
  }
  CertifiedBst tree = certified_empty();
  for (const Op& op : script.ops) {
    if (const auto* ins = std::get_if<InsertOp>(&op)) {
      tree = certified_insert(ins->key, ins->value, tree);
    } else {
      print_result_line(out, certified_search(std::get<SearchOp>(op).key, tree));
    }
  }
  const std::string tree_text = print_tree(tree.tree());
  if (out_path) {
    std::ofstream f(*out_path, std::ios::binary);
    f << tree_text << "\n";
    if (!f) {
      err << "wbst: cannot write '" << *out_path << "'\n";
      return 2;
    }
  } else {
    out << tree_text << "\n";
  }
  return 0;
}

int run_search(const std::string& tree_path, Key key, std::ostream& out, std::ostream& err) {
  const auto tree = load_tree(tree_path, err);
  if (!tree) return 2;
  print_result_line(out, search(key, *tree));
  return 0;
}

int run_check(const std::string& tree_path, std::ostream& out, std::ostream& err) {
  const auto tree = load_tree(tree_path, err);
  if (!tree) return 2;
  if (validate(bst_signature(), *tree) && is_bst(*tree)) {
    out << "BST\n";
    return 0;
  }
  out << "NOT-BST\n";
  return 1;
}

int run_stats(const std::string& tree_path, std::ostream& out, std::ostream& err) {
  const auto tree = load_tree(tree_path, err);
  if (!tree) return 2;
  const auto entries = inorder(*tree);
  std::vector<Key> keys;
  keys.reserve(entries.size());
  for (const auto& [key, value] : entries) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  const std::size_t distinct =
      static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
  out << "comp=" << comp(bst_signature(), *tree) << " nodes=" << entries.size()
      << " keys=" << distinct;
  if (keys.empty()) {
    out << " min=- max=-\n";
  } else {
    out << " min=" << keys.front() << " max=" << keys[distinct - 1] << "\n";
  }
  return 0;
}

int run_fuzz(std::uint64_t seed, std::uint64_t op_count, Key key_range, std::ostream& out,
             std::ostream& err) {
  const Script script = gen_script(seed, op_count, key_range);
  const DiffReport report = run_differential(script);
  if (report.ok) {
    err << "fuzz: ok (seed=" << seed << " ops=" << script.ops.size()
        << " key-range=" << key_range << ")\n";
    return 0;
  }
  if (report.first_divergence) {
    const std::size_t at = *report.first_divergence;
    out << "divergence at op " << at << ": " << print_op(script.ops[at])
        << " tree=" << quote_value(report.diverged_tree_value)
        << " model=" << quote_value(report.diverged_model_value) << "\n";
  }
  if (!report.final_tree_is_bst) out << "final tree violates search-tree order\n";
  if (!report.final_matches_model) out << "final tree contents differ from the model\n";
  return 1;
}

}  // namespace wbst
