// Canonical one-line tree text and the line-oriented script format.
//
//   tree  := "e" | "(" key " " value " " tree " " tree ")"
//   key   := optionally signed 64-bit decimal
//   value := double-quoted string; escapes: \" \\ \n \t
//
// print_tree emits exactly one space between tokens and no trailing
// whitespace; parse_tree tolerates arbitrary whitespace between tokens and
// rejects everything else with a positioned error.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "wbst/bst.hpp"
#include "wbst/oracle.hpp"

namespace wbst {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

std::string print_tree(const BTree& t);
BTree parse_tree(std::string_view text);

// Scripts: one op per line — `insert <key> <quoted-value>` or
// `search <key>`. Blank lines and lines whose first non-blank character is
// '#' are skipped.
Script parse_script(std::string_view text);

// Double-quotes a value using the four escapes above.
std::string quote_value(std::string_view value);

// Renders an op in script-line syntax.
std::string print_op(const Op& op);

}  // namespace wbst
