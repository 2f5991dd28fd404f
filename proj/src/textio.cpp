#include "wbst/textio.hpp"

#include <cassert>
#include <charconv>
#include <optional>
#include <vector>

namespace wbst {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

class Cursor {
 public:
  explicit Cursor(std::string_view text, std::size_t first_line = 1)
      : text_(text), line_(first_line) {}

  bool at_end() const noexcept { return pos_ == text_.size(); }

  char peek() const noexcept {
    assert(!at_end());
    return text_[pos_];
  }

  char take() noexcept {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (!at_end() && is_space(peek())) take();
  }

  std::string_view rest() const noexcept { return text_.substr(pos_); }

  // Only for runs known to contain no newline.
  void advance(std::size_t n) noexcept {
    pos_ += n;
    column_ += n;
  }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_ = 1;
};

Key scan_key(Cursor& cur) {
  if (cur.at_end()) cur.fail("expected a key");
  std::string_view rest = cur.rest();
  std::size_t sign = 0;
  if (rest.front() == '+') sign = 1;  // from_chars handles '-' but not '+'
  Key key = 0;
  const auto [ptr, ec] = std::from_chars(rest.data() + sign, rest.data() + rest.size(), key);
  if (ec == std::errc::invalid_argument || ptr == rest.data() + sign) cur.fail("expected a key");
  if (ec == std::errc::result_out_of_range) cur.fail("key does not fit in 64 bits");
  cur.advance(static_cast<std::size_t>(ptr - rest.data()));
  return key;
}

Value scan_value(Cursor& cur) {
  if (cur.at_end() || cur.peek() != '"') cur.fail("expected a quoted value");
  cur.take();
  Value out;
  while (true) {
    if (cur.at_end()) cur.fail("unterminated quoted value");
    const std::size_t line = cur.line();
    const std::size_t column = cur.column();
    const char c = cur.take();
    if (c == '"') return out;
    if (c == '\\') {
      if (cur.at_end()) cur.fail("unterminated escape");
      const char e = cur.take();
      switch (e) {
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        default: throw ParseError(std::string("invalid escape '\\") + e + "'", line, column);
      }
    } else if (static_cast<unsigned char>(c) < 0x20) {
      throw ParseError("unescaped control character in value", line, column);
    } else {
      out.push_back(c);
    }
  }
}

bool is_token_end(const Cursor& cur) {
  return cur.at_end() || is_space(cur.peek()) || cur.peek() == ')';
}

std::string scan_word(Cursor& cur) {
  std::string word;
  while (!cur.at_end()) {
    const char c = cur.peek();
    if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_')) break;
    word.push_back(cur.take());
  }
  return word;
}

}  // namespace

std::string quote_value(std::string_view value) {
  std::string out;
  out.reserve(value.size() + 2);
  out.push_back('"');
  for (const char c : value) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

std::string print_tree(const BTree& t) {
  std::string out;
  // nullptr tree means "emit the literal character" instead
  struct Piece {
    const BTree* tree;
    char literal;
  };
  std::vector<Piece> work;
  work.push_back({&t, 0});
  while (!work.empty()) {
    const Piece piece = work.back();
    work.pop_back();
    if (piece.tree == nullptr) {
      out.push_back(piece.literal);
      continue;
    }
    const BTree& cur = *piece.tree;
    if (is_empty(cur)) {
      out.push_back('e');
      continue;
    }
    const KeyValue& kv = root(cur);
    out.push_back('(');
    out += std::to_string(kv.key);
    out.push_back(' ');
    out += quote_value(kv.value);
    out.push_back(' ');
    work.push_back({nullptr, ')'});
    work.push_back({&right(cur), 0});
    work.push_back({nullptr, ' '});
    work.push_back({&left(cur), 0});
  }
  return out;
}

BTree parse_tree(std::string_view text) {
  Cursor cur(text);
  struct Open {
    Key key;
    Value value;
    std::optional<BTree> left;
  };
  std::vector<Open> open;
  std::optional<BTree> finished;

  while (!(finished && open.empty())) {
    if (finished) {
      Open& top = open.back();
      if (!top.left) {
        top.left = std::move(*finished);
        finished.reset();
        continue;
      }
      cur.skip_space();
      if (cur.at_end() || cur.peek() != ')') cur.fail("expected ')'");
      cur.take();
      BTree built = node(top.key, std::move(top.value), std::move(*top.left), std::move(*finished));
      open.pop_back();
      finished = std::move(built);
      continue;
    }
    cur.skip_space();
    if (cur.at_end()) cur.fail(open.empty() ? "expected a tree" : "expected a subtree");
    const char c = cur.peek();
    if (c == 'e') {
      cur.take();
      if (!is_token_end(cur)) cur.fail("unexpected characters after 'e'");
      finished = empty();
    } else if (c == '(') {
      cur.take();
      cur.skip_space();
      const Key key = scan_key(cur);
      cur.skip_space();
      Value value = scan_value(cur);
      open.push_back(Open{key, std::move(value), std::nullopt});
    } else if (c == ')') {
      cur.fail("expected a subtree before ')'");
    } else {
      cur.fail(std::string("unexpected character '") + c + "'");
    }
  }

  cur.skip_space();
  if (!cur.at_end()) cur.fail("trailing characters after the tree");
  BTree result = std::move(*finished);
  if (!validate(bst_signature(), result)) cur.fail("malformed tree");
  return result;
}

Script parse_script(std::string_view text) {
  Script script;
  std::size_t line_no = 0;
  while (!text.empty() || line_no == 0) {
    const std::size_t nl = text.find('\n');
    std::string_view line = nl == std::string_view::npos ? text : text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    Cursor cur(line, line_no);
    cur.skip_space();
    if (cur.at_end() || cur.peek() == '#') continue;

    const std::size_t verb_column = cur.column();
    const std::string verb = scan_word(cur);
    if (verb == "insert") {
      cur.skip_space();
      const Key key = scan_key(cur);
      cur.skip_space();
      Value value = scan_value(cur);
      cur.skip_space();
      if (!cur.at_end()) cur.fail("unexpected text after insert");
      script.ops.emplace_back(InsertOp{key, std::move(value)});
    } else if (verb == "search") {
      cur.skip_space();
      const Key key = scan_key(cur);
      cur.skip_space();
      if (!cur.at_end()) cur.fail("unexpected text after search");
      script.ops.emplace_back(SearchOp{key});
    } else {
      throw ParseError("unknown operation '" + verb + "'", line_no, verb_column);
    }
  }
  return script;
}

std::string print_op(const Op& op) {
  if (const auto* ins = std::get_if<InsertOp>(&op)) {
    return "insert " + std::to_string(ins->key) + " " + quote_value(ins->value);
  }
  return "search " + std::to_string(std::get<SearchOp>(op).key);
}

}  // namespace wbst
