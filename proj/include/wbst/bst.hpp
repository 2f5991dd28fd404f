// Binary trees as a two-constructor instance of the generic term core
// (an empty tree `e` of arity zero, a key/value node of arity two), the
// classic unbalanced insert/search, the window predicate `rank` that decides
// search-tree order, and a certified wrapper that carries witness bounds.
//
// Trees are persistent: insert returns a new tree sharing untouched
// subtrees with the input.

#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wbst/wcore.hpp"

namespace wbst {

using Key = std::int64_t;
using Value = std::string;

// Returned by search on a miss.
inline const Value default_value{};

struct KeyValue {
  Key key{};
  Value value;
  friend bool operator==(const KeyValue&, const KeyValue&) = default;
};

// Node labels: monostate is the empty-tree constructor, KeyValue the
// two-child node constructor.
using BstLabel = std::variant<std::monostate, KeyValue>;

using BTree = WTerm<BstLabel>;

// arity: monostate -> 0, KeyValue -> 2.
const Signature<BstLabel>& bst_signature();

BTree empty();
BTree node(Key key, Value value, BTree left, BTree right);

bool is_empty(const BTree& t) noexcept;
const KeyValue& root(const BTree& t) noexcept;  // pre: !is_empty(t)
const BTree& left(const BTree& t) noexcept;     // pre: !is_empty(t)
const BTree& right(const BTree& t) noexcept;    // pre: !is_empty(t)

// Path-copying insert: smaller keys go left, larger right, an equal key
// replaces the stored value. Never mutates its input.
BTree insert(Key key, Value value, const BTree& t);

// Follows the comparison path; default_value when it ends at an empty tree.
Value search(Key key, const BTree& t);

// A key-window edge: -inf, a key, or +inf. The infinities are fixed points
// of pred/succ, which keeps window arithmetic total.
class Bound {
 public:
  static constexpr Bound neg_inf() noexcept { return Bound(Tag::kNegInf, 0); }
  static constexpr Bound finite(Key key) noexcept { return Bound(Tag::kFinite, key); }
  static constexpr Bound pos_inf() noexcept { return Bound(Tag::kPosInf, 0); }

  constexpr bool is_finite() const noexcept { return tag_ == Tag::kFinite; }

  constexpr Key key() const noexcept {
    assert(is_finite());
    return key_;
  }

  friend constexpr auto operator<=>(const Bound&, const Bound&) = default;

 private:
  // Tag order defines the bound order; key_ stays 0 on the infinities so
  // the defaulted comparisons are exact.
  enum class Tag : std::uint8_t { kNegInf = 0, kFinite = 1, kPosInf = 2 };

  constexpr Bound(Tag tag, Key key) noexcept : tag_(tag), key_(key) {}

  Tag tag_;
  Key key_;
};

std::ostream& operator<<(std::ostream& os, const Bound& b);

// Adjacent-smaller element; -inf and +inf map to themselves, and the
// smallest finite key steps down to -inf.
Bound pred(Bound b) noexcept;

// Mirror of pred.
Bound succ(Bound b) noexcept;

// True when the keys of t are strictly increasing in order and lie strictly
// between lo and hi; on an empty tree, when lo < hi.
bool rank(Bound lo, const BTree& t, Bound hi);

// rank over the full window; decides search-tree order, since any valid
// witness bounds widen to (-inf, +inf).
bool is_bst(const BTree& t);

// Left-root-right traversal.
std::vector<std::pair<Key, Value>> inorder(const BTree& t);

// A tree packaged with bounds (lo, hi) for which rank(lo, tree, hi) holds.
// Only certified_empty/certified_insert can produce one, so the witness is
// re-established on every construction (and asserted in debug builds).
class CertifiedBst {
 public:
  const BTree& tree() const noexcept { return tree_; }
  Bound lo() const noexcept { return lo_; }
  Bound hi() const noexcept { return hi_; }

 private:
  friend CertifiedBst certified_empty();
  friend CertifiedBst certified_insert(Key key, Value value, const CertifiedBst& c);

  CertifiedBst(BTree tree, Bound lo, Bound hi);

  BTree tree_;
  Bound lo_;
  Bound hi_;
};

// The empty tree under the widest window.
CertifiedBst certified_empty();

// Inserts and rebuilds the witness: the new bounds are
// pred(min(lo, key)) and succ(max(hi, key)).
CertifiedBst certified_insert(Key key, Value value, const CertifiedBst& c);

Value certified_search(Key key, const CertifiedBst& c);

}  // namespace wbst
