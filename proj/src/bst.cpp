#include "wbst/bst.hpp"

#include <limits>
#include <optional>
#include <ostream>

namespace wbst {

namespace {

constexpr Key kMinKey = std::numeric_limits<Key>::min();
constexpr Key kMaxKey = std::numeric_limits<Key>::max();

}  // namespace

const Signature<BstLabel>& bst_signature() {
  static const Signature<BstLabel> sig{[](const BstLabel& label) -> std::size_t {
    return std::holds_alternative<KeyValue>(label) ? 2 : 0;
  }};
  return sig;
}

BTree empty() {
  // One shared node backs every empty tree.
  static const BTree e = sup(bst_signature(), BstLabel{}, {});
  return e;
}

BTree node(Key key, Value value, BTree left, BTree right) {
  std::vector<BTree> children;
  children.reserve(2);
  children.push_back(std::move(left));
  children.push_back(std::move(right));
  return sup(bst_signature(), BstLabel(KeyValue{key, std::move(value)}), std::move(children));
}

bool is_empty(const BTree& t) noexcept {
  return std::holds_alternative<std::monostate>(t.label());
}

const KeyValue& root(const BTree& t) noexcept {
  assert(!is_empty(t));
  return *std::get_if<KeyValue>(&t.label());
}

const BTree& left(const BTree& t) noexcept {
  assert(!is_empty(t));
  return t.children()[0];
}

const BTree& right(const BTree& t) noexcept {
  assert(!is_empty(t));
  return t.children()[1];
}

BTree insert(Key key, Value value, const BTree& t) {
  // Descend to the insertion point, remembering the path, then rebuild the
  // touched spine bottom-up. Untouched siblings are shared with the input.
  std::vector<const BTree*> path;
  std::vector<bool> went_left;
  const BTree* cur = &t;
  std::optional<BTree> grown;
  while (!grown) {
    if (is_empty(*cur)) {
      grown = node(key, std::move(value), empty(), empty());
    } else {
      const KeyValue& kv = root(*cur);
      if (key < kv.key) {
        path.push_back(cur);
        went_left.push_back(true);
        cur = &left(*cur);
      } else if (key > kv.key) {
        path.push_back(cur);
        went_left.push_back(false);
        cur = &right(*cur);
      } else {
        grown = node(kv.key, std::move(value), left(*cur), right(*cur));
      }
    }
  }
  BTree result = std::move(*grown);
  for (std::size_t i = path.size(); i-- > 0;) {
    const BTree& parent = *path[i];
    const KeyValue& kv = root(parent);
    result = went_left[i] ? node(kv.key, kv.value, std::move(result), right(parent))
                          : node(kv.key, kv.value, left(parent), std::move(result));
  }
  return result;
}

Value search(Key key, const BTree& t) {
  const BTree* cur = &t;
  while (!is_empty(*cur)) {
    const KeyValue& kv = root(*cur);
    if (key < kv.key) {
      cur = &left(*cur);
    } else if (key > kv.key) {
      cur = &right(*cur);
    } else {
      return kv.value;
    }
  }
  return default_value;
}

std::ostream& operator<<(std::ostream& os, const Bound& b) {
  if (b == Bound::neg_inf()) return os << "-inf";
  if (b == Bound::pos_inf()) return os << "+inf";
  return os << b.key();
}

Bound pred(Bound b) noexcept {
  if (!b.is_finite()) return b;
  if (b.key() == kMinKey) return Bound::neg_inf();
  return Bound::finite(b.key() - 1);
}

Bound succ(Bound b) noexcept {
  if (!b.is_finite()) return b;
  if (b.key() == kMaxKey) return Bound::pos_inf();
  return Bound::finite(b.key() + 1);
}

bool rank(Bound lo, const BTree& t, Bound hi) {
  struct Window {
    Bound lo;
    const BTree* tree;
    Bound hi;
  };
  std::vector<Window> work;
  work.push_back({lo, &t, hi});
  while (!work.empty()) {
    const Window w = work.back();
    work.pop_back();
    if (is_empty(*w.tree)) {
      if (!(w.lo < w.hi)) return false;
      continue;
    }
    const Bound at = Bound::finite(root(*w.tree).key);
    work.push_back({w.lo, &left(*w.tree), at});
    work.push_back({at, &right(*w.tree), w.hi});
  }
  return true;
}

bool is_bst(const BTree& t) {
  return rank(Bound::neg_inf(), t, Bound::pos_inf());
}

std::vector<std::pair<Key, Value>> inorder(const BTree& t) {
  std::vector<std::pair<Key, Value>> out;
  std::vector<const BTree*> stack;
  const BTree* cur = &t;
  while (!is_empty(*cur) || !stack.empty()) {
    if (!is_empty(*cur)) {
      stack.push_back(cur);
      cur = &left(*cur);
    } else {
      cur = stack.back();
      stack.pop_back();
      const KeyValue& kv = root(*cur);
      out.emplace_back(kv.key, kv.value);
      cur = &right(*cur);
    }
  }
  return out;
}

CertifiedBst::CertifiedBst(BTree tree, Bound lo, Bound hi)
    : tree_(std::move(tree)), lo_(lo), hi_(hi) {
  assert(rank(lo_, tree_, hi_));
}

CertifiedBst certified_empty() {
  return CertifiedBst(empty(), Bound::neg_inf(), Bound::pos_inf());
}

CertifiedBst certified_insert(Key key, Value value, const CertifiedBst& c) {
  const Bound at = Bound::finite(key);
  const Bound lo = pred(std::min(c.lo(), at));
  const Bound hi = succ(std::max(c.hi(), at));
  return CertifiedBst(insert(key, std::move(value), c.tree()), lo, hi);
}

Value certified_search(Key key, const CertifiedBst& c) {
  return search(key, c.tree());
}

}  // namespace wbst
