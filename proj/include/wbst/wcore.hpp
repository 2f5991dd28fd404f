// Generic finite-arity well-founded trees.
//
// A Signature fixes a label domain and an arity per label; WTerm is an
// immutable tree over such a signature. Terms are values: copies are cheap
// and share structure, nothing is ever mutated in place, and everything here
// is safe to read from any number of threads at once.
//
// All traversals (fold, validate, equality, destruction) run on explicit
// worklists, so pathologically deep terms cannot overflow the call stack.

#pragma once

#include <algorithm>
#include <cassert>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace wbst {

// Number of constructor layers above the minimal terms; 0 exactly on
// minimal (arity-zero) terms.
using Complexity = std::uint64_t;

// Thrown by the checked constructor when the children count does not match
// the label's arity.
class ArityMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One tree type: an opaque, equality-comparable label domain plus a total
// arity function. The arity of a label must never change between calls.
template <std::equality_comparable Label>
struct Signature {
  std::function<std::size_t(const Label&)> arity;
};

template <std::equality_comparable Label>
class WTerm {
 public:
  // Unchecked node assembly; deserializers and tests use this to build
  // terms that `validate` may then reject. Regular construction goes
  // through sup(), which enforces the signature's arity.
  WTerm(Label label, std::vector<WTerm> children)
      : node_(new Node{std::move(label), std::move(children)}, ReleaseNode{}) {}

  const Label& label() const noexcept { return node_->label; }
  std::span<const WTerm> children() const noexcept { return node_->children; }

  // True when both values share the same underlying node.
  bool identical_to(const WTerm& other) const noexcept { return node_ == other.node_; }

 private:
  struct Node {
    Label label;
    std::vector<WTerm> children;
  };

  // Frees a node graph with an explicit worklist: dropping the last
  // reference to a very deep tree must not recurse per level.
  struct ReleaseNode {
    void operator()(const Node* node) const {
      thread_local std::vector<const Node*>* active = nullptr;
      if (active != nullptr) {
        active->push_back(node);
        return;
      }
      std::vector<const Node*> pending;
      active = &pending;
      pending.push_back(node);
      while (!pending.empty()) {
        const Node* next = pending.back();
        pending.pop_back();
        delete next;  // nested releases re-enter above and land on `pending`
      }
      active = nullptr;
    }
  };

  std::shared_ptr<const Node> node_;
};

// Structural equality: equal labels, equal arity, equal children.
template <std::equality_comparable Label>
bool operator==(const WTerm<Label>& lhs, const WTerm<Label>& rhs) {
  std::vector<std::pair<const WTerm<Label>*, const WTerm<Label>*>> work;
  work.emplace_back(&lhs, &rhs);
  while (!work.empty()) {
    const auto [a, b] = work.back();
    work.pop_back();
    if (a->identical_to(*b)) continue;  // shared subtree
    if (!(a->label() == b->label())) return false;
    const auto a_kids = a->children();
    const auto b_kids = b->children();
    if (a_kids.size() != b_kids.size()) return false;
    for (std::size_t i = 0; i < a_kids.size(); ++i) {
      work.emplace_back(&a_kids[i], &b_kids[i]);
    }
  }
  return true;
}

// Checked constructor. The only way a malformed term can exist is by using
// the raw WTerm constructor directly.
template <std::equality_comparable Label>
WTerm<Label> sup(const Signature<Label>& sig, Label label, std::vector<WTerm<Label>> children) {
  const std::size_t expected = sig.arity(label);
  if (children.size() != expected) {
    throw ArityMismatch("sup: label expects " + std::to_string(expected) + " children, got " +
                        std::to_string(children.size()));
  }
  return WTerm<Label>(std::move(label), std::move(children));
}

template <std::equality_comparable Label>
const Label& pr1(const WTerm<Label>& w) noexcept {
  return w.label();
}

template <std::equality_comparable Label>
std::span<const WTerm<Label>> pr2(const WTerm<Label>& w) noexcept {
  return w.children();
}

// A term is minimal when its label admits no children.
template <std::equality_comparable Label>
bool is_min(const Signature<Label>& sig, const WTerm<Label>& w) {
  return sig.arity(pr1(w)) == 0;
}

// Structural recursion. The algebra receives the node's label, its children,
// and the already-folded child results, and must satisfy
//   fold(sup(a, f)) == alg(a, f, [fold(c) for c in f])
// extensionally. The result type R is given explicitly because it cannot be
// deduced from the algebra alone.
template <typename R, std::equality_comparable Label, typename Alg>
R fold(const Signature<Label>& sig, Alg&& alg, const WTerm<Label>& w) {
  struct Frame {
    const WTerm<Label>* term;
    std::size_t next_child;
    std::vector<R> child_results;
  };
  assert(w.children().size() == sig.arity(w.label()));
  std::vector<Frame> stack;
  stack.push_back(Frame{&w, 0, {}});
  while (true) {
    Frame& top = stack.back();
    const std::span<const WTerm<Label>> kids = top.term->children();
    if (top.next_child < kids.size()) {
      const WTerm<Label>* child = &kids[top.next_child++];
      assert(child->children().size() == sig.arity(child->label()));
      stack.push_back(Frame{child, 0, {}});
    } else {
      R result = alg(top.term->label(), kids, std::span<const R>(top.child_results));
      stack.pop_back();
      if (stack.empty()) return result;
      stack.back().child_results.push_back(std::move(result));
    }
  }
}

template <std::equality_comparable Label>
Complexity comp(const Signature<Label>& sig, const WTerm<Label>& w) {
  return fold<Complexity>(
      sig,
      [](const Label&, std::span<const WTerm<Label>>, std::span<const Complexity> child_comps) -> Complexity {
        if (child_comps.empty()) return 0;  // minimal term
        return 1 + *std::max_element(child_comps.begin(), child_comps.end());
      },
      w);
}

// Recursion by complexity instead of by structure. `base` must handle all
// complexity-0 terms; `step`, given a function valid on terms of complexity
// <= n, must handle terms of complexity <= n+1 (cumulative strata: children
// of a complexity-(n+1) node may sit anywhere below). The step function is
// iterated comp(w) times from the base and the resulting level is applied
// to w.
template <std::equality_comparable Label, typename Base, typename Step>
auto induct_by_complexity(const Signature<Label>& sig, Base base, Step step, const WTerm<Label>& w)
    -> std::invoke_result_t<Base&, const WTerm<Label>&> {
  using R = std::invoke_result_t<Base&, const WTerm<Label>&>;
  using Level = std::function<R(const WTerm<Label>&)>;
  const Complexity rounds = comp(sig, w);
  Level level = std::move(base);
  for (Complexity i = 0; i < rounds; ++i) {
    level = [prev = std::move(level), &step](const WTerm<Label>& t) -> R { return step(prev, t); };
  }
  return level(w);
}

// Re-checks the arity discipline on every node; the guard for terms
// assembled from untrusted input.
template <std::equality_comparable Label>
bool validate(const Signature<Label>& sig, const WTerm<Label>& w) {
  std::vector<const WTerm<Label>*> work{&w};
  while (!work.empty()) {
    const WTerm<Label>* term = work.back();
    work.pop_back();
    if (term->children().size() != sig.arity(term->label())) return false;
    for (const WTerm<Label>& child : term->children()) work.push_back(&child);
  }
  return true;
}

}  // namespace wbst
