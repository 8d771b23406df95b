#include "rectangulotope/twin_trees.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace rectangulotope {

LabeledBinaryTree::LabeledBinaryTree(int n, TreeFlavor flavor)
    : n_(n),
      flavor_(flavor),
      left_(static_cast<std::size_t>(n) + 1, kNone),
      right_(static_cast<std::size_t>(n) + 1, kNone),
      parent_(static_cast<std::size_t>(n) + 1, kNone),
      lo_(static_cast<std::size_t>(n) + 1, 0),
      hi_(static_cast<std::size_t>(n) + 1, 0) {}

LabeledBinaryTree LabeledBinaryTree::from_insertion(std::span<const int> values, TreeFlavor flavor) {
  const int n = static_cast<int>(values.size());
  LabeledBinaryTree t(n, flavor);
  for (int v : values) {
    if (t.root_ == kNone) {
      t.root_ = v;
      continue;
    }
    int cur = t.root_;
    for (;;) {
      auto& slot = v < cur ? t.left_[static_cast<std::size_t>(cur)] : t.right_[static_cast<std::size_t>(cur)];
      if (slot == kNone) {
        slot = v;
        break;
      }
      cur = slot;
    }
  }
  t.finalize();
  return t;
}

LabeledBinaryTree LabeledBinaryTree::from_children(std::vector<int> left, std::vector<int> right,
                                                   TreeFlavor flavor) {
  if (left.size() != right.size() || left.size() < 2) {
    throw std::invalid_argument("child arrays must both have size n+1 with n >= 1");
  }
  const int n = static_cast<int>(left.size()) - 1;
  LabeledBinaryTree t(n, flavor);
  t.left_ = std::move(left);
  t.right_ = std::move(right);
  std::vector<int> indegree(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    for (int c : {t.left(i), t.right(i)}) {
      if (c == kNone) continue;
      if (c < 1 || c > n) throw std::invalid_argument("child label out of range");
      ++indegree[static_cast<std::size_t>(c)];
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (indegree[static_cast<std::size_t>(i)] > 1) throw std::invalid_argument("node with two parents");
    if (indegree[static_cast<std::size_t>(i)] == 0) {
      if (t.root_ != kNone) throw std::invalid_argument("more than one root");
      t.root_ = i;
    }
  }
  if (t.root_ == kNone) throw std::invalid_argument("no root");
  t.finalize();
  return t;
}

void LabeledBinaryTree::finalize() {
  // Iterative postorder so long chains do not exhaust the stack.
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n_));
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int c : {left(v), right(v)}) {
      if (c != kNone) {
        parent_[static_cast<std::size_t>(c)] = v;
        stack.push_back(c);
      }
    }
  }
  if (static_cast<int>(order.size()) != n_) throw std::invalid_argument("tree is not connected");
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto v = static_cast<std::size_t>(*it);
    lo_[v] = left_[v] != kNone ? lo_[static_cast<std::size_t>(left_[v])] : *it;
    hi_[v] = right_[v] != kNone ? hi_[static_cast<std::size_t>(right_[v])] : *it;
    if ((left_[v] != kNone && hi_[static_cast<std::size_t>(left_[v])] != *it - 1) ||
        (right_[v] != kNone && lo_[static_cast<std::size_t>(right_[v])] != *it + 1)) {
      throw std::invalid_argument("labels are not in inorder");
    }
  }
}

bool LabeledBinaryTree::is_left(Side side) const {
  return (side == Side::horizontal) == (flavor_ == TreeFlavor::target);
}

int LabeledBinaryTree::child(int i, Side side) const { return is_left(side) ? left(i) : right(i); }

Side LabeledBinaryTree::side_in_parent(int i) const {
  const int p = parent(i);
  if (p == kNone) throw std::invalid_argument("root has no parent edge");
  return child(p, Side::horizontal) == i ? Side::horizontal : Side::vertical;
}

std::string LabeledBinaryTree::to_json() const {
  nlohmann::json doc;
  doc["root"] = root_;
  doc["flavor"] = flavor_ == TreeFlavor::source ? "source" : "target";
  nlohmann::json nodes = nlohmann::json::object();
  auto child_json = [](int c) { return c == kNone ? nlohmann::json(nullptr) : nlohmann::json(c); };
  for (int i = 1; i <= n_; ++i) {
    nodes[std::to_string(i)] = {{"left", child_json(left(i))}, {"right", child_json(right(i))}};
  }
  doc["nodes"] = std::move(nodes);
  return doc.dump();
}

TwinTrees build_trees(const Permutation& p) {
  const auto word = p.word();
  std::vector<int> reversed(word.rbegin(), word.rend());
  return TwinTrees{LabeledBinaryTree::from_insertion(word, TreeFlavor::source),
                   LabeledBinaryTree::from_insertion(reversed, TreeFlavor::target)};
}

GapInterval gap_leaf_interval(const LabeledBinaryTree& t, int i, Side side) {
  if (i < 1 || i > t.size()) throw std::out_of_range("node label out of range");
  const int c = t.child(i, side);
  if (c != LabeledBinaryTree::kNone) return {t.subtree_lo(c) - 1, t.subtree_hi(c)};
  const int gap = t.is_left(side) ? i - 1 : i;
  return {gap, gap};
}

LeafCounts leaf_counts(const LabeledBinaryTree& t) {
  const auto size = static_cast<std::size_t>(t.size()) + 1;
  LeafCounts counts{std::vector<long long>(size, 0), std::vector<long long>(size, 0)};
  for (int i = 1; i <= t.size(); ++i) {
    counts.horizontal[static_cast<std::size_t>(i)] = gap_leaf_interval(t, i, Side::horizontal).length();
    counts.vertical[static_cast<std::size_t>(i)] = gap_leaf_interval(t, i, Side::vertical).length();
  }
  return counts;
}

GapLeaf leaf_at_gap(const LabeledBinaryTree& t, int gap) {
  if (gap < 0 || gap > t.size()) throw std::out_of_range("gap out of range");
  // The leaf at gap g is the right leaf of g or the left leaf of g+1.
  const bool right_leaf = gap >= 1 && t.right(gap) == LabeledBinaryTree::kNone;
  const int node = right_leaf ? gap : gap + 1;
  const Side left_side = t.is_left(Side::horizontal) ? Side::horizontal : Side::vertical;
  const Side right_side = left_side == Side::horizontal ? Side::vertical : Side::horizontal;
  return {node, right_leaf ? right_side : left_side};
}

bool satisfies_twin_condition(const TwinTrees& tt) {
  const int n = tt.target.size();
  if (tt.source.size() != n) return false;
  for (int g = 1; g < n; ++g) {
    const bool target_right = tt.target.right(g) == LabeledBinaryTree::kNone;
    const bool source_left = !(tt.source.right(g) == LabeledBinaryTree::kNone);
    if (target_right != source_left) return false;
  }
  return true;
}

CommonLeafCounts common_leaf_counts(const TwinTrees& tt) {
  if (!satisfies_twin_condition(tt)) throw std::invalid_argument("trees violate the twin condition");
  const int n = tt.target.size();
  CommonLeafCounts out{SquareMatrix(n), SquareMatrix(n)};
  const GapInterval interior{1, n - 1};
  for (int i = 1; i <= n; ++i) {
    const auto tv = gap_leaf_interval(tt.target, i, Side::vertical).intersect(interior);
    const auto sh = gap_leaf_interval(tt.source, i, Side::horizontal).intersect(interior);
    for (int j = 1; j <= n; ++j) {
      out.cv(i, j) = tv.intersect(gap_leaf_interval(tt.source, j, Side::vertical)).length();
      out.ch(i, j) = sh.intersect(gap_leaf_interval(tt.target, j, Side::horizontal)).length();
    }
  }
  return out;
}

void OrderRelation::close_transitively() {
  for (int k = 1; k <= n_; ++k) {
    for (int i = 1; i <= n_; ++i) {
      if (!less(i, k)) continue;
      for (int j = 1; j <= n_; ++j) {
        if (less(k, j)) set_less(i, j);
      }
    }
  }
  for (int i = 1; i <= n_; ++i) {
    if (less(i, i)) throw std::logic_error("order relation has a cycle");
  }
}

bool OrderRelation::is_strict_partial_order() const {
  for (int i = 1; i <= n_; ++i) {
    if (less(i, i)) return false;
    for (int j = 1; j <= n_; ++j) {
      if (!less(i, j)) continue;
      if (less(j, i)) return false;
      for (int k = 1; k <= n_; ++k) {
        if (less(j, k) && !less(i, k)) return false;
      }
    }
  }
  return true;
}

int OrderRelation::cover_count() const {
  int covers = 0;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (!less(i, j)) continue;
      bool direct = true;
      for (int k = 1; k <= n_ && direct; ++k) direct = !(less(i, k) && less(k, j));
      covers += direct ? 1 : 0;
    }
  }
  return covers;
}

bool OrderRelation::is_linear_extension(const Permutation& p) const {
  const auto pos = p.positions();
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (less(i, j) && pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(j)]) return false;
    }
  }
  return true;
}

bool OrderRelation::extends(const OrderRelation& other) const {
  if (other.n_ != n_) return false;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (other.less(i, j) && !less(i, j)) return false;
    }
  }
  return true;
}

OrderRelation weak_order_of(const TwinTrees& tt) {
  const int n = tt.source.size();
  OrderRelation rel(n);
  for (int i = 1; i <= n; ++i) {
    if (const int p = tt.source.parent(i); p != LabeledBinaryTree::kNone) rel.set_less(p, i);
    if (const int p = tt.target.parent(i); p != LabeledBinaryTree::kNone) rel.set_less(i, p);
  }
  rel.close_transitively();
  return rel;
}

OrderRelation interval_order_of(const CongruenceClass& c) {
  const int n = c.bottom.size();
  const auto bottom_pos = c.bottom.positions();
  const auto top_pos = c.top.positions();
  OrderRelation rel(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      const auto su = static_cast<std::size_t>(u);
      const auto sv = static_cast<std::size_t>(v);
      if (top_pos[su] < top_pos[sv]) rel.set_less(u, v);
      if (bottom_pos[sv] < bottom_pos[su]) rel.set_less(v, u);
    }
  }
  return rel;
}

OrderRelation strong_order_of(const CongruenceClass& c) {
  if (c.ideal != ArcIdealKind::strong) throw std::invalid_argument("strong_order_of needs a strong class");
  return interval_order_of(c);
}

}  // namespace rectangulotope
