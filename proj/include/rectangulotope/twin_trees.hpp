#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "rectangulotope/congruence.hpp"
#include "rectangulotope/permutation.hpp"

namespace rectangulotope {

/// Target trees hang horizontal children on the left and vertical children on
/// the right; source trees the other way round.
enum class TreeFlavor { source, target };

enum class Side { horizontal, vertical };

/// Closed integer interval [lo, hi] of gaps; gap g sits between inorder
/// nodes g and g+1, gaps 0 and n are the boundary gaps.
struct GapInterval {
  int lo = 0;
  int hi = -1;

  int length() const { return hi >= lo ? hi - lo + 1 : 0; }
  GapInterval intersect(GapInterval other) const {
    return {std::max(lo, other.lo), std::min(hi, other.hi)};
  }
  friend bool operator==(const GapInterval&, const GapInterval&) = default;
};

/// Binary tree on [n] labelled in inorder.
class LabeledBinaryTree {
 public:
  static constexpr int kNone = 0;

  /// Binary search tree obtained by inserting `values` in order.
  static LabeledBinaryTree from_insertion(std::span<const int> values, TreeFlavor flavor);

  /// Builds from explicit child arrays indexed by label (entry 0 unused,
  /// kNone for an absent child). Throws std::invalid_argument unless the
  /// arrays describe one tree whose inorder is 1..n.
  static LabeledBinaryTree from_children(std::vector<int> left, std::vector<int> right,
                                         TreeFlavor flavor);

  int size() const { return n_; }
  int root() const { return root_; }
  TreeFlavor flavor() const { return flavor_; }

  int left(int i) const { return left_[static_cast<std::size_t>(i)]; }
  int right(int i) const { return right_[static_cast<std::size_t>(i)]; }
  int parent(int i) const { return parent_[static_cast<std::size_t>(i)]; }
  int child(int i, Side side) const;

  /// Whether `side` is stored as the left child under this flavor.
  bool is_left(Side side) const;

  /// Label range covered by the subtree rooted at i.
  int subtree_lo(int i) const { return lo_[static_cast<std::size_t>(i)]; }
  int subtree_hi(int i) const { return hi_[static_cast<std::size_t>(i)]; }

  /// Side of the edge from i to its parent (i must not be the root).
  Side side_in_parent(int i) const;

  std::string to_json() const;

  friend bool operator==(const LabeledBinaryTree& a, const LabeledBinaryTree& b) {
    return a.flavor_ == b.flavor_ && a.root_ == b.root_ && a.left_ == b.left_ && a.right_ == b.right_;
  }

 private:
  LabeledBinaryTree(int n, TreeFlavor flavor);
  void finalize();  // parents, subtree ranges, inorder check

  int n_ = 0;
  int root_ = kNone;
  TreeFlavor flavor_ = TreeFlavor::target;
  std::vector<int> left_, right_, parent_, lo_, hi_;
};

struct TwinTrees {
  LabeledBinaryTree source;
  LabeledBinaryTree target;

  friend bool operator==(const TwinTrees&, const TwinTrees&) = default;
};

/// Target: insert p_n, ..., p_1. Source: insert p_1, ..., p_n.
TwinTrees build_trees(const Permutation& p);

struct LeafCounts {
  std::vector<long long> horizontal;  // index 1..n, entry 0 unused
  std::vector<long long> vertical;
};

/// Leaves of the completed horizontal and vertical subtrees of each node.
LeafCounts leaf_counts(const LabeledBinaryTree& t);

/// Gaps hosting the leaves of the subtree hanging from `side` of node i.
GapInterval gap_leaf_interval(const LabeledBinaryTree& t, int i, Side side);

/// Side (as a leaf of which node, on which side) of the completed leaf at gap g.
struct GapLeaf {
  int node = 0;
  Side side = Side::horizontal;
  friend bool operator==(const GapLeaf&, const GapLeaf&) = default;
};
GapLeaf leaf_at_gap(const LabeledBinaryTree& t, int gap);

/// Orientation of both gap-g leaves agrees for every interior gap.
bool satisfies_twin_condition(const TwinTrees& tt);

/// Square matrix indexed 1..n in both coordinates.
class SquareMatrix {
 public:
  explicit SquareMatrix(int n) : n_(n), data_(static_cast<std::size_t>((n + 1) * (n + 1)), 0) {}
  int size() const { return n_; }
  long long& operator()(int i, int j) { return data_[index(i, j)]; }
  long long operator()(int i, int j) const { return data_[index(i, j)]; }
  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * (n_ + 1) + j); }
  int n_;
  std::vector<long long> data_;
};

struct CommonLeafCounts {
  SquareMatrix cv;  // vertical subtree of i in T vs vertical subtree of j in S
  SquareMatrix ch;  // horizontal subtree of i in S vs horizontal subtree of j in T
};

/// Counts common leaves under the equal-gap rule: the gap-g leaves of T and S
/// are common for each interior gap. Throws std::invalid_argument when the
/// twin condition fails.
CommonLeafCounts common_leaf_counts(const TwinTrees& tt);

/// A strict partial order on [n].
class OrderRelation {
 public:
  explicit OrderRelation(int n) : n_(n), less_(static_cast<std::size_t>((n + 1) * (n + 1)), false) {}

  int size() const { return n_; }
  bool less(int i, int j) const { return less_[index(i, j)]; }
  void set_less(int i, int j) { less_[index(i, j)] = true; }

  /// Warshall closure. Throws std::logic_error if a cycle appears.
  void close_transitively();

  bool is_strict_partial_order() const;

  /// Number of Hasse-diagram edges.
  int cover_count() const;

  /// p lists the elements in an order compatible with the relation.
  bool is_linear_extension(const Permutation& p) const;

  /// Every relation of `other` also holds here.
  bool extends(const OrderRelation& other) const;

  friend bool operator==(const OrderRelation&, const OrderRelation&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * (n_ + 1) + j); }
  int n_;
  std::vector<bool> less_;
};

/// Source edges run parent before child, target edges child before parent.
OrderRelation weak_order_of(const TwinTrees& tt);

/// Pairs whose relative order is fixed across the class interval:
/// u before v in the top forces u < v, v before u in the bottom forces v < u.
OrderRelation interval_order_of(const CongruenceClass& c);

/// The strong poset of a strong class. Throws std::invalid_argument for
/// other ideals.
OrderRelation strong_order_of(const CongruenceClass& c);

}  // namespace rectangulotope
