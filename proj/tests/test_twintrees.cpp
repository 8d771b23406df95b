#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "rectangulotope/twin_trees.hpp"

#include <algorithm>

using namespace rectangulotope;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

constexpr int kNone = LabeledBinaryTree::kNone;

std::vector<std::pair<int, int>> relations(const OrderRelation& r) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= r.size(); ++i) {
    for (int j = 1; j <= r.size(); ++j) {
      if (r.less(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("insertion trees") {
  auto t = build_trees(P("1234"));
  CHECK(t.target.root() == 4);
  CHECK(t.target.left(4) == 3);
  CHECK(t.target.left(2) == 1);
  CHECK(t.source.root() == 1);
  CHECK(t.source.right(3) == 4);

  t = build_trees(P("4321"));
  CHECK(t.target.root() == 1);
  CHECK(t.target.right(1) == 2);
  CHECK(t.source.root() == 4);
  CHECK(t.source.left(4) == 3);

  t = build_trees(P("2143"));
  CHECK(t.target.root() == 3);
  CHECK(t.target.left(3) == 1);
  CHECK(t.target.right(1) == 2);
  CHECK(t.target.right(3) == 4);
  CHECK(t.source.root() == 2);
  CHECK(t.source.left(2) == 1);
  CHECK(t.source.right(2) == 4);
  CHECK(t.source.left(4) == 3);
  CHECK(t.target.parent(2) == 1);
  CHECK(t.target.subtree_lo(1) == 1);
  CHECK(t.target.subtree_hi(1) == 2);
}

TEST_CASE("flavor maps") {
  const auto t = build_trees(P("2143"));
  CHECK(t.target.flavor() == TreeFlavor::target);
  CHECK(t.target.child(3, Side::horizontal) == 1);
  CHECK(t.target.child(3, Side::vertical) == 4);
  CHECK(t.source.child(2, Side::horizontal) == 4);
  CHECK(t.source.child(2, Side::vertical) == 1);
  CHECK(t.target.side_in_parent(1) == Side::horizontal);
  CHECK(t.source.side_in_parent(3) == Side::vertical);
}

TEST_CASE("leaf counts") {
  auto lc = leaf_counts(build_trees(P("1234")).target);
  CHECK(lc.horizontal == std::vector<long long>{0, 1, 2, 3, 4});
  CHECK(lc.vertical == std::vector<long long>{0, 1, 1, 1, 1});
  lc = leaf_counts(build_trees(P("1")).target);
  CHECK(lc.horizontal == std::vector<long long>{0, 1});
  CHECK(lc.vertical == std::vector<long long>{0, 1});
  lc = leaf_counts(build_trees(P("2143")).target);
  CHECK(lc.horizontal == std::vector<long long>{0, 1, 1, 3, 1});
  CHECK(lc.vertical == std::vector<long long>{0, 2, 1, 2, 1});
}

TEST_CASE("gap intervals") {
  CHECK(gap_leaf_interval(build_trees(P("2143")).target, 3, Side::horizontal) == GapInterval{0, 2});
  CHECK(gap_leaf_interval(build_trees(P("1234")).target, 2, Side::vertical) == GapInterval{2, 2});
  CHECK(gap_leaf_interval(build_trees(P("2143")).source, 4, Side::vertical) == GapInterval{2, 3});
}

TEST_CASE("every gap hosts exactly one completed leaf") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : all_permutations(n)) {
      const auto tt = build_trees(p);
      for (const auto* t : {&tt.source, &tt.target}) {
        std::vector<int> hits(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 1; i <= n; ++i) {
          for (auto side : {Side::horizontal, Side::vertical}) {
            if (t->child(i, side) != kNone) continue;
            const auto g = gap_leaf_interval(*t, i, side);
            REQUIRE(g.length() == 1);
            ++hits[static_cast<std::size_t>(g.lo)];
            const auto leaf = leaf_at_gap(*t, g.lo);
            CHECK(leaf.node == i);
            CHECK(leaf.side == side);
          }
        }
        CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        const auto lc = leaf_counts(*t);
        for (int i = 1; i <= n; ++i) {
          CHECK(lc.horizontal[static_cast<std::size_t>(i)] == gap_leaf_interval(*t, i, Side::horizontal).length());
          CHECK(lc.vertical[static_cast<std::size_t>(i)] == gap_leaf_interval(*t, i, Side::vertical).length());
        }
      }
    }
  }
}

TEST_CASE("trees match a recursive search tree") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : all_permutations(n)) {
      const auto tt = build_trees(p);
      std::vector<int> forward(p.word().begin(), p.word().end());
      std::vector<int> backward(forward.rbegin(), forward.rend());
      const auto s = oracle::bst_sizes(forward, n);
      const auto t = oracle::bst_sizes(backward, n);
      for (int i = 1; i <= n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        auto size = [](const LabeledBinaryTree& tree, int c) {
          return c == kNone ? 0 : tree.subtree_hi(c) - tree.subtree_lo(c) + 1;
        };
        CHECK(size(tt.source, tt.source.left(i)) == s.left[k]);
        CHECK(size(tt.source, tt.source.right(i)) == s.right[k]);
        CHECK(size(tt.target, tt.target.left(i)) == t.left[k]);
        CHECK(size(tt.target, tt.target.right(i)) == t.right[k]);
      }
    }
  }
}

TEST_CASE("trees are constant on weak classes and always twins") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& c : enumerate_classes(n, ArcIdealKind::weak)) {
      const auto tt = build_trees(c.bottom);
      for (const auto& p : class_members(c.bottom, ArcIdealKind::weak)) CHECK(build_trees(p) == tt);
    }
  }
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : all_permutations(n)) CHECK(satisfies_twin_condition(build_trees(p)));
  }
}

TEST_CASE("common leaf counts") {
  auto cl = common_leaf_counts(build_trees(P("1234")));
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      CHECK(cl.cv(i, j) == (j == i + 1 ? 1 : 0));
      if (i < j) CHECK(cl.ch(i, j) == j - i);
    }
  }
  cl = common_leaf_counts(build_trees(P("2143")));
  CHECK(cl.cv(1, 2) == 1);
  CHECK(cl.cv(3, 4) == 1);
  CHECK(cl.ch(1, 3) == 1);
  CHECK(cl.ch(2, 3) == 1);
  CHECK(cl.ch(2, 4) == 1);
  CHECK(cl.ch(1, 4) == 0);
  cl = common_leaf_counts(build_trees(P("1")));
  CHECK(cl.cv(1, 1) == 0);
  CHECK(cl.ch(1, 1) == 0);
}

TEST_CASE("twin condition failures are rejected") {
  // Both trees are the same left chain: gap orientations disagree.
  const auto chain = build_trees(P("123")).target;
  const auto src = LabeledBinaryTree::from_children({0, 0, 1, 2}, {0, 0, 0, 0}, TreeFlavor::source);
  const TwinTrees bad{src, chain};
  CHECK_FALSE(satisfies_twin_condition(bad));
  CHECK_THROWS_AS(common_leaf_counts(bad), std::invalid_argument);
  CHECK_THROWS_AS(LabeledBinaryTree::from_children({0, 2, 0}, {0, 0, 1}, TreeFlavor::source), std::invalid_argument);
  CHECK_THROWS_AS(LabeledBinaryTree::from_children({0, 0, 0}, {0, 0, 0}, TreeFlavor::source), std::invalid_argument);
}

TEST_CASE("weak order examples") {
  auto w = weak_order_of(build_trees(P("1234")));
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) CHECK(w.less(i, j));
  }
  w = weak_order_of(build_trees(P("2143")));
  CHECK(w.less(2, 1));
  CHECK(w.less(2, 4));
  CHECK(w.less(4, 3));
  CHECK(w.less(1, 3));
  CHECK(w.less(2, 3));
  CHECK_FALSE(w.less(1, 4));
  CHECK_FALSE(w.less(4, 1));
  CHECK(w.cover_count() == 4);
}

TEST_CASE("order relation utilities") {
  OrderRelation r(3);
  r.set_less(1, 2);
  r.set_less(2, 3);
  r.close_transitively();
  CHECK(r.less(1, 3));
  CHECK(r.is_strict_partial_order());
  CHECK(r.cover_count() == 2);
  CHECK(r.is_linear_extension(P("123")));
  CHECK_FALSE(r.is_linear_extension(P("132")));
  OrderRelation cyc(2);
  cyc.set_less(1, 2);
  cyc.set_less(2, 1);
  CHECK_THROWS_AS(cyc.close_transitively(), std::logic_error);
}

TEST_CASE("weak classes are the linear extensions of the weak order") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& c : enumerate_classes(n, ArcIdealKind::weak)) {
      const auto w = weak_order_of(build_trees(c.bottom));
      CHECK(w.is_strict_partial_order());
      CHECK(oracle::linear_extensions(n, relations(w)) == class_members(c.bottom, ArcIdealKind::weak));
    }
  }
}

TEST_CASE("strong order examples") {
  const auto id = strong_order_of(congruence_class(P("1234"), ArcIdealKind::strong));
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) CHECK(id.less(i, j));
  }
  const auto s = strong_order_of(congruence_class(P("24513"), ArcIdealKind::strong));
  CHECK_FALSE(s.less(1, 5));
  CHECK_FALSE(s.less(5, 1));
  CHECK(s.less(2, 4));
  CHECK_THROWS_AS(strong_order_of(congruence_class(P("1234"), ArcIdealKind::weak)), std::invalid_argument);
}

TEST_CASE("strong classes are linear extensions of an extension of the weak order") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& c : enumerate_classes(n, ArcIdealKind::strong)) {
      const auto s = strong_order_of(c);
      CHECK(s.is_strict_partial_order());
      CHECK(oracle::linear_extensions(n, relations(s)) == class_members(c.bottom, ArcIdealKind::strong));
      CHECK(s.extends(weak_order_of(build_trees(c.bottom))));
    }
  }
}

TEST_CASE("tree JSON") {
  const auto doc = nlohmann::json::parse(build_trees(P("2143")).target.to_json());
  CHECK(doc["root"] == 3);
  CHECK(doc["flavor"] == "target");
  CHECK(doc["nodes"]["1"]["left"].is_null());
  CHECK(doc["nodes"]["1"]["right"] == 2);
  CHECK(doc["nodes"]["3"]["left"] == 1);
}
