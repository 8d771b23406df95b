#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rectangulotope/congruence.hpp"
#include "rectangulotope/permutation.hpp"
#include "rectangulotope/twin_trees.hpp"

namespace rectangulotope {

using Coord = std::int64_t;

/// Integer point in R^n. Rectangulotope vertices sum to zero.
struct VertexPoint {
  std::vector<Coord> coords;

  int size() const { return static_cast<int>(coords.size()); }
  Coord operator[](int i) const { return coords[static_cast<std::size_t>(i - 1)]; }  // 1-based
  Coord sum() const;
  Coord dot(std::span<const Coord> direction) const;
  std::string to_string() const;  // "(-3,-1,1,3)"

  friend bool operator==(const VertexPoint&, const VertexPoint&) = default;
  friend auto operator<=>(const VertexPoint&, const VertexPoint&) = default;
};

enum class FacetKind { weak, strong };

std::string_view to_string(FacetKind kind);
FacetKind parse_facet_kind(std::string_view name);  // throws std::invalid_argument
ArcIdealKind ideal_of(FacetKind kind);

/// Loday's associahedron vertex of a binary tree: left leaves times right
/// leaves at every node.
VertexPoint assoc_vertex(const LabeledBinaryTree& tree);

/// h^T v^T - h^S v^S on the twin trees of the class bottom.
VertexPoint weak_vertex(const CongruenceClass& c);

/// Quadratic formula over pairs i < j, gated by the strong poset.
VertexPoint strong_vertex(const CongruenceClass& c);

/// weak_vertex or strong_vertex according to `kind`, for the class of p.
VertexPoint formula_vertex(FacetKind kind, const Permutation& p);

/// Subsets of [n] as bit masks; bit i-1 stands for element i. n <= 62.
using SubsetMask = std::uint64_t;

SubsetMask to_mask(std::span<const int> subset, int n);  // throws std::out_of_range
std::vector<int> from_mask(SubsetMask mask, int n);

/// Right-hand side of the facet inequality sum_{i in X} x_i <= f(X).
/// f(empty) = f([n]) = 0.
Coord facet_value(FacetKind kind, SubsetMask subset, int n);
Coord facet_value(FacetKind kind, std::span<const int> subset, int n);

/// Vertex whose normal cone contains the chamber x_{p_1} <= ... <= x_{p_n}:
/// coordinate p_k is f({p_k..p_n}) - f({p_{k+1}..p_n}).
VertexPoint greedy_vertex(FacetKind kind, const Permutation& p);

struct Facet {
  std::vector<int> subset;
  Coord rhs = 0;
};

/// All 2^n - 2 inequalities, ordered by subset size then lexicographically.
std::vector<Facet> facets(FacetKind kind, int n);

/// a <= i_1 < j_1 < ... < i_q < j_q <= b with i_p in {a} + A, j_p in {b} + B.
struct AlternatingMatching {
  Arc arc;
  std::vector<std::pair<int, int>> pairs;

  std::vector<Coord> characteristic_vector(int n) const;
};

std::vector<AlternatingMatching> alternating_matchings(const Arc& arc);

/// Characteristic vectors of all alternating matchings (the empty matching
/// gives the origin), sorted.
std::vector<std::vector<Coord>> shard_vertices(const Arc& arc, int n);

/// How a shard polytope enters a Minkowski sum. The family fixes the
/// translation: up summands are conv{e_i}, down conv{-e_i}, yin
/// conv{0, e_i - e_j}, yang conv{0, e_j - e_i}.
enum class ShardFamily { up, down, yin, yang };

/// Offset that maps shard_vertices(arc) onto the summand used for `family`.
std::vector<Coord> shard_translation(const Arc& arc, ShardFamily family, int n);

/// True when the arc has the shape required by the family.
bool arc_in_family(const Arc& arc, ShardFamily family);

/// Vertex of the translated shard polytope maximising <p^-1, x>, from the
/// argmax/argmin shortcut. Throws std::invalid_argument if the arc does not
/// belong to the family.
std::vector<Coord> shard_extremal(const Arc& arc, ShardFamily family, const Permutation& p);

/// Arc constructors from intervals: up/down arcs of [lo, hi], yin/yang arcs of
/// the consecutive intervals [lo, mid] and [mid+1, hi].
Arc up_arc(int lo, int hi);
Arc down_arc(int lo, int hi);
Arc yin_arc(int lo, int mid, int hi);
Arc yang_arc(int lo, int mid, int hi);

/// Extremal vertex of the Minkowski sum of the summands of `kind` in
/// direction p^-1.
VertexPoint minkowski_vertex(FacetKind kind, const Permutation& p);

/// Vertex of each class, in class order. Runs in parallel.
std::vector<VertexPoint> class_vertices(FacetKind kind, std::span<const CongruenceClass> classes);

/// JSON documents used by the CLI.
std::string vertex_to_json(const CongruenceClass& c, const VertexPoint& v);
std::string polytope_to_json(FacetKind kind, int n, std::span<const CongruenceClass> classes,
                             std::span<const VertexPoint> vertices, std::span<const Facet> facet_list);

}  // namespace rectangulotope
