#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rectangulotope/permutation.hpp"

namespace rectangulotope {

/// The named arc ideals of the weak Bruhat order on S_n.
enum class ArcIdealKind {
  sylvester,      // up arcs: B empty
  antisylvester,  // down arcs: A empty
  weak,           // crossing number 0
  yin,            // A a prefix of ]a,b[, B the rest
  yang,           // B a prefix of ]a,b[, A the rest
  strong,         // crossing number at most 1
  all,
};

std::string_view to_string(ArcIdealKind kind);

/// Accepts the lowercase names printed by to_string. Throws std::invalid_argument.
ArcIdealKind parse_ideal(std::string_view name);

bool ideal_contains(ArcIdealKind ideal, const Arc& arc);

enum class Direction { down, up };

/// Rewriting order used by project(); the result does not depend on it.
enum class RewriteStrategy { leftmost, rightmost };

/// Swaps covers whose arc lies outside the ideal until none is left: going
/// down over descents yields the class minimum, going up over ascents the
/// class maximum.
Permutation project(const Permutation& p, ArcIdealKind ideal, Direction direction,
                    RewriteStrategy strategy = RewriteStrategy::leftmost);

struct CongruenceClass {
  Permutation bottom;
  Permutation top;
  ArcIdealKind ideal;

  /// Canonical identifier: the bottom word.
  std::string id() const { return bottom.to_string(); }

  /// inv(bottom) within inv(p) within inv(top).
  bool contains(const Permutation& p) const;

  friend bool operator==(const CongruenceClass&, const CongruenceClass&) = default;
};

CongruenceClass congruence_class(const Permutation& p, ArcIdealKind ideal);

/// Members of the class of p, reached by swapping across covers whose arc is
/// outside the ideal. Sorted lexicographically.
std::vector<Permutation> class_members(const Permutation& p, ArcIdealKind ideal);

/// True when every arc of p's diagram lies in the ideal.
bool is_class_bottom(const Permutation& p, ArcIdealKind ideal);

/// All classes of S_n, sorted by bottom word. Filters S_n in parallel.
std::vector<CongruenceClass> enumerate_classes(int n, ArcIdealKind ideal);

/// Number of classes, without materialising tops.
std::size_t count_classes(int n, ArcIdealKind ideal);

/// Hasse diagram of the lattice quotient. Edges are (lower, upper) node
/// indices, sorted.
struct CoverGraph {
  int n = 0;
  ArcIdealKind ideal = ArcIdealKind::all;
  std::vector<CongruenceClass> nodes;
  std::vector<std::pair<int, int>> edges;

  /// Index of the class whose bottom is `bottom`, if any.
  std::optional<int> index_of(const Permutation& bottom) const;

  /// Undirected degree of each node.
  std::vector<int> degrees() const;
};

/// Lower covers of each class come from the descents of its bottom.
CoverGraph quotient_cover_graph(int n, ArcIdealKind ideal);

std::string cover_graph_to_dot(const CoverGraph& graph);
std::string cover_graph_to_json(const CoverGraph& graph);
std::string class_to_json(const CongruenceClass& c);

namespace serial {

/// Single-threaded reference for enumerate_classes.
std::vector<CongruenceClass> enumerate_classes(int n, ArcIdealKind ideal);

}  // namespace serial

}  // namespace rectangulotope
