#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rectangulotope/congruence.hpp"
#include "rectangulotope/twin_trees.hpp"

namespace rectangulotope {

/// Axis-parallel rectangle [x0, x1] x [y0, y1] on the integer grid.
struct Box {
  int label = 0;
  int x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  friend bool operator==(const Box&, const Box&) = default;
};

/// Maximal interior segment of a drawing: x = coord, y in [lo, hi] when
/// vertical; y = coord, x in [lo, hi] otherwise.
struct Segment {
  bool vertical = true;
  int coord = 0;
  int lo = 0, hi = 0;
  friend bool operator==(const Segment&, const Segment&) = default;
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

/// A rectangulation of [0,n] x [0,n] with boxes stored by label (boxes[i-1]
/// has label i). Labels follow the order in which the NW-SE diagonal x + y = n
/// crosses the boxes.
struct DiagonalDrawing {
  int n = 0;
  std::vector<Box> boxes;

  const Box& box(int label) const { return boxes[static_cast<std::size_t>(label - 1)]; }
  friend bool operator==(const DiagonalDrawing&, const DiagonalDrawing&) = default;
};

/// Drawing of the weak class of p from nearest-larger / nearest-smaller
/// statistics of p^-1. Does not validate.
DiagonalDrawing drawing_from_permutation(const Permutation& p);

struct DrawingValidation {
  bool tiling = true;       // positive boxes, disjoint interiors, union is the square
  bool generic = true;      // every interior junction touches exactly three boxes
  bool diagonal = true;     // every box interior meets x + y = n
  bool inorder = true;      // diagonal meets the boxes in label order
  bool segments = true;     // n-1 segments, each crossing the diagonal once
  std::string problem;      // first violation found

  bool ok() const { return tiling && generic && diagonal && inorder && segments; }
};

DrawingValidation validate_drawing(const DiagonalDrawing& d);

/// Drawing of a weak class. Throws std::logic_error naming the class when the
/// construction violates a drawing invariant, std::invalid_argument for a
/// non-weak class.
DiagonalDrawing diagonal_drawing(const CongruenceClass& c);

std::vector<Segment> drawing_segments(const DiagonalDrawing& d);

/// A leaf of T paired with a leaf of S, each given by its node and side.
struct CommonLeafPair {
  GapLeaf target_leaf;
  GapLeaf source_leaf;
  friend bool operator==(const CommonLeafPair&, const CommonLeafPair&) = default;
};

struct ExtractedStructure {
  TwinTrees trees;
  OrderRelation weak_order;
  std::vector<CommonLeafPair> common_pairs;  // sorted by target leaf gap
};

/// Reads trees from the corner incidences of the drawing, the weak poset from
/// box adjacencies, and common leaves from shared supporting segments.
/// Throws std::logic_error if the drawing is not a generic rectangulation.
ExtractedStructure extract_structure(const DiagonalDrawing& d);

/// The common pairs predicted by the equal-gap rule: the gap-g leaves of T and
/// S for g = 1..n-1.
std::vector<CommonLeafPair> equal_gap_pairs(const TwinTrees& tt);

enum class RenderFormat { ascii, svg, json };

/// Throws std::invalid_argument for an unknown name.
RenderFormat parse_render_format(std::string_view name);

std::string render(const DiagonalDrawing& d, RenderFormat format);

}  // namespace rectangulotope
