#include "rectangulotope/diagonal_drawing.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace rectangulotope {

DiagonalDrawing drawing_from_permutation(const Permutation& p) {
  const int n = p.size();
  const auto q = p.positions();  // q[v] = position of v in p
  auto at = [&q](int i) { return q[static_cast<std::size_t>(i)]; };
  DiagonalDrawing d{n, {}};
  for (int i = 1; i <= n; ++i) {
    int wl = 0, wu = 0, wr = n + 1, wd = n + 1;
    for (int j = 1; j < i; ++j) {
      if (at(j) < at(i)) wl = j;
      if (at(i) < at(j)) wu = j;
    }
    for (int j = n; j > i; --j) {
      if (at(i) < at(j)) wr = j;
      if (at(j) < at(i)) wd = j;
    }
    d.boxes.push_back(Box{i, wl, wr - 1, n - wd + 1, n - wu});
  }
  return d;
}

std::vector<Segment> drawing_segments(const DiagonalDrawing& d) {
  // Collect interior edges per supporting line, then merge touching runs.
  std::map<std::pair<bool, int>, std::vector<std::pair<int, int>>> lines;
  for (const auto& b : d.boxes) {
    if (b.x0 > 0) lines[{true, b.x0}].emplace_back(b.y0, b.y1);
    if (b.x1 < d.n) lines[{true, b.x1}].emplace_back(b.y0, b.y1);
    if (b.y0 > 0) lines[{false, b.y0}].emplace_back(b.x0, b.x1);
    if (b.y1 < d.n) lines[{false, b.y1}].emplace_back(b.x0, b.x1);
  }
  std::vector<Segment> out;
  for (auto& [key, runs] : lines) {
    std::sort(runs.begin(), runs.end());
    int lo = runs.front().first;
    int hi = runs.front().second;
    for (std::size_t k = 1; k < runs.size(); ++k) {
      if (runs[k].first <= hi) {
        hi = std::max(hi, runs[k].second);
      } else {
        out.push_back(Segment{key.first, key.second, lo, hi});
        lo = runs[k].first;
        hi = runs[k].second;
      }
    }
    out.push_back(Segment{key.first, key.second, lo, hi});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool open_overlap(int a0, int a1, int b0, int b1) { return std::max(a0, b0) < std::min(a1, b1); }

bool closed_contains(const Box& b, int x, int y) { return b.x0 <= x && x <= b.x1 && b.y0 <= y && y <= b.y1; }

// Interval of the diagonal parameter x (on x + y = n) inside the open box.
std::pair<int, int> diagonal_span(const Box& b, int n) {
  return {std::max(b.x0, n - b.y1), std::min(b.x1, n - b.y0)};
}

}  // namespace

DrawingValidation validate_drawing(const DiagonalDrawing& d) {
  DrawingValidation v;
  const int n = d.n;
  auto fail = [&v](bool& flag, const std::string& why) {
    if (v.problem.empty()) v.problem = why;
    flag = false;
  };
  if (static_cast<int>(d.boxes.size()) != n) {
    fail(v.tiling, "box count differs from n");
    return v;
  }
  long long area = 0;
  for (const auto& b : d.boxes) {
    if (b.x0 < 0 || b.y0 < 0 || b.x1 > n || b.y1 > n || b.x0 >= b.x1 || b.y0 >= b.y1) {
      fail(v.tiling, "box " + std::to_string(b.label) + " is empty or leaves the square");
    }
    area += static_cast<long long>(b.x1 - b.x0) * (b.y1 - b.y0);
  }
  for (std::size_t i = 0; i < d.boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < d.boxes.size(); ++j) {
      const auto& a = d.boxes[i];
      const auto& b = d.boxes[j];
      if (open_overlap(a.x0, a.x1, b.x0, b.x1) && open_overlap(a.y0, a.y1, b.y0, b.y1)) {
        fail(v.tiling, "boxes " + std::to_string(a.label) + " and " + std::to_string(b.label) + " overlap");
      }
    }
  }
  if (area != static_cast<long long>(n) * n) fail(v.tiling, "boxes do not cover the square");
  if (!v.tiling) return v;

  std::set<std::pair<int, int>> corners;
  for (const auto& b : d.boxes) {
    corners.insert({b.x0, b.y0});
    corners.insert({b.x0, b.y1});
    corners.insert({b.x1, b.y0});
    corners.insert({b.x1, b.y1});
  }
  for (auto [x, y] : corners) {
    if (x == 0 || y == 0 || x == n || y == n) continue;
    const auto touching = std::count_if(d.boxes.begin(), d.boxes.end(),
                                        [x = x, y = y](const Box& b) { return closed_contains(b, x, y); });
    if (touching != 3) {
      fail(v.generic, "junction (" + std::to_string(x) + "," + std::to_string(y) + ") touches " +
                          std::to_string(touching) + " boxes");
    }
  }

  int previous_hi = 0;
  for (int label = 1; label <= n; ++label) {
    const Box& b = d.box(label);
    if (b.label != label) fail(v.inorder, "boxes are not stored by label");
    if (!(b.x0 + b.y0 < n && n < b.x1 + b.y1)) {
      fail(v.diagonal, "box " + std::to_string(label) + " misses the diagonal");
      continue;
    }
    const auto [lo, hi] = diagonal_span(b, n);
    if (lo != previous_hi) fail(v.inorder, "diagonal meets box " + std::to_string(label) + " out of order");
    previous_hi = hi;
  }

  const auto segs = drawing_segments(d);
  if (static_cast<int>(segs.size()) != n - 1) {
    fail(v.segments, "expected " + std::to_string(n - 1) + " segments, found " + std::to_string(segs.size()));
  }
  for (const auto& s : segs) {
    // The point of the supporting line on the diagonal must be interior to the segment.
    const int cross = n - s.coord;
    if (!(s.lo < cross && cross < s.hi)) {
      fail(v.segments, "a segment does not cross the diagonal");
    }
  }
  return v;
}

DiagonalDrawing diagonal_drawing(const CongruenceClass& c) {
  if (c.ideal != ArcIdealKind::weak) throw std::invalid_argument("diagonal drawings need a weak class");
  auto d = drawing_from_permutation(c.bottom);
  if (auto check = validate_drawing(d); !check.ok()) {
    throw std::logic_error("invalid drawing for class " + c.id() + ": " + check.problem);
  }
  return d;
}

namespace {

std::optional<int> box_with_bottom_right(const DiagonalDrawing& d, int x, int y) {
  for (const auto& b : d.boxes) {
    if (b.x1 == x && b.y0 == y) return b.label;
  }
  return std::nullopt;
}

std::optional<int> box_with_top_left(const DiagonalDrawing& d, int x, int y) {
  for (const auto& b : d.boxes) {
    if (b.x0 == x && b.y1 == y) return b.label;
  }
  return std::nullopt;
}

// Index of the maximal segment supporting the given edge, or -1 on the boundary.
int supporting_segment(const std::vector<Segment>& segs, bool vertical, int coord, int lo, int hi) {
  for (std::size_t k = 0; k < segs.size(); ++k) {
    const auto& s = segs[k];
    if (s.vertical == vertical && s.coord == coord && s.lo <= lo && hi <= s.hi) return static_cast<int>(k);
  }
  return -1;
}

int leaf_gap(const LabeledBinaryTree& t, const GapLeaf& leaf) {
  return t.is_left(leaf.side) ? leaf.node - 1 : leaf.node;
}

}  // namespace

ExtractedStructure extract_structure(const DiagonalDrawing& d) {
  const int n = d.n;
  const auto slots = static_cast<std::size_t>(n) + 1;
  std::vector<int> s_left(slots, 0), s_right(slots, 0), t_left(slots, 0), t_right(slots, 0);
  for (const auto& b : d.boxes) {
    const auto r = b.label;
    // Source corner s(r) = (x0, y0).
    if (!(b.x0 == 0 && b.y0 == 0)) {
      if (auto p = box_with_bottom_right(d, b.x0, b.y0)) {
        s_right[static_cast<std::size_t>(*p)] = r;  // horizontal child
      } else if (auto q = box_with_top_left(d, b.x0, b.y0)) {
        s_left[static_cast<std::size_t>(*q)] = r;  // vertical child
      } else {
        throw std::logic_error("source corner of box " + std::to_string(r) + " has no parent");
      }
    }
    // Target corner t(r) = (x1, y1).
    if (!(b.x1 == n && b.y1 == n)) {
      if (auto p = box_with_bottom_right(d, b.x1, b.y1)) {
        t_right[static_cast<std::size_t>(*p)] = r;  // vertical child
      } else if (auto q = box_with_top_left(d, b.x1, b.y1)) {
        t_left[static_cast<std::size_t>(*q)] = r;  // horizontal child
      } else {
        throw std::logic_error("target corner of box " + std::to_string(r) + " has no parent");
      }
    }
  }
  ExtractedStructure out{
      TwinTrees{LabeledBinaryTree::from_children(s_left, s_right, TreeFlavor::source),
                LabeledBinaryTree::from_children(t_left, t_right, TreeFlavor::target)},
      OrderRelation(n),
      {}};

  for (const auto& a : d.boxes) {
    for (const auto& b : d.boxes) {
      if (a.x1 == b.x0 && open_overlap(a.y0, a.y1, b.y0, b.y1)) out.weak_order.set_less(a.label, b.label);
      if (a.y1 == b.y0 && open_overlap(a.x0, a.x1, b.x0, b.x1)) out.weak_order.set_less(a.label, b.label);
    }
  }
  out.weak_order.close_transitively();

  const auto segs = drawing_segments(d);
  struct SupportedLeaf {
    GapLeaf leaf;
    int segment;
  };
  std::vector<SupportedLeaf> t_leaves, s_leaves;
  const auto& S = out.trees.source;
  const auto& T = out.trees.target;
  for (const auto& b : d.boxes) {
    const int i = b.label;
    if (T.child(i, Side::vertical) == LabeledBinaryTree::kNone) {
      t_leaves.push_back({{i, Side::vertical}, supporting_segment(segs, true, b.x1, b.y0, b.y1)});
    }
    if (T.child(i, Side::horizontal) == LabeledBinaryTree::kNone) {
      t_leaves.push_back({{i, Side::horizontal}, supporting_segment(segs, false, b.y1, b.x0, b.x1)});
    }
    if (S.child(i, Side::vertical) == LabeledBinaryTree::kNone) {
      s_leaves.push_back({{i, Side::vertical}, supporting_segment(segs, true, b.x0, b.y0, b.y1)});
    }
    if (S.child(i, Side::horizontal) == LabeledBinaryTree::kNone) {
      s_leaves.push_back({{i, Side::horizontal}, supporting_segment(segs, false, b.y0, b.x0, b.x1)});
    }
  }
  for (const auto& tl : t_leaves) {
    if (tl.segment < 0) continue;
    for (const auto& sl : s_leaves) {
      if (sl.segment == tl.segment) out.common_pairs.push_back({tl.leaf, sl.leaf});
    }
  }
  std::sort(out.common_pairs.begin(), out.common_pairs.end(),
            [&T, &S](const CommonLeafPair& x, const CommonLeafPair& y) {
              return std::pair(leaf_gap(T, x.target_leaf), leaf_gap(S, x.source_leaf)) <
                     std::pair(leaf_gap(T, y.target_leaf), leaf_gap(S, y.source_leaf));
            });
  return out;
}

std::vector<CommonLeafPair> equal_gap_pairs(const TwinTrees& tt) {
  std::vector<CommonLeafPair> out;
  for (int g = 1; g < tt.target.size(); ++g) {
    out.push_back({leaf_at_gap(tt.target, g), leaf_at_gap(tt.source, g)});
  }
  return out;
}

RenderFormat parse_render_format(std::string_view name) {
  if (name == "ascii") return RenderFormat::ascii;
  if (name == "svg") return RenderFormat::svg;
  if (name == "json") return RenderFormat::json;
  throw std::invalid_argument("unknown drawing format '" + std::string(name) + "'");
}

namespace {

std::string render_ascii(const DiagonalDrawing& d) {
  const int n = d.n;
  const int width = std::max<int>(2, static_cast<int>(std::to_string(n).size()));
  // owner[row][col]: label of the box covering unit cell (col, n-1-row).
  std::vector<std::vector<int>> owner(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (const auto& b : d.boxes) {
    for (int y = b.y0; y < b.y1; ++y) {
      for (int x = b.x0; x < b.x1; ++x) owner[static_cast<std::size_t>(n - 1 - y)][static_cast<std::size_t>(x)] = b.label;
    }
  }
  auto cell = [&](int row, int col) { return owner[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]; };
  auto floor_below = [&](int row, int col) { return row == n - 1 || cell(row, col) != cell(row + 1, col); };

  std::ostringstream os;
  os << ' ' << std::string(static_cast<std::size_t>(n * (width + 1) - 1), '_') << '\n';
  for (int row = 0; row < n; ++row) {
    os << '|';
    for (int col = 0; col < n; ++col) {
      const int label = cell(row, col);
      const Box& b = d.box(label);
      const bool anchor = col == b.x0 && row == n - b.y1;
      const char fill = floor_below(row, col) ? '_' : ' ';
      std::string text = anchor ? std::to_string(label) : "";
      text.resize(static_cast<std::size_t>(width), fill);
      os << text;
      if (col == n - 1 || cell(row, col + 1) != label) {
        os << '|';
      } else {
        os << (floor_below(row, col) && floor_below(row, col + 1) ? '_' : ' ');
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string render_svg(const DiagonalDrawing& d) {
  const int n = d.n;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << n << ' ' << n
     << "\" width=\"" << 40 * n << "\" height=\"" << 40 * n << "\">\n";
  os << "  <line x1=\"0\" y1=\"0\" x2=\"" << n << "\" y2=\"" << n
     << "\" stroke=\"#bbbbbb\" stroke-width=\"0.02\" stroke-dasharray=\"0.1\"/>\n";
  for (const auto& b : d.boxes) {
    os << "  <rect x=\"" << b.x0 << "\" y=\"" << n - b.y1 << "\" width=\"" << b.x1 - b.x0 << "\" height=\""
       << b.y1 - b.y0 << "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.04\"/>\n";
  }
  for (const auto& b : d.boxes) {
    const double cx = (b.x0 + b.x1) / 2.0;
    const double cy = n - (b.y0 + b.y1) / 2.0;
    os << "  <text x=\"" << cx << "\" y=\"" << cy
       << "\" font-size=\"0.4\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << b.label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_json(const DiagonalDrawing& d) {
  nlohmann::json doc;
  doc["n"] = d.n;
  doc["boxes"] = nlohmann::json::array();
  for (const auto& b : d.boxes) {
    doc["boxes"].push_back({{"label", b.label}, {"x0", b.x0}, {"x1", b.x1}, {"y0", b.y0}, {"y1", b.y1}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render(const DiagonalDrawing& d, RenderFormat format) {
  switch (format) {
    case RenderFormat::ascii: return render_ascii(d);
    case RenderFormat::svg: return render_svg(d);
    case RenderFormat::json: return render_json(d);
  }
  throw std::invalid_argument("unknown drawing format");
}

}  // namespace rectangulotope
