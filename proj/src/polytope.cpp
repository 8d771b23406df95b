#include "rectangulotope/polytope.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rectangulotope/parallel.hpp"

namespace rectangulotope {

namespace {

Coord checked_add(Coord a, Coord b) {
  Coord r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coordinate overflow");
  return r;
}

Coord checked_mul(Coord a, Coord b) {
  Coord r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coordinate overflow");
  return r;
}

void add_unit(std::vector<Coord>& v, int i, Coord amount) {
  auto& slot = v[static_cast<std::size_t>(i - 1)];
  slot = checked_add(slot, amount);
}

}  // namespace

Coord VertexPoint::sum() const {
  Coord s = 0;
  for (Coord c : coords) s = checked_add(s, c);
  return s;
}

Coord VertexPoint::dot(std::span<const Coord> direction) const {
  if (direction.size() != coords.size()) throw std::invalid_argument("dimension mismatch");
  Coord s = 0;
  for (std::size_t k = 0; k < coords.size(); ++k) s = checked_add(s, checked_mul(coords[k], direction[k]));
  return s;
}

std::string VertexPoint::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(coords[k]);
  }
  return out + ")";
}

std::string_view to_string(FacetKind kind) { return kind == FacetKind::weak ? "weak" : "strong"; }

FacetKind parse_facet_kind(std::string_view name) {
  if (name == "weak") return FacetKind::weak;
  if (name == "strong") return FacetKind::strong;
  throw std::invalid_argument("polytope kind must be weak or strong, got '" + std::string(name) + "'");
}

ArcIdealKind ideal_of(FacetKind kind) {
  return kind == FacetKind::weak ? ArcIdealKind::weak : ArcIdealKind::strong;
}

VertexPoint assoc_vertex(const LabeledBinaryTree& tree) {
  VertexPoint v{std::vector<Coord>(static_cast<std::size_t>(tree.size()), 0)};
  for (int i = 1; i <= tree.size(); ++i) {
    const Coord left = (tree.left(i) ? tree.subtree_hi(tree.left(i)) - tree.subtree_lo(tree.left(i)) + 1 : 0) + 1;
    const Coord right = (tree.right(i) ? tree.subtree_hi(tree.right(i)) - tree.subtree_lo(tree.right(i)) + 1 : 0) + 1;
    v.coords[static_cast<std::size_t>(i - 1)] = checked_mul(left, right);
  }
  return v;
}

VertexPoint weak_vertex(const CongruenceClass& c) {
  if (c.ideal != ArcIdealKind::weak) throw std::invalid_argument("weak_vertex needs a weak class");
  const auto tt = build_trees(c.bottom);
  const auto t = leaf_counts(tt.target);
  const auto s = leaf_counts(tt.source);
  const int n = c.bottom.size();
  VertexPoint v{std::vector<Coord>(static_cast<std::size_t>(n), 0)};
  for (int i = 1; i <= n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    v.coords[k - 1] = checked_add(checked_mul(t.horizontal[k], t.vertical[k]),
                                  -checked_mul(s.horizontal[k], s.vertical[k]));
  }
  return v;
}

VertexPoint strong_vertex(const CongruenceClass& c) {
  if (c.ideal != ArcIdealKind::strong) throw std::invalid_argument("strong_vertex needs a strong class");
  const auto tt = build_trees(c.bottom);
  const auto t = leaf_counts(tt.target);
  const auto s = leaf_counts(tt.source);
  const auto common = common_leaf_counts(tt);
  const auto order = strong_order_of(c);
  const int n = c.bottom.size();
  VertexPoint v{std::vector<Coord>(static_cast<std::size_t>(n), 0)};
  for (int i = 1; i <= n; ++i) {
    const auto si = static_cast<std::size_t>(i);
    for (int j = i + 1; j <= n; ++j) {
      const auto sj = static_cast<std::size_t>(j);
      Coord yin = 0;
      Coord yang = 0;
      if (order.less(j, i)) yin = checked_mul(checked_mul(t.horizontal[si], common.cv(i, j)), s.horizontal[sj]);
      if (order.less(i, j)) yang = checked_mul(checked_mul(s.vertical[si], common.ch(i, j)), t.vertical[sj]);
      const Coord w = checked_add(yin, -yang);
      add_unit(v.coords, i, w);
      add_unit(v.coords, j, -w);
    }
  }
  return v;
}

VertexPoint formula_vertex(FacetKind kind, const Permutation& p) {
  const auto c = congruence_class(p, ideal_of(kind));
  return kind == FacetKind::weak ? weak_vertex(c) : strong_vertex(c);
}

SubsetMask to_mask(std::span<const int> subset, int n) {
  if (n < 1 || n > 62) throw std::out_of_range("subset masks support 1 <= n <= 62");
  SubsetMask m = 0;
  for (int v : subset) {
    if (v < 1 || v > n) throw std::out_of_range("subset element " + std::to_string(v) + " outside [n]");
    m |= SubsetMask{1} << (v - 1);
  }
  return m;
}

std::vector<int> from_mask(SubsetMask mask, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    if ((mask >> (i - 1)) & 1u) out.push_back(i);
  }
  return out;
}

Coord facet_value(FacetKind kind, SubsetMask subset, int n) {
  if (n < 1 || n > 62) throw std::out_of_range("facet values support 1 <= n <= 62");
  if (subset >> n) throw std::out_of_range("subset mask outside [n]");
  // prefix[k] = |X intersect [1, k]|
  std::vector<int> prefix(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    prefix[static_cast<std::size_t>(i)] = prefix[static_cast<std::size_t>(i - 1)] + static_cast<int>((subset >> (i - 1)) & 1u);
  }
  auto in_x = [&prefix](int lo, int hi) {
    return prefix[static_cast<std::size_t>(hi)] - prefix[static_cast<std::size_t>(lo - 1)];
  };
  Coord total = 0;
  if (kind == FacetKind::weak) {
    for (int a = 1; a <= n; ++a) {
      for (int b = a; b <= n; ++b) {
        const int k = in_x(a, b);
        if (k > 0 && k < b - a + 1) ++total;
      }
    }
    return total;
  }
  for (int a = 1; a <= n; ++a) {
    for (int m = a; m < n; ++m) {
      const int ki = in_x(a, m);
      const int li = m - a + 1;
      for (int b = m + 1; b <= n; ++b) {
        const int kj = in_x(m + 1, b);
        const int lj = b - m;
        if (ki > 0 && kj < lj) ++total;  // I meets X, J leaves X
        if (ki < li && kj > 0) ++total;  // I leaves X, J meets X
      }
    }
  }
  return total;
}

Coord facet_value(FacetKind kind, std::span<const int> subset, int n) {
  return facet_value(kind, to_mask(subset, n), n);
}

VertexPoint greedy_vertex(FacetKind kind, const Permutation& p) {
  const int n = p.size();
  VertexPoint v{std::vector<Coord>(static_cast<std::size_t>(n), 0)};
  SubsetMask suffix = 0;
  Coord previous = 0;  // f(empty set)
  for (int k = n; k >= 1; --k) {
    suffix |= SubsetMask{1} << (p(k) - 1);
    const Coord value = facet_value(kind, suffix, n);
    v.coords[static_cast<std::size_t>(p(k) - 1)] = checked_add(value, -previous);
    previous = value;
  }
  return v;
}

std::vector<Facet> facets(FacetKind kind, int n) {
  std::vector<SubsetMask> masks;
  const SubsetMask full = (SubsetMask{1} << n) - 1;
  for (SubsetMask m = 1; m < full; ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [n](SubsetMask x, SubsetMask y) {
    const int cx = std::popcount(x);
    const int cy = std::popcount(y);
    if (cx != cy) return cx < cy;
    return from_mask(x, n) < from_mask(y, n);
  });
  std::vector<Facet> out;
  out.reserve(masks.size());
  for (SubsetMask m : masks) out.push_back(Facet{from_mask(m, n), facet_value(kind, m, n)});
  return out;
}

// ---------------------------------------------------------------------------
// Shard polytopes

std::vector<Coord> AlternatingMatching::characteristic_vector(int n) const {
  std::vector<Coord> v(static_cast<std::size_t>(n), 0);
  for (auto [i, j] : pairs) {
    add_unit(v, i, 1);
    add_unit(v, j, -1);
  }
  return v;
}

namespace {

void extend_matchings(const Arc& arc, const std::vector<int>& starts, const std::vector<int>& ends, int from,
                      std::vector<std::pair<int, int>>& current, std::vector<AlternatingMatching>& out) {
  out.push_back(AlternatingMatching{arc, current});
  for (int i : starts) {
    if (i < from) continue;
    for (int j : ends) {
      if (j <= i) continue;
      current.emplace_back(i, j);
      extend_matchings(arc, starts, ends, j + 1, current, out);
      current.pop_back();
    }
  }
}

}  // namespace

std::vector<AlternatingMatching> alternating_matchings(const Arc& arc) {
  std::vector<int> starts{arc.a};
  starts.insert(starts.end(), arc.above.begin(), arc.above.end());
  std::vector<int> ends(arc.below.begin(), arc.below.end());
  ends.push_back(arc.b);
  std::vector<AlternatingMatching> out;
  std::vector<std::pair<int, int>> current;
  extend_matchings(arc, starts, ends, arc.a, current, out);
  return out;
}

std::vector<std::vector<Coord>> shard_vertices(const Arc& arc, int n) {
  if (arc.b > n) throw std::out_of_range("arc does not fit in [n]");
  std::vector<std::vector<Coord>> out;
  for (const auto& m : alternating_matchings(arc)) out.push_back(m.characteristic_vector(n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Coord> shard_translation(const Arc& arc, ShardFamily family, int n) {
  std::vector<Coord> t(static_cast<std::size_t>(n), 0);
  switch (family) {
    case ShardFamily::up: add_unit(t, arc.b, 1); break;
    case ShardFamily::down: add_unit(t, arc.a, -1); break;
    case ShardFamily::yin: break;
    case ShardFamily::yang:
      add_unit(t, arc.a, -1);
      add_unit(t, arc.b, 1);
      break;
  }
  return t;
}

bool arc_in_family(const Arc& arc, ShardFamily family) {
  switch (family) {
    case ShardFamily::up: return ideal_contains(ArcIdealKind::sylvester, arc);
    case ShardFamily::down: return ideal_contains(ArcIdealKind::antisylvester, arc);
    case ShardFamily::yin: return ideal_contains(ArcIdealKind::yin, arc);
    case ShardFamily::yang: return ideal_contains(ArcIdealKind::yang, arc);
  }
  return false;
}

namespace {

// Element of [lo, hi] with the largest (or smallest) position in p.
int extreme_position(const std::vector<int>& pos, int lo, int hi, bool largest) {
  int best = lo;
  for (int k = lo + 1; k <= hi; ++k) {
    const bool better = largest ? pos[static_cast<std::size_t>(k)] > pos[static_cast<std::size_t>(best)]
                                : pos[static_cast<std::size_t>(k)] < pos[static_cast<std::size_t>(best)];
    if (better) best = k;
  }
  return best;
}

}  // namespace

std::vector<Coord> shard_extremal(const Arc& arc, ShardFamily family, const Permutation& p) {
  if (!arc_in_family(arc, family)) throw std::invalid_argument("arc " + arc.to_string() + " is not in the family");
  const int n = p.size();
  if (arc.b > n) throw std::out_of_range("arc does not fit the permutation");
  const auto pos = p.positions();
  std::vector<Coord> v(static_cast<std::size_t>(n), 0);
  switch (family) {
    case ShardFamily::up:
      add_unit(v, extreme_position(pos, arc.a, arc.b, true), 1);
      break;
    case ShardFamily::down:
      add_unit(v, extreme_position(pos, arc.a, arc.b, false), -1);
      break;
    case ShardFamily::yin: {
      const int mid = arc.a + static_cast<int>(arc.above.size());
      const int i = extreme_position(pos, arc.a, mid, true);
      const int j = extreme_position(pos, mid + 1, arc.b, false);
      if (pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(j)]) {
        add_unit(v, i, 1);
        add_unit(v, j, -1);
      }
      break;
    }
    case ShardFamily::yang: {
      const int mid = arc.a + static_cast<int>(arc.below.size());
      const int i = extreme_position(pos, arc.a, mid, false);
      const int j = extreme_position(pos, mid + 1, arc.b, true);
      if (pos[static_cast<std::size_t>(i)] < pos[static_cast<std::size_t>(j)]) {
        add_unit(v, j, 1);
        add_unit(v, i, -1);
      }
      break;
    }
  }
  return v;
}

namespace {

std::vector<int> run(int lo, int hi) {
  std::vector<int> out;
  for (int k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

}  // namespace

Arc up_arc(int lo, int hi) { return Arc::make(lo, hi, run(lo + 1, hi - 1), {}); }
Arc down_arc(int lo, int hi) { return Arc::make(lo, hi, {}, run(lo + 1, hi - 1)); }
Arc yin_arc(int lo, int mid, int hi) { return Arc::make(lo, hi, run(lo + 1, mid), run(mid + 1, hi - 1)); }
Arc yang_arc(int lo, int mid, int hi) { return Arc::make(lo, hi, run(mid + 1, hi - 1), run(lo + 1, mid)); }

VertexPoint minkowski_vertex(FacetKind kind, const Permutation& p) {
  const int n = p.size();
  VertexPoint v{std::vector<Coord>(static_cast<std::size_t>(n), 0)};
  auto accumulate = [&v](const std::vector<Coord>& summand) {
    for (std::size_t k = 0; k < summand.size(); ++k) v.coords[k] = checked_add(v.coords[k], summand[k]);
  };
  if (kind == FacetKind::weak) {
    for (int lo = 1; lo <= n; ++lo) {
      for (int hi = lo + 1; hi <= n; ++hi) {
        accumulate(shard_extremal(up_arc(lo, hi), ShardFamily::up, p));
        accumulate(shard_extremal(down_arc(lo, hi), ShardFamily::down, p));
      }
    }
    return v;
  }
  for (int lo = 1; lo <= n; ++lo) {
    for (int mid = lo; mid < n; ++mid) {
      for (int hi = mid + 1; hi <= n; ++hi) {
        accumulate(shard_extremal(yin_arc(lo, mid, hi), ShardFamily::yin, p));
        accumulate(shard_extremal(yang_arc(lo, mid, hi), ShardFamily::yang, p));
      }
    }
  }
  return v;
}

std::vector<VertexPoint> class_vertices(FacetKind kind, std::span<const CongruenceClass> classes) {
  std::vector<std::optional<VertexPoint>> slots(classes.size());
  parallel_for(classes.size(), [&](std::size_t k) {
    slots[k] = kind == FacetKind::weak ? weak_vertex(classes[k]) : strong_vertex(classes[k]);
  });
  std::vector<VertexPoint> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::string vertex_to_json(const CongruenceClass& c, const VertexPoint& v) {
  return nlohmann::json{{"class", c.id()}, {"vertex", v.coords}}.dump();
}

std::string polytope_to_json(FacetKind kind, int n, std::span<const CongruenceClass> classes,
                             std::span<const VertexPoint> vertices, std::span<const Facet> facet_list) {
  nlohmann::json doc;
  doc["n"] = n;
  doc["kind"] = to_string(kind);
  doc["vertices"] = nlohmann::json::array();
  for (std::size_t k = 0; k < classes.size() && k < vertices.size(); ++k) {
    doc["vertices"].push_back({{"class", classes[k].id()}, {"vertex", vertices[k].coords}});
  }
  doc["facets"] = nlohmann::json::array();
  for (const auto& f : facet_list) doc["facets"].push_back({{"X", f.subset}, {"rhs", f.rhs}});
  return doc.dump(2);
}

}  // namespace rectangulotope
