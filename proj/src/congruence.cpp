#include "rectangulotope/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rectangulotope/parallel.hpp"

namespace rectangulotope {

namespace {

// True when `side` is exactly {a+1, ..., a+|side|}.
bool is_prefix_run(const std::vector<int>& side, int a) {
  for (std::size_t k = 0; k < side.size(); ++k) {
    if (side[k] != a + 1 + static_cast<int>(k)) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(ArcIdealKind kind) {
  switch (kind) {
    case ArcIdealKind::sylvester: return "sylvester";
    case ArcIdealKind::antisylvester: return "antisylvester";
    case ArcIdealKind::weak: return "weak";
    case ArcIdealKind::yin: return "yin";
    case ArcIdealKind::yang: return "yang";
    case ArcIdealKind::strong: return "strong";
    case ArcIdealKind::all: return "all";
  }
  return "?";
}

ArcIdealKind parse_ideal(std::string_view name) {
  for (auto kind : {ArcIdealKind::sylvester, ArcIdealKind::antisylvester, ArcIdealKind::weak,
                    ArcIdealKind::yin, ArcIdealKind::yang, ArcIdealKind::strong, ArcIdealKind::all}) {
    if (to_string(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown congruence '" + std::string(name) + "'");
}

bool ideal_contains(ArcIdealKind ideal, const Arc& arc) {
  switch (ideal) {
    case ArcIdealKind::sylvester: return arc.below.empty();
    case ArcIdealKind::antisylvester: return arc.above.empty();
    case ArcIdealKind::weak: return crossing_number(arc) == 0;
    case ArcIdealKind::yin: return is_prefix_run(arc.above, arc.a);
    case ArcIdealKind::yang: return is_prefix_run(arc.below, arc.a);
    case ArcIdealKind::strong: return crossing_number(arc) <= 1;
    case ArcIdealKind::all: return true;
  }
  return false;
}

Permutation project(const Permutation& p, ArcIdealKind ideal, Direction direction,
                    RewriteStrategy strategy) {
  const int n = p.size();
  const bool down = direction == Direction::down;
  Permutation q = p;
  for (;;) {
    int found = 0;
    for (int k = 1; k < n; ++k) {
      const int j = strategy == RewriteStrategy::leftmost ? k : n - k;
      if (q.is_descent(j) != down) continue;
      if (!ideal_contains(ideal, cover_arc(q, j))) {
        found = j;
        break;
      }
    }
    if (found == 0) return q;
    q = q.swapped(found);
  }
}

bool CongruenceClass::contains(const Permutation& p) const {
  return weak_leq(bottom, p) && weak_leq(p, top);
}

CongruenceClass congruence_class(const Permutation& p, ArcIdealKind ideal) {
  return CongruenceClass{project(p, ideal, Direction::down), project(p, ideal, Direction::up), ideal};
}

std::vector<Permutation> class_members(const Permutation& p, ArcIdealKind ideal) {
  std::set<Permutation> seen{p};
  std::deque<Permutation> queue{p};
  while (!queue.empty()) {
    const Permutation q = queue.front();
    queue.pop_front();
    for (int j = 1; j < q.size(); ++j) {
      if (ideal_contains(ideal, cover_arc(q, j))) continue;
      Permutation r = q.swapped(j);
      if (seen.insert(r).second) queue.push_back(std::move(r));
    }
  }
  return {seen.begin(), seen.end()};
}

bool is_class_bottom(const Permutation& p, ArcIdealKind ideal) {
  for (int j = 1; j < p.size(); ++j) {
    if (p.is_descent(j) && !ideal_contains(ideal, cover_arc(p, j))) return false;
  }
  return true;
}

std::vector<CongruenceClass> enumerate_classes(int n, ArcIdealKind ideal) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const std::size_t total = factorial(n);
  std::vector<char> keep(total, 0);
  parallel_for(total, [&](std::size_t r) {
    keep[r] = is_class_bottom(unrank_permutation(n, r), ideal) ? 1 : 0;
  });
  std::vector<std::size_t> ranks;
  for (std::size_t r = 0; r < total; ++r) {
    if (keep[r]) ranks.push_back(r);
  }
  // Lexicographic ranks are already in bottom-word order.
  std::vector<std::optional<CongruenceClass>> slots(ranks.size());
  parallel_for(ranks.size(), [&](std::size_t k) {
    const Permutation bottom = unrank_permutation(n, ranks[k]);
    slots[k] = CongruenceClass{bottom, project(bottom, ideal, Direction::up), ideal};
  });
  std::vector<CongruenceClass> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::size_t count_classes(int n, ArcIdealKind ideal) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const std::size_t total = factorial(n);
  std::vector<char> keep(total, 0);
  parallel_for(total, [&](std::size_t r) {
    keep[r] = is_class_bottom(unrank_permutation(n, r), ideal) ? 1 : 0;
  });
  return static_cast<std::size_t>(std::count(keep.begin(), keep.end(), 1));
}

namespace serial {

std::vector<CongruenceClass> enumerate_classes(int n, ArcIdealKind ideal) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::vector<CongruenceClass> out;
  for (const auto& p : all_permutations(n)) {
    if (is_class_bottom(p, ideal)) {
      out.push_back(CongruenceClass{p, project(p, ideal, Direction::up), ideal});
    }
  }
  return out;
}

}  // namespace serial

std::optional<int> CoverGraph::index_of(const Permutation& bottom) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), bottom,
                             [](const CongruenceClass& c, const Permutation& b) { return c.bottom < b; });
  if (it == nodes.end() || it->bottom != bottom) return std::nullopt;
  return static_cast<int>(it - nodes.begin());
}

std::vector<int> CoverGraph::degrees() const {
  std::vector<int> deg(nodes.size(), 0);
  for (auto [lo, hi] : edges) {
    ++deg[static_cast<std::size_t>(lo)];
    ++deg[static_cast<std::size_t>(hi)];
  }
  return deg;
}

CoverGraph quotient_cover_graph(int n, ArcIdealKind ideal) {
  CoverGraph g;
  g.n = n;
  g.ideal = ideal;
  g.nodes = enumerate_classes(n, ideal);
  std::vector<std::vector<std::pair<int, int>>> per_node(g.nodes.size());
  parallel_for(g.nodes.size(), [&](std::size_t k) {
    const Permutation& bottom = g.nodes[k].bottom;
    for (int j = 1; j < n; ++j) {
      if (!bottom.is_descent(j)) continue;
      const Permutation lower = project(bottom.swapped(j), ideal, Direction::down);
      const auto idx = g.index_of(lower);
      if (!idx) throw std::logic_error("lower cover " + lower.to_string() + " is not a class bottom");
      per_node[k].emplace_back(*idx, static_cast<int>(k));
    }
  });
  for (auto& list : per_node) g.edges.insert(g.edges.end(), list.begin(), list.end());
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

std::string cover_graph_to_dot(const CoverGraph& graph) {
  std::ostringstream os;
  os << "digraph quotient {\n";
  os << "  // n=" << graph.n << " congruence=" << to_string(graph.ideal) << "\n";
  os << "  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
    os << "  c" << k << " [label=\"" << graph.nodes[k].id() << "\"];\n";
  }
  for (auto [lo, hi] : graph.edges) os << "  c" << lo << " -> c" << hi << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

nlohmann::json class_json(const CongruenceClass& c) {
  return {{"bottom", c.bottom.to_string()}, {"top", c.top.to_string()}, {"ideal", to_string(c.ideal)}};
}

}  // namespace

std::string class_to_json(const CongruenceClass& c) { return class_json(c).dump(); }

std::string cover_graph_to_json(const CoverGraph& graph) {
  nlohmann::json doc;
  doc["n"] = graph.n;
  doc["ideal"] = to_string(graph.ideal);
  doc["nodes"] = nlohmann::json::array();
  for (const auto& c : graph.nodes) doc["nodes"].push_back(class_json(c));
  doc["edges"] = nlohmann::json::array();
  for (auto [lo, hi] : graph.edges) doc["edges"].push_back({lo, hi});
  return doc.dump(2);
}

}  // namespace rectangulotope
