#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

std::vector<Permutation> all_of(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace

PlainArc arc_of_swap(const Permutation& p, int j) {
  const int u = std::min(p(j), p(j + 1));
  const int v = std::max(p(j), p(j + 1));
  PlainArc arc{u, v, {}, {}};
  for (int k = 1; k <= p.size(); ++k) {
    const int val = p(k);
    if (val <= u || val >= v) continue;
    (k < j ? arc.above : arc.below).insert(val);
  }
  return arc;
}

bool in_ideal(ArcIdealKind ideal, const PlainArc& arc) {
  std::vector<int> side;  // 1 above, 0 below
  for (int v = arc.a + 1; v < arc.b; ++v) side.push_back(arc.above.count(v) ? 1 : 0);
  int changes = 0;
  for (std::size_t k = 1; k < side.size(); ++k) changes += side[k] != side[k - 1];
  const bool starts_above = !side.empty() && side.front() == 1;
  switch (ideal) {
    case ArcIdealKind::sylvester: return arc.below.empty();
    case ArcIdealKind::antisylvester: return arc.above.empty();
    case ArcIdealKind::weak: return changes == 0;
    case ArcIdealKind::strong: return changes <= 1;
    case ArcIdealKind::yin: return changes == 0 || (changes == 1 && starts_above);
    case ArcIdealKind::yang: return changes == 0 || (changes == 1 && !starts_above);
    case ArcIdealKind::all: return true;
  }
  return false;
}

std::vector<std::vector<Permutation>> class_partition(int n, ArcIdealKind ideal) {
  const auto perms = all_of(n);
  std::map<Permutation, int> index;
  for (std::size_t k = 0; k < perms.size(); ++k) index.emplace(perms[k], static_cast<int>(k));
  std::vector<int> parent(perms.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t k = 0; k < perms.size(); ++k) {
    for (int j = 1; j < n; ++j) {
      if (!in_ideal(ideal, arc_of_swap(perms[k], j))) {
        const int x = find_root(parent, static_cast<int>(k));
        const int y = find_root(parent, index.at(perms[k].swapped(j)));
        parent[static_cast<std::size_t>(x)] = y;
      }
    }
  }
  std::map<int, std::vector<Permutation>> blocks;
  for (std::size_t k = 0; k < perms.size(); ++k) {
    blocks[find_root(parent, static_cast<int>(k))].push_back(perms[k]);
  }
  std::vector<std::vector<Permutation>> out;
  for (auto& [root, members] : blocks) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int inversion_count(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) count += p(i) > p(j);
  }
  return count;
}

std::set<std::pair<Permutation, Permutation>> quotient_covers(int n, ArcIdealKind ideal) {
  const auto blocks = class_partition(n, ideal);
  std::map<Permutation, std::size_t> block_of;
  std::vector<Permutation> minimum;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (const auto& p : blocks[b]) block_of.emplace(p, b);
    minimum.push_back(*std::min_element(blocks[b].begin(), blocks[b].end(), [](const auto& x, const auto& y) {
      return inversion_count(x) < inversion_count(y);
    }));
  }
  const std::size_t m = blocks.size();
  std::vector<std::vector<bool>> less(m, std::vector<bool>(m, false));
  for (const auto& [p, b] : block_of) {
    for (int j = 1; j < n; ++j) {
      if (p(j) < p(j + 1)) {
        const std::size_t c = block_of.at(p.swapped(j));
        if (c != b) less[b][c] = true;
      }
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!less[i][k]) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (less[k][j]) less[i][j] = true;
      }
    }
  }
  std::set<std::pair<Permutation, Permutation>> covers;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!less[i][j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < m && direct; ++k) direct = !(less[i][k] && less[k][j]);
      if (direct) covers.emplace(minimum[i], minimum[j]);
    }
  }
  return covers;
}

std::vector<Permutation> linear_extensions(int n, const std::vector<std::pair<int, int>>& relations) {
  std::vector<Permutation> out;
  for (const auto& p : all_of(n)) {
    const auto pos = p.positions();
    bool ok = true;
    for (auto [i, j] : relations) ok = ok && pos[static_cast<std::size_t>(i)] < pos[static_cast<std::size_t>(j)];
    if (ok) out.push_back(p);
  }
  return out;
}

Coord facet_value(FacetKind kind, const std::set<int>& x, int n) {
  std::vector<std::set<int>> intervals;
  for (int a = 1; a <= n; ++a) {
    for (int b = a; b <= n; ++b) {
      std::set<int> interval;
      for (int v = a; v <= b; ++v) interval.insert(v);
      intervals.push_back(interval);
    }
  }
  auto inside = [&x](const std::set<int>& s) {
    return std::includes(x.begin(), x.end(), s.begin(), s.end());
  };
  auto meets = [&x](const std::set<int>& s) {
    return std::any_of(s.begin(), s.end(), [&x](int v) { return x.count(v) > 0; });
  };
  Coord total = 0;
  if (kind == FacetKind::weak) {
    for (const auto& i : intervals) total += (!inside(i) && meets(i)) ? 1 : 0;
    return total;
  }
  for (const auto& i : intervals) {
    for (const auto& j : intervals) {
      if (*i.rbegin() + 1 != *j.begin()) continue;
      if (meets(i) && !inside(j)) ++total;
      if (!inside(i) && meets(j)) ++total;
    }
  }
  return total;
}

namespace {

void bst_fill(const std::vector<int>& seq, BstSizes& out) {
  if (seq.empty()) return;
  const int root = seq.front();
  std::vector<int> smaller, larger;
  for (std::size_t k = 1; k < seq.size(); ++k) (seq[k] < root ? smaller : larger).push_back(seq[k]);
  out.left[static_cast<std::size_t>(root)] = static_cast<int>(smaller.size());
  out.right[static_cast<std::size_t>(root)] = static_cast<int>(larger.size());
  bst_fill(smaller, out);
  bst_fill(larger, out);
}

}  // namespace

BstSizes bst_sizes(const std::vector<int>& insertion_order, int n) {
  BstSizes out{std::vector<int>(static_cast<std::size_t>(n) + 1, 0), std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
  bst_fill(insertion_order, out);
  return out;
}

std::vector<Coord> weak_vertex(const Permutation& p) {
  const int n = p.size();
  std::vector<int> forward(p.word().begin(), p.word().end());
  std::vector<int> backward(forward.rbegin(), forward.rend());
  const auto t = bst_sizes(backward, n);
  const auto s = bst_sizes(forward, n);
  std::vector<Coord> x(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    x[k - 1] = Coord{t.left[k] + 1} * (t.right[k] + 1) - Coord{s.left[k] + 1} * (s.right[k] + 1);
  }
  return x;
}

bool contains_pattern(const Permutation& p, const std::vector<int>& values, const std::vector<int>& glued) {
  const int n = p.size();
  const int k = static_cast<int>(values.size());
  if (k > n) return false;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> positions;
    for (int i = 0; i < n; ++i) {
      if (pick[static_cast<std::size_t>(i)]) positions.push_back(i + 1);
    }
    bool ok = true;
    for (int g : glued) ok = ok && positions[static_cast<std::size_t>(g)] == positions[static_cast<std::size_t>(g - 1)] + 1;
    for (int x = 0; x < k && ok; ++x) {
      for (int y = 0; y < k && ok; ++y) {
        const bool text_less = p(positions[static_cast<std::size_t>(x)]) < p(positions[static_cast<std::size_t>(y)]);
        ok = text_less == (values[static_cast<std::size_t>(x)] < values[static_cast<std::size_t>(y)]);
      }
    }
    if (ok) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

std::set<std::vector<Coord>> shard_vertices(int a, int b, const std::set<int>& above, int n) {
  std::set<std::vector<Coord>> out;
  const int width = b - a + 1;
  for (unsigned mask = 0; mask < (1u << width); ++mask) {
    std::vector<int> chosen;
    for (int k = 0; k < width; ++k) {
      if (mask >> k & 1u) chosen.push_back(a + k);
    }
    if (chosen.size() % 2) continue;
    bool ok = true;
    for (std::size_t k = 0; k < chosen.size() && ok; ++k) {
      const int v = chosen[k];
      const bool start_ok = v == a || above.count(v);
      const bool end_ok = v == b || (v > a && v < b && !above.count(v));
      ok = k % 2 == 0 ? start_ok : end_ok;
    }
    if (!ok) continue;
    std::vector<Coord> x(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < chosen.size(); ++k) x[static_cast<std::size_t>(chosen[k] - 1)] += k % 2 == 0 ? 1 : -1;
    out.insert(x);
  }
  return out;
}

std::vector<std::vector<int>> raster(const rectangulotope::DiagonalDrawing& d) {
  std::vector<std::vector<int>> cells(static_cast<std::size_t>(d.n), std::vector<int>(static_cast<std::size_t>(d.n), 0));
  for (const auto& box : d.boxes) {
    for (int x = box.x0; x < box.x1; ++x) {
      for (int y = box.y0; y < box.y1; ++y) {
        if (x < 0 || y < 0 || x >= d.n || y >= d.n) continue;
        auto& cell = cells[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
        cell = cell == 0 ? box.label : -1;
      }
    }
  }
  return cells;
}

}  // namespace oracle
