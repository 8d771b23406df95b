#include "rectangulotope/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rectangulotope/parallel.hpp"

namespace rectangulotope {

namespace {

constexpr std::pair<Check, std::string_view> kCheckNames[] = {
    {Check::three_way, "three-way"},
    {Check::zero_sum, "zero-sum"},
    {Check::submodularity, "submodularity"},
    {Check::support_function, "support-function"},
    {Check::distinctness, "distinctness"},
    {Check::oriented_skeleton, "oriented-skeleton"},
    {Check::degree, "degree"},
    {Check::minkowski_consistency, "minkowski-consistency"},
};

using Failure = std::optional<std::string>;

// Smallest index whose probe fails, with its message.
class FirstFailure {
 public:
  explicit FirstFailure(bool parallel) : parallel_(parallel) {}

  template <typename Probe>
  Failure scan(std::size_t count, Probe&& probe) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    Failure message;
    auto visit = [&](std::size_t i) {
      Failure f = probe(i);
      if (!f) return;
#pragma omp critical(rectangulotope_first_failure)
      {
        if (i < best) {
          best = i;
          message = std::move(f);
        }
      }
    };
    if (parallel_) {
      parallel_for(count, visit);
    } else {
      for (std::size_t i = 0; i < count; ++i) {
        visit(i);
        if (message) break;
      }
    }
    return message;
  }

 private:
  bool parallel_;
};

std::string vec_string(const std::vector<Coord>& v) { return VertexPoint{v}.to_string(); }

// Shared data computed once per report.
struct Context {
  int n;
  FacetKind kind;
  bool parallel;
  std::vector<CongruenceClass> classes;
  std::vector<VertexPoint> vertices;
};

std::vector<VertexPoint> vertices_of(const Context& ctx) {
  if (ctx.parallel) return class_vertices(ctx.kind, ctx.classes);
  std::vector<VertexPoint> out;
  for (const auto& c : ctx.classes) {
    out.push_back(ctx.kind == FacetKind::weak ? weak_vertex(c) : strong_vertex(c));
  }
  return out;
}

Failure check_three_way(const Context& ctx) {
  return FirstFailure(ctx.parallel).scan(factorial(ctx.n), [&](std::size_t r) -> Failure {
    const auto p = unrank_permutation(ctx.n, r);
    const auto f = formula_vertex(ctx.kind, p);
    const auto g = greedy_vertex(ctx.kind, p);
    const auto m = minkowski_vertex(ctx.kind, p);
    if (f == g && g == m) return std::nullopt;
    return "p=" + p.to_string() + " formula " + f.to_string() + " greedy " + g.to_string() + " minkowski " +
           m.to_string();
  });
}

Failure check_zero_sum(const Context& ctx) {
  for (std::size_t k = 0; k < ctx.vertices.size(); ++k) {
    if (ctx.vertices[k].sum() != 0) {
      return "class " + ctx.classes[k].id() + " vertex " + ctx.vertices[k].to_string() + " sums to " +
             std::to_string(ctx.vertices[k].sum());
    }
  }
  return FirstFailure(ctx.parallel).scan(factorial(ctx.n), [&](std::size_t r) -> Failure {
    const auto p = unrank_permutation(ctx.n, r);
    const auto g = greedy_vertex(ctx.kind, p);
    if (g.sum() == 0) return std::nullopt;
    return "greedy vertex of " + p.to_string() + " sums to " + std::to_string(g.sum());
  });
}

std::vector<Coord> facet_table(int n, FacetKind kind) {
  std::vector<Coord> f(std::size_t{1} << n);
  for (std::size_t m = 0; m < f.size(); ++m) f[m] = facet_value(kind, static_cast<SubsetMask>(m), n);
  return f;
}

std::string subset_string(SubsetMask m, int n) {
  std::string out = "{";
  bool first = true;
  for (int v : from_mask(m, n)) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

Failure check_submodularity(const Context& ctx) {
  const auto f = facet_table(ctx.n, ctx.kind);
  if (f.front() != 0 || f.back() != 0) return std::string("f(empty) or f([n]) is not 0");
  return FirstFailure(ctx.parallel).scan(f.size(), [&](std::size_t x) -> Failure {
    for (std::size_t y = 0; y < f.size(); ++y) {
      if (f[x | y] + f[x & y] > f[x] + f[y]) {
        return "X=" + subset_string(x, ctx.n) + " Y=" + subset_string(y, ctx.n);
      }
    }
    return std::nullopt;
  });
}

Failure check_support_function(const Context& ctx) {
  const int n = ctx.n;
  const SubsetMask full = (SubsetMask{1} << n) - 1;
  const auto& verts = ctx.vertices;
  return FirstFailure(ctx.parallel).scan(static_cast<std::size_t>(full) - 1, [&](std::size_t k) -> Failure {
    const SubsetMask mask = static_cast<SubsetMask>(k) + 1;
    const Coord rhs = facet_value(ctx.kind, mask, n);
    std::vector<Coord> dir(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) dir[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
    Coord best = std::numeric_limits<Coord>::min();
    std::vector<const VertexPoint*> tight;
    for (const auto& v : verts) {
      const Coord value = v.dot(dir);
      if (value > best) {
        best = value;
        tight.clear();
      }
      if (value == best) tight.push_back(&v);
    }
    if (best != rhs) {
      return "X=" + subset_string(mask, n) + " max " + std::to_string(best) + " rhs " + std::to_string(rhs);
    }
    std::vector<std::vector<Coord>> diffs;
    for (std::size_t t = 1; t < tight.size(); ++t) {
      std::vector<Coord> d(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        d[static_cast<std::size_t>(i)] = tight[t]->coords[static_cast<std::size_t>(i)] - tight[0]->coords[static_cast<std::size_t>(i)];
      }
      diffs.push_back(std::move(d));
    }
    const int rank = integer_rank_lower_bound(diffs);
    if (rank != n - 2) {
      return "X=" + subset_string(mask, n) + " face has dimension " + std::to_string(rank) + ", not a facet";
    }
    return std::nullopt;
  });
}

Failure check_distinctness(const Context& ctx) {
  std::vector<std::size_t> order(ctx.vertices.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return ctx.vertices[x] < ctx.vertices[y]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (ctx.vertices[order[k]] == ctx.vertices[order[k - 1]]) {
      return "classes " + ctx.classes[order[k - 1]].id() + " and " + ctx.classes[order[k]].id() +
             " share vertex " + ctx.vertices[order[k]].to_string();
    }
  }
  return std::nullopt;
}

Failure check_oriented_skeleton(const Context& ctx, const CoverGraph& graph) {
  std::vector<Coord> w(static_cast<std::size_t>(ctx.n));
  for (int k = 1; k <= ctx.n; ++k) w[static_cast<std::size_t>(k - 1)] = ctx.n + 1 - 2 * k;
  for (auto [lo, hi] : graph.edges) {
    const auto& x = ctx.vertices[static_cast<std::size_t>(lo)];
    const auto& y = ctx.vertices[static_cast<std::size_t>(hi)];
    if (y.dot(w) - x.dot(w) <= 0) {
      return "cover " + graph.nodes[static_cast<std::size_t>(lo)].id() + " < " +
             graph.nodes[static_cast<std::size_t>(hi)].id() + " is not increasing";
    }
  }
  return std::nullopt;
}

Failure check_degree(const Context& ctx, const CoverGraph& graph) {
  const auto degrees = graph.degrees();
  return FirstFailure(ctx.parallel).scan(graph.nodes.size(), [&](std::size_t k) -> Failure {
    const auto& c = graph.nodes[k];
    const OrderRelation order =
        ctx.kind == FacetKind::weak ? weak_order_of(build_trees(c.bottom)) : strong_order_of(c);
    if (order.cover_count() == degrees[k]) return std::nullopt;
    return "class " + c.id() + " degree " + std::to_string(degrees[k]) + " poset covers " +
           std::to_string(order.cover_count());
  });
}

struct FamilyArc {
  Arc arc;
  ShardFamily family;
  ArcIdealKind ideal;  // congruence on which the extremal vertex is constant
  std::vector<std::vector<Coord>> translated;  // shard vertices plus translation
};

std::vector<FamilyArc> family_arcs(int n, FacetKind kind) {
  std::vector<FamilyArc> out;
  auto add = [&](Arc arc, ShardFamily family, ArcIdealKind ideal) {
    auto verts = shard_vertices(arc, n);
    const auto t = shard_translation(arc, family, n);
    for (auto& v : verts) {
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += t[i];
    }
    out.push_back(FamilyArc{std::move(arc), family, ideal, std::move(verts)});
  };
  for (int lo = 1; lo <= n; ++lo) {
    if (kind == FacetKind::weak) {
      for (int hi = lo + 1; hi <= n; ++hi) {
        add(up_arc(lo, hi), ShardFamily::up, ArcIdealKind::sylvester);
        add(down_arc(lo, hi), ShardFamily::down, ArcIdealKind::antisylvester);
      }
    } else {
      for (int mid = lo; mid < n; ++mid) {
        for (int hi = mid + 1; hi <= n; ++hi) {
          add(yin_arc(lo, mid, hi), ShardFamily::yin, ArcIdealKind::yin);
          add(yang_arc(lo, mid, hi), ShardFamily::yang, ArcIdealKind::yang);
        }
      }
    }
  }
  return out;
}

Failure check_minkowski_consistency(const Context& ctx) {
  const auto arcs = family_arcs(ctx.n, ctx.kind);
  return FirstFailure(ctx.parallel).scan(factorial(ctx.n), [&](std::size_t r) -> Failure {
    const auto p = unrank_permutation(ctx.n, r);
    const auto pos = p.positions();
    const std::vector<Coord> dir(pos.begin() + 1, pos.end());
    for (const auto& fa : arcs) {
      const auto shortcut = shard_extremal(fa.arc, fa.family, p);
      Coord best = std::numeric_limits<Coord>::min();
      int attained = 0;
      const std::vector<Coord>* argmax = nullptr;
      for (const auto& v : fa.translated) {
        const Coord value = VertexPoint{v}.dot(dir);
        if (value > best) {
          best = value;
          attained = 0;
          argmax = &v;
        }
        if (value == best) ++attained;
      }
      const std::string where = "arc " + fa.arc.to_string() + " p=" + p.to_string();
      if (attained != 1) return where + ": direction not generic";
      if (*argmax != shortcut) return where + ": shortcut " + vec_string(shortcut) + " brute force " + vec_string(*argmax);
      const auto rep = project(p, fa.ideal, Direction::down);
      if (shard_extremal(fa.arc, fa.family, rep) != shortcut) {
        return where + ": extremal vertex differs from class bottom " + rep.to_string();
      }
    }
    return std::nullopt;
  });
}

VerifyReport run(int n, FacetKind kind, std::span<const Check> checks, bool parallel) {
  VerifyReport report;
  report.n = n;
  report.kind = kind;
  if (n < 1 || n > 20) {
    for (Check c : checks) report.results.push_back({c, false, "n must lie in [1, 20]"});
    return report;
  }
  Context ctx{n, kind, parallel, {}, {}};
  std::string setup_error;
  try {
    ctx.classes = parallel ? enumerate_classes(n, ideal_of(kind)) : serial::enumerate_classes(n, ideal_of(kind));
    ctx.vertices = vertices_of(ctx);
  } catch (const std::exception& e) {
    setup_error = std::string("setup failed: ") + e.what();
  }
  std::optional<CoverGraph> graph;
  auto cover_graph = [&]() -> const CoverGraph& {
    if (!graph) graph = quotient_cover_graph(n, ideal_of(kind));
    return *graph;
  };
  for (Check check : checks) {
    CheckResult result{check, true, {}};
    Failure failure;
    if (!setup_error.empty()) {
      failure = setup_error;
    } else {
      try {
        switch (check) {
          case Check::three_way: failure = check_three_way(ctx); break;
          case Check::zero_sum: failure = check_zero_sum(ctx); break;
          case Check::submodularity: failure = check_submodularity(ctx); break;
          case Check::support_function: failure = check_support_function(ctx); break;
          case Check::distinctness: failure = check_distinctness(ctx); break;
          case Check::oriented_skeleton: failure = check_oriented_skeleton(ctx, cover_graph()); break;
          case Check::degree: failure = check_degree(ctx, cover_graph()); break;
          case Check::minkowski_consistency: failure = check_minkowski_consistency(ctx); break;
        }
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
    }
    if (failure) {
      result.passed = false;
      result.counterexample = *failure;
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a, m)) {
    if (e & 1) r = mul_mod(r, a, m);
  }
  return r;
}

int rank_mod(const std::vector<std::vector<Coord>>& rows, std::uint64_t prime) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<std::uint64_t>> a;
  for (const auto& row : rows) {
    std::vector<std::uint64_t> r(cols);
    for (std::size_t c = 0; c < cols; ++c) {
      const Coord v = row[c] % static_cast<Coord>(prime);
      r[c] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<Coord>(prime) : v);
    }
    a.push_back(std::move(r));
  }
  int rank = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < a.size(); ++c) {
    auto pivot = std::find_if(a.begin() + rank, a.end(), [c](const auto& r) { return r[c] != 0; });
    if (pivot == a.end()) continue;
    std::swap(*pivot, a[static_cast<std::size_t>(rank)]);
    auto& prow = a[static_cast<std::size_t>(rank)];
    const std::uint64_t inv = pow_mod(prow[c], prime - 2, prime);
    for (auto& x : prow) x = mul_mod(x, inv, prime);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || a[r][c] == 0) continue;
      const std::uint64_t factor = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) {
        a[r][k] = (a[r][k] + prime - mul_mod(factor, prow[k], prime)) % prime;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::string_view to_string(Check check) {
  for (auto [c, name] : kCheckNames) {
    if (c == check) return name;
  }
  return "?";
}

Check parse_check(std::string_view name) {
  for (auto [c, known] : kCheckNames) {
    if (known == name) return c;
  }
  throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> out;
    for (auto [c, name] : kCheckNames) out.push_back(c);
    return out;
  }();
  return checks;
}

std::vector<Check> parse_check_list(std::string_view list) {
  if (list.empty()) return all_checks();
  std::vector<Check> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    const Check c = parse_check(list.substr(start, comma - start));
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    start = comma + 1;
  }
  return out;
}

bool VerifyReport::ok() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  out << "verify n=" << n << " kind=" << to_string(kind) << "\n";
  for (const auto& r : results) {
    out << "  " << to_string(r.check) << ": " << (r.passed ? "pass" : "FAIL");
    if (!r.passed) out << " (" << r.counterexample << ")";
    out << "\n";
  }
  out << (ok() ? "all checks passed" : "verification failed") << "\n";
  return out.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::json doc;
  doc["n"] = n;
  doc["kind"] = to_string(kind);
  doc["passed"] = ok();
  doc["checks"] = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json entry{{"name", to_string(r.check)}, {"passed", r.passed}};
    if (!r.passed) entry["counterexample"] = r.counterexample;
    doc["checks"].push_back(std::move(entry));
  }
  return doc.dump(2);
}

VerifyReport verify_realization(int n, FacetKind kind, std::span<const Check> checks) {
  return run(n, kind, checks, true);
}

namespace serial {

VerifyReport verify_realization(int n, FacetKind kind, std::span<const Check> checks) {
  return run(n, kind, checks, false);
}

}  // namespace serial

int integer_rank_lower_bound(const std::vector<std::vector<Coord>>& rows) {
  constexpr std::uint64_t kPrimes[] = {2305843009213693951ULL, 4611686018427387847ULL};
  int best = 0;
  for (std::uint64_t prime : kPrimes) best = std::max(best, rank_mod(rows, prime));
  return best;
}

}  // namespace rectangulotope
