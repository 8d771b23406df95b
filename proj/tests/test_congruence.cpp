#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "rectangulotope/congruence.hpp"

#include <algorithm>

using namespace rectangulotope;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

const ArcIdealKind kAllIdeals[] = {ArcIdealKind::sylvester, ArcIdealKind::antisylvester, ArcIdealKind::weak,
                                   ArcIdealKind::yin,       ArcIdealKind::yang,          ArcIdealKind::strong,
                                   ArcIdealKind::all};

oracle::PlainArc plain(const Arc& arc) {
  return {arc.a, arc.b, {arc.above.begin(), arc.above.end()}, {arc.below.begin(), arc.below.end()}};
}

}  // namespace

TEST_CASE("ideal names round-trip") {
  for (auto ideal : kAllIdeals) CHECK(parse_ideal(to_string(ideal)) == ideal);
  CHECK_THROWS_AS(parse_ideal("baxter"), std::invalid_argument);
}

TEST_CASE("ideal membership") {
  CHECK(ideal_contains(ArcIdealKind::weak, Arc::make(1, 4, {2, 3}, {})));
  CHECK_FALSE(ideal_contains(ArcIdealKind::weak, Arc::make(1, 4, {2}, {3})));
  CHECK(ideal_contains(ArcIdealKind::strong, Arc::make(1, 4, {2}, {3})));
  CHECK_FALSE(ideal_contains(ArcIdealKind::strong, Arc::make(1, 5, {3}, {2, 4})));
  CHECK(ideal_contains(ArcIdealKind::yin, Arc::make(1, 4, {2}, {3})));
  CHECK_FALSE(ideal_contains(ArcIdealKind::yang, Arc::make(1, 4, {2}, {3})));
  for (int n = 2; n <= 6; ++n) {
    for (const auto& arc : all_arcs(n)) {
      for (auto ideal : kAllIdeals) CHECK(ideal_contains(ideal, arc) == oracle::in_ideal(ideal, plain(arc)));
    }
  }
}

TEST_CASE("ideals are closed under subarcs") {
  for (int n = 2; n <= 6; ++n) {
    const auto arcs = all_arcs(n);
    for (auto ideal : kAllIdeals) {
      for (const auto& outer : arcs) {
        if (!ideal_contains(ideal, outer)) continue;
        for (const auto& inner : arcs) {
          if (is_subarc(inner, outer)) CHECK(ideal_contains(ideal, inner));
        }
      }
    }
  }
}

TEST_CASE("projection examples") {
  CHECK(project(P("2413"), ArcIdealKind::weak, Direction::down) == P("2143"));
  CHECK(project(P("2143"), ArcIdealKind::weak, Direction::up) == P("2413"));
  CHECK(project(P("24513"), ArcIdealKind::strong, Direction::down) == P("24153"));
  for (const auto& p : all_permutations(4)) {
    CHECK(project(p, ArcIdealKind::strong, Direction::down) == p);
    CHECK(project(p, ArcIdealKind::strong, Direction::up) == p);
    CHECK(project(p, ArcIdealKind::all, Direction::down) == p);
  }
}

TEST_CASE("rewriting is confluent") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : all_permutations(n)) {
      for (auto ideal : kAllIdeals) {
        for (auto dir : {Direction::down, Direction::up}) {
          CHECK(project(p, ideal, dir, RewriteStrategy::leftmost) == project(p, ideal, dir, RewriteStrategy::rightmost));
        }
      }
    }
  }
}

TEST_CASE("class examples") {
  CHECK(class_members(P("1234"), ArcIdealKind::weak) == std::vector<Permutation>{P("1234")});
  CHECK(class_members(P("2413"), ArcIdealKind::weak) == std::vector<Permutation>{P("2143"), P("2413")});
  CHECK(class_members(P("24513"), ArcIdealKind::strong) == std::vector<Permutation>{P("24153"), P("24513")});
  const auto c = congruence_class(P("2413"), ArcIdealKind::weak);
  CHECK(c.bottom == P("2143"));
  CHECK(c.top == P("2413"));
  CHECK(c.id() == "2143");
  CHECK(c.contains(P("2143")));
  CHECK_FALSE(c.contains(P("1243")));
}

TEST_CASE("classes match the union-find partition and are weak-order intervals") {
  for (int n = 1; n <= 6; ++n) {
    for (auto ideal : kAllIdeals) {
      const auto blocks = oracle::class_partition(n, ideal);
      const auto classes = enumerate_classes(n, ideal);
      REQUIRE(classes.size() == blocks.size());
      for (std::size_t k = 0; k < blocks.size(); ++k) {
        const auto& c = classes[k];
        CHECK(c.bottom == blocks[k].front());
        CHECK(weak_leq(c.bottom, c.top));
        CHECK(class_members(c.bottom, ideal) == blocks[k]);
        std::size_t interval = 0;
        for (const auto& p : all_permutations(n)) interval += c.contains(p);
        CHECK(interval == blocks[k].size());
        for (const auto& arc : arc_diagram(c.bottom)) CHECK(ideal_contains(ideal, arc));
        for (const auto& member : blocks[k]) {
          CHECK(project(member, ideal, Direction::down) == c.bottom);
          CHECK(project(member, ideal, Direction::up) == c.top);
          CHECK(is_class_bottom(member, ideal) == (member == c.bottom));
        }
      }
    }
  }
}

TEST_CASE("weak and strong classes as intersections") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : all_permutations(n)) {
      auto meet = [&p](ArcIdealKind x, ArcIdealKind y) {
        const auto a = class_members(p, x);
        const auto b = class_members(p, y);
        std::vector<Permutation> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
      };
      const auto weak = class_members(p, ArcIdealKind::weak);
      const auto strong = class_members(p, ArcIdealKind::strong);
      CHECK(weak == meet(ArcIdealKind::sylvester, ArcIdealKind::antisylvester));
      CHECK(strong == meet(ArcIdealKind::yin, ArcIdealKind::yang));
      CHECK(std::includes(weak.begin(), weak.end(), strong.begin(), strong.end()));
    }
  }
}

TEST_CASE("class counts") {
  const std::size_t weak[] = {1, 2, 6, 22, 92, 422, 2074};
  const std::size_t catalan[] = {1, 2, 5, 14, 42, 132, 429};
  for (int n = 1; n <= 7; ++n) {
    CHECK(count_classes(n, ArcIdealKind::weak) == weak[n - 1]);
    CHECK(count_classes(n, ArcIdealKind::sylvester) == catalan[n - 1]);
    CHECK(count_classes(n, ArcIdealKind::all) == factorial(n));
  }
  CHECK(count_classes(4, ArcIdealKind::strong) == 24);
  std::size_t clumped = 0;
  for (const auto& p : all_permutations(5)) clumped += is_2clumped(p);
  CHECK(count_classes(5, ArcIdealKind::strong) == clumped);
}

TEST_CASE("parallel enumeration equals the serial reference") {
  for (int n = 1; n <= 7; ++n) {
    for (auto ideal : {ArcIdealKind::weak, ArcIdealKind::strong, ArcIdealKind::yin}) {
      const auto par = enumerate_classes(n, ideal);
      CHECK(par == serial::enumerate_classes(n, ideal));
      CHECK(par.size() == count_classes(n, ideal));
    }
  }
}

TEST_CASE("bottoms and tops have the pattern characterizations") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& c : enumerate_classes(n, ArcIdealKind::weak)) {
      CHECK(is_twisted_baxter(c.bottom));
      CHECK(is_co_twisted_baxter(c.top));
    }
    for (const auto& c : enumerate_classes(n, ArcIdealKind::strong)) {
      CHECK(is_2clumped(c.bottom));
      CHECK(is_co_2clumped(c.top));
    }
  }
}

TEST_CASE("cover graph examples") {
  const auto g2 = quotient_cover_graph(2, ArcIdealKind::weak);
  CHECK(g2.nodes.size() == 2);
  CHECK(g2.edges == std::vector<std::pair<int, int>>{{0, 1}});
  const auto g4 = quotient_cover_graph(4, ArcIdealKind::weak);
  const auto id = g4.index_of(P("1234"));
  REQUIRE(id.has_value());
  CHECK(g4.degrees()[static_cast<std::size_t>(*id)] == 3);
  CHECK_FALSE(g4.index_of(P("2413")).has_value());
}

TEST_CASE("strong quotient at n = 4 is the weak order on S_4") {
  const auto g = quotient_cover_graph(4, ArcIdealKind::strong);
  REQUIRE(g.nodes.size() == 24);
  std::set<std::pair<Permutation, Permutation>> edges, covers;
  for (auto [lo, hi] : g.edges) {
    edges.emplace(g.nodes[static_cast<std::size_t>(lo)].bottom, g.nodes[static_cast<std::size_t>(hi)].bottom);
  }
  for (const auto& p : all_permutations(4)) {
    for (int j = 1; j < 4; ++j) {
      if (!p.is_descent(j)) covers.emplace(p, p.swapped(j));
    }
  }
  CHECK(edges == covers);
}

TEST_CASE("cover graphs match the brute-force quotient order") {
  for (int n = 1; n <= 5; ++n) {
    for (auto ideal : kAllIdeals) {
      const auto g = quotient_cover_graph(n, ideal);
      std::set<std::pair<Permutation, Permutation>> got;
      for (auto [lo, hi] : g.edges) {
        CHECK(lo != hi);
        got.emplace(g.nodes[static_cast<std::size_t>(lo)].bottom, g.nodes[static_cast<std::size_t>(hi)].bottom);
      }
      CHECK(got.size() == g.edges.size());
      CHECK(got == oracle::quotient_covers(n, ideal));
    }
  }
}

TEST_CASE("serializers") {
  const auto g = quotient_cover_graph(3, ArcIdealKind::weak);
  const auto doc = nlohmann::json::parse(cover_graph_to_json(g));
  CHECK(doc["n"] == 3);
  CHECK(doc["ideal"] == "weak");
  CHECK(doc["nodes"].size() == 6);
  CHECK(doc["edges"].size() == g.edges.size());
  CHECK(doc["nodes"][0]["bottom"] == "123");
  const auto dot = cover_graph_to_dot(g);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("\"213\"") != std::string::npos);
  const auto cls = nlohmann::json::parse(class_to_json(congruence_class(P("2413"), ArcIdealKind::weak)));
  CHECK(cls == nlohmann::json{{"bottom", "2143"}, {"top", "2413"}, {"ideal", "weak"}});
}
