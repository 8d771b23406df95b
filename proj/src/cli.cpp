#include "rectangulotope/cli.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "rectangulotope/congruence.hpp"
#include "rectangulotope/diagonal_drawing.hpp"
#include "rectangulotope/polytope.hpp"
#include "rectangulotope/verify.hpp"

namespace rectangulotope {

namespace {

const std::vector<std::string> kCongruences{"weak", "strong", "sylvester", "antisylvester", "yin", "yang"};
const std::vector<std::string> kKinds{"weak", "strong"};

struct Options {
  int n = 4;
  int upto = 6;
  std::string cong = "weak";
  std::string perm;
  std::string graph_format = "dot";
  std::string draw_format = "ascii";
  std::string dir = "down";
  std::string checks;
  bool json = false;
  bool with_vertices = false;
  bool serial_mode = false;
};

// Vertex attached to a class in listings, when the congruence has one.
std::optional<VertexPoint> listing_vertex(const CongruenceClass& c) {
  switch (c.ideal) {
    case ArcIdealKind::weak: return weak_vertex(c);
    case ArcIdealKind::strong: return strong_vertex(c);
    case ArcIdealKind::sylvester: return assoc_vertex(build_trees(c.bottom).target);
    default: return std::nullopt;
  }
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto ideal = parse_ideal(o.cong);
  const auto classes = enumerate_classes(o.n, ideal);
  if (o.json) {
    nlohmann::json doc{{"n", o.n}, {"cong", o.cong}, {"classes", nlohmann::json::array()}};
    for (const auto& c : classes) {
      nlohmann::json entry{{"bottom", c.bottom.to_string()}, {"top", c.top.to_string()}};
      if (auto v = listing_vertex(c)) entry["vertex"] = v->coords;
      doc["classes"].push_back(std::move(entry));
    }
    out << doc.dump(2) << "\n";
    return 0;
  }
  for (const auto& c : classes) {
    out << c.bottom.to_string() << " " << c.top.to_string();
    if (auto v = listing_vertex(c)) out << " " << v->to_string();
    out << "\n";
  }
  out << classes.size() << " classes\n";
  return 0;
}

int cmd_vertex(const Options& o, std::ostream& out) {
  const auto p = parse_permutation(o.perm);
  const auto kind = parse_facet_kind(o.cong);
  const auto c = congruence_class(p, ideal_of(kind));
  const auto v = kind == FacetKind::weak ? weak_vertex(c) : strong_vertex(c);
  if (o.json) {
    out << vertex_to_json(c, v) << "\n";
  } else {
    out << "class " << c.id() << " vertex " << v.to_string() << "\n";
  }
  return 0;
}

int cmd_facets(const Options& o, std::ostream& out) {
  const auto kind = parse_facet_kind(o.cong);
  const auto list = facets(kind, o.n);
  if (o.json && o.with_vertices) {
    const auto classes = enumerate_classes(o.n, ideal_of(kind));
    const auto verts = class_vertices(kind, classes);
    out << polytope_to_json(kind, o.n, classes, verts, list) << "\n";
    return 0;
  }
  if (o.json) {
    auto doc = nlohmann::json::array();
    for (const auto& f : list) doc.push_back({{"X", f.subset}, {"rhs", f.rhs}});
    out << doc.dump(2) << "\n";
    return 0;
  }
  for (const auto& f : list) {
    out << "X={";
    for (std::size_t k = 0; k < f.subset.size(); ++k) out << (k ? "," : "") << f.subset[k];
    out << "} rhs " << f.rhs << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto kind = parse_facet_kind(o.cong);
  const auto checks = parse_check_list(o.checks);
  const auto report = o.serial_mode ? serial::verify_realization(o.n, kind, checks)
                                    : verify_realization(o.n, kind, checks);
  out << (o.json ? report.to_json() + "\n" : report.to_text());
  return report.ok() ? 0 : 1;
}

int cmd_flipgraph(const Options& o, std::ostream& out) {
  const auto graph = quotient_cover_graph(o.n, parse_ideal(o.cong));
  out << (o.graph_format == "json" ? cover_graph_to_json(graph) : cover_graph_to_dot(graph)) << "\n";
  return 0;
}

int cmd_draw(const Options& o, std::ostream& out) {
  const auto p = parse_permutation(o.perm);
  const auto d = diagonal_drawing(congruence_class(p, ArcIdealKind::weak));
  out << render(d, parse_render_format(o.draw_format));
  return 0;
}

int cmd_count(const Options& o, std::ostream& out) {
  const auto ideal = parse_ideal(o.cong);
  for (int n = 1; n <= o.upto; ++n) out << n << " " << count_classes(n, ideal) << "\n";
  return 0;
}

int cmd_project(const Options& o, std::ostream& out) {
  const auto p = parse_permutation(o.perm);
  const auto dir = o.dir == "up" ? Direction::up : Direction::down;
  out << project(p, parse_ideal(o.cong), dir).to_string() << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak and strong rectangulotopes: classes, vertices, facets, drawings"};
  app.name("rectangulotope");
  app.require_subcommand(1, 1);
  Options o;

  auto add_n = [&o](CLI::App* sub, int max_n) {
    sub->add_option("--n", o.n, "permutation size")->required()->check(CLI::Range(1, max_n));
  };
  auto add_cong = [&o](CLI::App* sub, const std::vector<std::string>& allowed) {
    sub->add_option("--cong", o.cong, "congruence")->required()->check(CLI::IsMember(allowed));
  };
  auto add_perm = [&o](CLI::App* sub) {
    sub->add_option("--perm", o.perm, "permutation, as 2413 or 2,4,1,3")->required();
  };

  auto* enumerate = app.add_subcommand("enumerate", "list all classes with bottom, top and vertex");
  add_n(enumerate, 10);
  add_cong(enumerate, kCongruences);
  enumerate->add_flag("--json", o.json, "emit JSON");

  auto* vertex = app.add_subcommand("vertex", "class and vertex of a permutation");
  add_cong(vertex, kKinds);
  add_perm(vertex);
  vertex->add_flag("--json", o.json, "emit JSON");

  auto* facet_cmd = app.add_subcommand("facets", "all 2^n - 2 facet inequalities");
  add_n(facet_cmd, 20);
  add_cong(facet_cmd, kKinds);
  facet_cmd->add_flag("--json", o.json, "emit JSON");
  facet_cmd->add_flag("--vertices", o.with_vertices, "with --json, export vertices and facets together");

  auto* verify = app.add_subcommand("verify", "run the realization checks");
  add_n(verify, 9);
  add_cong(verify, kKinds);
  verify->add_option("--checks", o.checks, "comma-separated subset of checks");
  verify->add_flag("--json", o.json, "emit JSON");
  verify->add_flag("--serial", o.serial_mode, "use the single-threaded reference");

  auto* flipgraph = app.add_subcommand("flipgraph", "cover graph of the lattice quotient");
  add_n(flipgraph, 10);
  add_cong(flipgraph, kCongruences);
  flipgraph->add_option("--format", o.graph_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* draw = app.add_subcommand("draw", "diagonal drawing of the weak class of a permutation");
  add_perm(draw);
  draw->add_option("--format", o.draw_format, "ascii, svg or json")->check(CLI::IsMember({"ascii", "svg", "json"}));

  auto* count = app.add_subcommand("count", "number of classes for n = 1..upto");
  add_cong(count, kCongruences);
  count->add_option("--upto", o.upto, "largest size")->required()->check(CLI::Range(1, 11));

  auto* project_cmd = app.add_subcommand("project", "class bottom (down) or top (up) of a permutation");
  add_perm(project_cmd);
  add_cong(project_cmd, kCongruences);
  project_cmd->add_option("--dir", o.dir, "down or up")->check(CLI::IsMember({"down", "up"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (vertex->parsed()) return cmd_vertex(o, out);
    if (facet_cmd->parsed()) return cmd_facets(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (flipgraph->parsed()) return cmd_flipgraph(o, out);
    if (draw->parsed()) return cmd_draw(o, out);
    if (count->parsed()) return cmd_count(o, out);
    if (project_cmd->parsed()) return cmd_project(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace rectangulotope
