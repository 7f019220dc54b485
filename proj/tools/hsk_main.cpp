// hsk: command-line front end.
//
// Exit codes: 0 success, 1 lift obstruction, 2 usage/parse/validation error,
// 3 budget exhausted (a partial result is still written).

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <map>
#include <string>
#include <tuple>

#include "hsk/analysis.hpp"
#include "hsk/io.hpp"
#include "hsk/pattern.hpp"
#include "hsk/probe.hpp"
#include "hsk/realization.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kObstructed = 1;
constexpr int kInvalid = 2;
constexpr int kBudget = 3;

struct Budgets {
  std::size_t max_cosets = hsk::kDefaultMaxCosets;
  std::size_t radius = 4;
  std::size_t n_max = 10;
  std::size_t walk_cap = hsk::kDefaultWalkCap;
  std::size_t rewrite_depth = 64;
  std::string tree_root;
  std::string out;
};

hsk::Graph load_graph(const std::string& path) {
  std::size_t collapsed = 0;
  hsk::Graph g = hsk::parse_graph(hsk::read_file(path), &collapsed);
  if (collapsed > 0) std::cerr << "note: " << collapsed << " parallel edge(s) collapsed\n";
  return g;
}

hsk::VertexId root_of(const hsk::Graph& g, const Budgets& b) {
  return b.tree_root.empty() ? 0 : g.require(b.tree_root);
}

std::string sidecar_path(const std::string& out) {
  std::string stem = out;
  if (stem.size() >= 5 && stem.compare(stem.size() - 5, 5, ".json") == 0) stem.erase(stem.size() - 5);
  return stem + ".report.json";
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    hsk::write_file(path, content);
  }
}

int cmd_analyze(const std::string& graph_path, const Budgets& b) {
  hsk::Graph g = load_graph(graph_path);
  hsk::AnalysisOptions opt;
  opt.tree_root = root_of(g, b);
  opt.max_cosets = b.max_cosets;
  opt.radius = b.radius;
  opt.rewrite_depth = b.rewrite_depth;
  hsk::AnalysisReport r = hsk::analyze(g, opt);
  std::cout << hsk::format_report(r);
  if (!b.out.empty()) hsk::write_file(b.out, hsk::to_json(r).dump(2) + "\n");
  return kOk;
}

int cmd_realize(const std::string& pres_path, const std::string& petal, const std::string& nu, const Budgets& b) {
  if (b.out.empty()) throw hsk::ValidationError("realize needs -o <graph.json>");
  hsk::Presentation p = hsk::parse_presentation(hsk::read_file(pres_path));
  hsk::Presentation reduced = hsk::reduce_presentation_input(p);
  hsk::RealizationConfig cfg;
  if (!petal.empty()) {
    try {
      cfg.petal = std::stoul(petal);
    } catch (const std::exception&) {
      throw hsk::ValidationError("--petal expects an even integer >= 6");
    }
  }
  if (nu == "alternating") {
    cfg.nu = hsk::RealizationConfig::Rungs::Alternating;
  } else if (nu != "zero") {
    throw hsk::ValidationError("--nu expects zero or alternating");
  }
  hsk::Realization r = hsk::realize_detailed(reduced, cfg);
  hsk::write_file(b.out, hsk::write_graph(r.graph));

  hsk::Json side = hsk::to_json(r.counts, r.graph);
  side["petal"] = cfg.petal;
  side["nu"] = nu;
  side["presentation"] = hsk::format_presentation(reduced);
  side["input_reduced"] = !(reduced == p);
  hsk::write_file(sidecar_path(b.out), side.dump(2) + "\n");
  std::cout << "vertices " << r.graph.vertex_count() << " (base " << r.counts.base << ", petals " << r.counts.petals
            << ", relation cycles " << r.counts.relation_cycles << ", fillers " << r.counts.fillers << ")\n"
            << "edges    " << r.graph.undirected_edge_count() << "\n";
  return kOk;
}

int cmd_probe(const std::string& graph_path, const Budgets& b) {
  hsk::Graph g = load_graph(graph_path);
  hsk::ProbeOptions opt;
  opt.n_max = b.n_max;
  opt.walk_cap = b.walk_cap;
  opt.max_cosets = b.max_cosets;
  hsk::ProbeReport r = hsk::gluing_rate_probe(g, opt);
  std::cout << hsk::format_probe_table(r);
  if (!b.out.empty()) hsk::write_file(b.out, hsk::to_json(r).dump(2) + "\n");
  return r.truncated ? kBudget : kOk;
}

int cmd_cover(const std::string& graph_path, bool universal, const Budgets& b) {
  hsk::Graph g = load_graph(graph_path);
  const hsk::VertexId root = root_of(g, b);
  hsk::Cover c;
  if (universal) {
    c = hsk::universal_cover_ball(g, root, b.radius);
  } else {
    hsk::SquareCoverOptions opt;
    opt.tree_root = root;
    opt.max_cosets = b.max_cosets;
    opt.fallback_radius = b.radius;
    opt.rewrite_depth = b.rewrite_depth;
    c = hsk::square_cover(g, opt);
  }
  emit(b.out, hsk::write_cover(c));
  std::cerr << c.total.vertex_count() << " cover vertices, "
            << (c.exact() ? std::string("exact") : "truncated at radius " + std::to_string(c.radius)) << "\n";
  return (!universal && !c.exact()) ? kBudget : kOk;
}

int cmd_lift(const std::string& graph_path, const std::string& pattern_path, const std::string& cover_path,
             const std::string& corner, const Budgets& b) {
  hsk::Graph g = load_graph(graph_path);
  hsk::Pattern p = hsk::parse_pattern(hsk::read_file(pattern_path), g);
  hsk::Cover c;
  if (cover_path.empty()) {
    hsk::SquareCoverOptions opt;
    opt.tree_root = root_of(g, b);
    opt.max_cosets = b.max_cosets;
    opt.fallback_radius = b.radius;
    opt.rewrite_depth = b.rewrite_depth;
    c = hsk::square_cover(g, opt);
  } else {
    c = hsk::parse_cover(hsk::read_file(cover_path), g);
  }
  if (p.cells.empty()) throw hsk::ValidationError("empty pattern");

  hsk::VertexId start = 0;
  if (!corner.empty()) {
    start = c.total.require(corner);
  } else {
    auto fiber = c.fiber(p.at(0, 0));
    if (fiber.empty()) throw hsk::ValidationError("no cover vertex over the corner cell");
    start = *std::min_element(fiber.begin(), fiber.end(), [&](hsk::VertexId x, hsk::VertexId y) {
      std::size_t dx = c.exact() ? 0 : c.depth[x], dy = c.exact() ? 0 : c.depth[y];
      return std::tie(dx, x) < std::tie(dy, y);
    });
  }
  hsk::LiftResult res = hsk::lift_pattern(c, p, start);
  if (auto* lifted = std::get_if<hsk::Pattern>(&res)) {
    emit(b.out, hsk::write_pattern(*lifted, c.total));
    return kOk;
  }
  const auto& o = std::get<hsk::Obstruction>(res);
  std::cerr << "obstruction at plaquette (" << o.plaquette.x << "," << o.plaquette.y << "): cell (" << o.cell.x << ","
            << o.cell.y << ") lifts to " << c.total.name(o.by_column) << " from above and to "
            << c.total.name(o.by_row) << " from the left\n";
  hsk::Json j;
  j["obstruction"] = {{"plaquette", {o.plaquette.x, o.plaquette.y}},
                      {"cell", {o.cell.x, o.cell.y}},
                      {"by_column", c.total.name(o.by_column)},
                      {"by_row", c.total.name(o.by_row)}};
  emit(b.out, j.dump(2) + "\n");
  return kObstructed;
}

int cmd_export_dot(const std::string& graph_path, const Budgets& b) {
  const std::string text = hsk::read_file(graph_path);
  hsk::Json j;
  try {
    j = hsk::Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw hsk::ParseError("syntax error at byte " + std::to_string(e.byte));
  }
  hsk::Graph g = hsk::graph_from_json(j);
  if (!j.contains("projection")) {
    emit(b.out, hsk::to_dot(g));
    return kOk;
  }
  // Color by base vertex; base names are numbered in sorted order.
  const auto& proj = j["projection"];
  std::map<std::string, hsk::VertexId> base;
  for (auto it = proj.begin(); it != proj.end(); ++it) base.emplace(it.value().get<std::string>(), 0);
  hsk::VertexId next = 0;
  for (auto& [name, id] : base) id = next++;
  std::vector<hsk::VertexId> fiber(g.vertex_count(), 0);
  for (auto it = proj.begin(); it != proj.end(); ++it) fiber[g.require(it.key())] = base[it.value().get<std::string>()];
  emit(b.out, hsk::to_dot(g, &fiber));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hsk: square groups, covers and gluing probes for homshifts"};
  app.require_subcommand(1);
  Budgets b;
  auto add_budgets = [&](CLI::App* sub, bool cosets, bool radius, bool rewrite, bool root) {
    if (cosets) sub->add_option("--max-cosets", b.max_cosets, "coset enumeration budget")->capture_default_str();
    if (radius) sub->add_option("--radius", b.radius, "truncated cover radius")->capture_default_str();
    if (rewrite) sub->add_option("--rewrite-depth", b.rewrite_depth, "square rewriting moves")->capture_default_str();
    if (root) sub->add_option("--tree-root", b.tree_root, "spanning tree root vertex (default: first vertex)");
  };

  std::string graph_path, pres_path, pattern_path, cover_path, corner, petal, nu = "zero";
  bool universal = false, square = false;

  auto* analyze = app.add_subcommand("analyze", "square group, cover and gluing prediction");
  analyze->add_option("graph", graph_path, "graph file")->required();
  add_budgets(analyze, true, true, true, true);
  analyze->add_option("-o", b.out, "machine-readable report");

  auto* realize = app.add_subcommand("realize", "graph whose square group is the given presentation");
  realize->add_option("presentation", pres_path, "presentation file")->required();
  realize->add_option("--petal", petal, "petal cycle length N (even, >= 6)");
  realize->add_option("--nu", nu, "rung offsets: zero or alternating")->capture_default_str();
  realize->add_option("-o", b.out, "output graph file")->required();

  auto* probe = app.add_subcommand("probe", "strip graph diameters and gluing classification");
  probe->add_option("graph", graph_path, "graph file")->required();
  probe->add_option("--n-max", b.n_max, "largest strip length")->capture_default_str();
  probe->add_option("--walk-cap", b.walk_cap, "largest strip vertex count")->capture_default_str();
  add_budgets(probe, true, false, false, false);
  probe->add_option("-o", b.out, "machine-readable report");

  auto* cover = app.add_subcommand("cover", "square cover or universal cover ball");
  cover->add_option("graph", graph_path, "graph file")->required();
  cover->add_flag("--square", square, "square cover (default)");
  cover->add_flag("--universal", universal, "ball of the universal cover");
  add_budgets(cover, true, true, true, true);
  cover->add_option("-o", b.out, "output cover file (default: stdout)");

  auto* lift = app.add_subcommand("lift", "lift a pattern to a cover");
  lift->add_option("graph", graph_path, "graph file")->required();
  lift->add_option("pattern", pattern_path, "pattern file")->required();
  lift->add_option("--cover", cover_path, "cover file (default: square cover of the graph)");
  lift->add_option("--corner", corner, "cover vertex for cell (0,0)");
  add_budgets(lift, true, true, true, true);
  lift->add_option("-o", b.out, "lifted pattern file (default: stdout)");

  auto* dot = app.add_subcommand("export-dot", "Graphviz export; covers are colored by fiber");
  dot->add_option("graph", graph_path, "graph or cover file")->required();
  dot->add_option("-o", b.out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }
  if (square && universal) {
    std::cerr << "error: --square and --universal are exclusive\n";
    return kInvalid;
  }

  try {
    if (*analyze) return cmd_analyze(graph_path, b);
    if (*realize) return cmd_realize(pres_path, petal, nu, b);
    if (*probe) return cmd_probe(graph_path, b);
    if (*cover) return cmd_cover(graph_path, universal, b);
    if (*lift) return cmd_lift(graph_path, pattern_path, cover_path, corner, b);
    if (*dot) return cmd_export_dot(graph_path, b);
  } catch (const hsk::BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const hsk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
