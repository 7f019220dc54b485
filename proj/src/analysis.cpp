#include "hsk/analysis.hpp"

#include <sstream>

namespace hsk {

AnalysisReport analyze(const Graph& g, const AnalysisOptions& opt) {
  AnalysisReport r;
  r.connected = is_connected(g);
  if (!r.connected) throw ValidationError("graph is not connected");
  if (opt.tree_root >= g.vertex_count()) throw ValidationError("tree root outside the graph");
  r.bipartite = is_bipartite(g).bipartite;
  r.mixing = r.connected && !r.bipartite;
  r.fundamental = classify_fundamental(g);
  r.squares = enumerate_squares(g).size();

  SquareGroup sg = compute_square_group(g, opt.tree_root, opt.max_cosets);
  r.square_group = sg.simplified.presentation;
  r.outcome = sg.outcome;
  r.abelian = abelianization(r.square_group);
  if (is_finite(r.outcome)) {
    r.predicted = GluingClass::Logarithmic;
  } else {
    r.infinite = certify_infinite(r.square_group);
    r.predicted = r.infinite ? GluingClass::Linear : GluingClass::Inconclusive;
  }
  if (r.bipartite) r.warnings.push_back("bipartite graph: gluing holds only in phase (phased)");

  if (opt.build_cover) {
    SquareCoverOptions co;
    co.tree_root = opt.tree_root;
    co.max_cosets = opt.max_cosets;
    co.fallback_radius = opt.radius;
    co.rewrite_depth = opt.rewrite_depth;
    try {
      Cover c = square_cover(g, sg, co);
      r.cover_vertices = c.total.vertex_count();
      r.cover_exact = c.exact();
      r.cover_note = c.exact() ? "exact square cover"
                               : "square cover truncated to radius " + std::to_string(opt.radius);
    } catch (const BudgetExceeded& e) {
      r.cover_note = std::string("square cover not built: ") + e.what();
    }
  }
  return r;
}

std::string format_report(const AnalysisReport& r) {
  std::ostringstream out;
  auto row = [&](const std::string& k, const std::string& v) {
    out << k << std::string(k.size() < 22 ? 22 - k.size() : 1, ' ') << v << "\n";
  };
  row("connected", r.connected ? "yes" : "no");
  row("bipartite", r.bipartite ? "yes" : "no");
  row("mixing", r.mixing ? "yes" : "no");
  row("fundamental group", "F_" + std::to_string(r.fundamental.free_rank) + " * (Z/2)^" +
                               std::to_string(r.fundamental.loops) + "  (k=" + std::to_string(r.fundamental.free_rank) +
                               ", n=" + std::to_string(r.fundamental.loops) + ")");
  row("squares", std::to_string(r.squares));
  row("square group", std::to_string(r.square_group.generator_count()) + " generators, " +
                          std::to_string(r.square_group.relators.size()) + " relators");
  if (auto* f = std::get_if<Finite>(&r.outcome)) {
    row("enumeration", "finite, order " + std::to_string(f->order));
  } else {
    const auto& u = std::get<Unknown>(r.outcome);
    row("enumeration", "unknown (" + std::to_string(u.cosets_used) + " cosets of budget " + std::to_string(u.budget) + ")");
  }
  row("abelianization", format_invariants(r.abelian));
  if (r.infinite) row("infinite", r.infinite->detail);
  if (r.cover_vertices) {
    row("square cover", std::to_string(*r.cover_vertices) + " vertices (" + r.cover_note + ")");
  } else if (!r.cover_note.empty()) {
    row("square cover", r.cover_note);
  }
  row("predicted gluing", to_string(r.predicted));
  for (const auto& w : r.warnings) row("warning", w);
  out << "\n" << format_presentation(r.square_group);
  return out.str();
}

}  // namespace hsk
