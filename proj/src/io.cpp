#include "hsk/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace hsk {

namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

const Json& require_key(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object at top level");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::string quoted(const std::string& s) { return Json(s).dump(); }

}  // namespace

Graph graph_from_json(const Json& j, std::size_t* collapsed) {
  const Json& vs = require_key(j, "vertices");
  const Json& es = require_key(j, "edges");
  if (!vs.is_array()) throw ParseError("\"vertices\" must be an array");
  if (!es.is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> index;
  for (const auto& v : vs) {
    auto name = as_string(v, "vertex identifier");
    if (!index.emplace(name, static_cast<VertexId>(names.size())).second) {
      throw ValidationError("duplicate vertex identifier \"" + name + "\"");
    }
    names.push_back(name);
  }
  EdgeList edges;
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be an array of two vertex names");
    VertexId ends[2];
    for (int k = 0; k < 2; ++k) {
      auto name = as_string(e[static_cast<std::size_t>(k)], "edge endpoint");
      auto it = index.find(name);
      if (it == index.end()) throw ValidationError("dangling endpoint \"" + name + "\"");
      ends[k] = it->second;
    }
    edges.emplace_back(ends[0], ends[1]);
  }
  Graph g = Graph::from_edges(std::move(names), edges);
  if (collapsed != nullptr) {
    std::size_t dup = 0;
    std::set<std::pair<VertexId, VertexId>> seen;
    for (auto [u, v] : edges) {
      if (!seen.insert({std::min(u, v), std::max(u, v)}).second) ++dup;
    }
    *collapsed = dup;
  }
  return g;
}

Graph parse_graph(std::string_view text, std::size_t* collapsed) {
  return graph_from_json(parse_json(text), collapsed);
}

std::string write_graph(const Graph& g) {
  std::string out = "{\n  \"vertices\": [";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v > 0) out += ", ";
    out += quoted(g.name(v));
  }
  out += "],\n  \"edges\": [";
  auto edges = g.undirected_edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out += i == 0 ? "\n    " : ",\n    ";
    out += "[" + quoted(g.name(edges[i].first)) + ", " + quoted(g.name(edges[i].second)) + "]";
  }
  out += edges.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

// ---------------------------------------------------------------------------

Cover parse_cover(std::string_view text, const Graph& base) {
  Json j = parse_json(text);
  Cover c;
  c.total = graph_from_json(j);
  c.base = base;
  const Json& proj = require_key(j, "projection");
  if (!proj.is_object()) throw ParseError("\"projection\" must be an object");
  c.projection.assign(c.total.vertex_count(), 0);
  std::vector<bool> set(c.total.vertex_count(), false);
  for (auto it = proj.begin(); it != proj.end(); ++it) {
    auto v = c.total.find(it.key());
    if (!v) throw ValidationError("projection names unknown cover vertex \"" + it.key() + "\"");
    c.projection[*v] = base.require(as_string(it.value(), "projection target"));
    set[*v] = true;
  }
  for (VertexId v = 0; v < set.size(); ++v) {
    if (!set[v]) throw ValidationError("projection misses cover vertex \"" + c.total.name(v) + "\"");
  }
  std::string kind = "exact";
  if (j.contains("provenance")) kind = as_string(j["provenance"], "provenance");
  if (kind == "exact") {
    c.provenance = Cover::Provenance::Exact;
  } else if (kind == "truncated-ball") {
    c.provenance = Cover::Provenance::TruncatedBall;
    const Json& r = require_key(j, "radius");
    if (!r.is_number_unsigned()) throw ParseError("\"radius\" must be a non-negative integer");
    c.radius = r.get<std::size_t>();
    const Json& d = require_key(j, "depth");
    if (!d.is_object()) throw ParseError("\"depth\" must be an object");
    c.depth.assign(c.total.vertex_count(), c.radius);
    for (auto it = d.begin(); it != d.end(); ++it) {
      auto v = c.total.find(it.key());
      if (!v) throw ValidationError("depth names unknown cover vertex \"" + it.key() + "\"");
      if (!it.value().is_number_unsigned()) throw ParseError("depths must be non-negative integers");
      c.depth[*v] = it.value().get<std::size_t>();
    }
  } else {
    throw ParseError("unknown provenance \"" + kind + "\"");
  }
  if (j.contains("basepoint")) c.basepoint = c.total.require(as_string(j["basepoint"], "basepoint"));
  return c;
}

std::string write_cover(const Cover& c) {
  std::string g = write_graph(c.total);
  g.erase(g.size() - 3);  // drop the closing "\n}\n"
  std::string out = g + ",\n  \"projection\": {";
  for (VertexId v = 0; v < c.total.vertex_count(); ++v) {
    out += v == 0 ? "\n    " : ",\n    ";
    out += quoted(c.total.name(v)) + ": " + quoted(c.base.name(c.projection[v]));
  }
  out += "\n  },\n";
  out += "  \"provenance\": " + quoted(c.exact() ? "exact" : "truncated-ball") + ",\n";
  if (!c.exact()) {
    out += "  \"radius\": " + std::to_string(c.radius) + ",\n  \"depth\": {";
    for (VertexId v = 0; v < c.total.vertex_count(); ++v) {
      out += v == 0 ? "\n    " : ",\n    ";
      out += quoted(c.total.name(v)) + ": " + std::to_string(c.depth[v]);
    }
    out += "\n  },\n";
  }
  out += "  \"basepoint\": " + quoted(c.total.vertex_count() == 0 ? "" : c.total.name(c.basepoint)) + "\n}\n";
  return out;
}

// ---------------------------------------------------------------------------

Pattern parse_pattern(std::string_view text, const Graph& g) {
  Json j = parse_json(text);
  Pattern p;
  const Json& w = require_key(j, "width");
  const Json& h = require_key(j, "height");
  const Json& cells = require_key(j, "cells");
  if (!w.is_number_unsigned() || !h.is_number_unsigned()) throw ParseError("width and height must be non-negative integers");
  if (!cells.is_array()) throw ParseError("\"cells\" must be an array");
  p.width = w.get<std::size_t>();
  p.height = h.get<std::size_t>();
  if (cells.size() != p.width * p.height) throw ValidationError("cell count differs from width * height");
  for (const auto& c : cells) p.cells.push_back(g.require(as_string(c, "cell")));
  return p;
}

std::string write_pattern(const Pattern& p, const Graph& g) {
  std::string out = "{\n  \"width\": " + std::to_string(p.width) + ",\n  \"height\": " + std::to_string(p.height) +
                    ",\n  \"cells\": [";
  for (std::size_t y = 0; y < p.height; ++y) {
    out += y == 0 ? "\n    " : ",\n    ";
    for (std::size_t x = 0; x < p.width; ++x) {
      if (x > 0) out += ", ";
      out += quoted(g.name(p.at(x, y)));
    }
  }
  out += p.height == 0 ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

// ---------------------------------------------------------------------------

std::string to_dot(const Graph& g, const std::vector<VertexId>* fiber) {
  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                                  "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  std::string out = "graph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out += "  " + quoted(g.name(v));
    if (fiber != nullptr) {
      out += std::string(" [style=filled, fillcolor=\"") + palette[(*fiber)[v] % 10] + "\"]";
    }
    out += ";\n";
  }
  for (auto [u, v] : g.undirected_edges()) out += "  " + quoted(g.name(u)) + " -- " + quoted(g.name(v)) + ";\n";
  out += "}\n";
  return out;
}

// ---------------------------------------------------------------------------

Json to_json(const AnalysisReport& r) {
  Json j;
  j["connected"] = r.connected;
  j["bipartite"] = r.bipartite;
  j["mixing"] = r.mixing;
  j["fundamental"] = {{"k", r.fundamental.free_rank}, {"n", r.fundamental.loops}};
  j["squares"] = r.squares;
  j["square_group"] = {{"generators", r.square_group.generators},
                       {"relators", Json::array()},
                       {"text", format_presentation(r.square_group)}};
  for (const auto& w : r.square_group.relators) j["square_group"]["relators"].push_back(format_word(r.square_group, w));
  if (auto* f = std::get_if<Finite>(&r.outcome)) {
    j["enumeration"] = {{"status", "finite"}, {"order", f->order}};
  } else {
    const auto& u = std::get<Unknown>(r.outcome);
    j["enumeration"] = {{"status", "unknown"}, {"cosets_used", u.cosets_used}, {"budget", u.budget}};
  }
  j["abelianization"] = {{"free_rank", r.abelian.free_rank},
                         {"torsion", r.abelian.torsion},
                         {"elementary_divisors", elementary_divisors(r.abelian.torsion)}};
  if (r.infinite) {
    j["infinite"] = {{"method", r.infinite->method == InfinitenessCertificate::Method::AbelianFreeRank
                                    ? "abelianization"
                                    : "free-product"},
                     {"detail", r.infinite->detail}};
  } else {
    j["infinite"] = nullptr;
  }
  j["square_cover"] = {{"vertices", r.cover_vertices ? Json(*r.cover_vertices) : Json(nullptr)},
                       {"exact", r.cover_exact},
                       {"note", r.cover_note}};
  j["predicted_gluing"] = to_string(r.predicted);
  j["warnings"] = r.warnings;
  return j;
}

Json to_json(const ProbeReport& r) {
  Json j;
  j["points"] = Json::array();
  for (const auto& p : r.points) {
    j["points"].push_back({{"n", p.n},
                           {"vertices", p.vertices},
                           {"diameter", p.diameter},
                           {"exact", p.exact},
                           {"connected", p.connected}});
  }
  j["classification"] = to_string(r.classification);
  j["fit"] = {{"linear", {{"slope", r.linear_slope}, {"intercept", r.linear_intercept}, {"residual", r.linear_residual}}},
              {"log2", {{"slope", r.log_slope}, {"intercept", r.log_intercept}, {"residual", r.log_residual}}}};
  j["truncated"] = r.truncated;
  j["n_reached"] = r.n_reached;
  j["expected"] = r.expected;
  j["notes"] = r.notes;
  return j;
}

Json to_json(const RealizationCounts& c, const Graph& g) {
  Json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = g.undirected_edge_count();
  j["components"] = {{"base", c.base},
                     {"petals", c.petals},
                     {"relation_cycles", c.relation_cycles},
                     {"fillers", c.fillers}};
  return j;
}

std::string format_probe_table(const ProbeReport& r) {
  std::ostringstream out;
  out << "   n   vertices  diameter  exact  connected\n";
  for (const auto& p : r.points) {
    char line[96];
    std::snprintf(line, sizeof line, "%4zu %10zu %9zu  %-5s  %s\n", p.n, p.vertices, p.diameter, p.exact ? "yes" : "no",
                  p.connected ? "yes" : "no");
    out << line;
  }
  char fit[160];
  std::snprintf(fit, sizeof fit, "linear fit  d = %.4f n + %.4f   residual %.4f\nlog2 fit    d = %.4f log2(n) + %.4f   residual %.4f\n",
                r.linear_slope, r.linear_intercept, r.linear_residual, r.log_slope, r.log_intercept, r.log_residual);
  out << fit;
  out << "classification: " << to_string(r.classification) << "\n";
  if (!r.expected.empty()) out << "expected: " << r.expected << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write \"" + path + "\"");
  out << content;
  if (!out) throw ValidationError("failed writing \"" + path + "\"");
}

}  // namespace hsk
