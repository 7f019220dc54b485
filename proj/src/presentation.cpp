#include "hsk/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace hsk {

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word canonical_relator(const Word& w) {
  Word c = cyclic_reduce(w);
  if (c.empty()) return c;
  Word best = c;
  for (const Word& base : {c, inverse_word(c)}) {
    Word rot = base;
    for (std::size_t i = 0; i < base.size(); ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
  }
  return best;
}

std::size_t Presentation::total_length() const {
  std::size_t n = 0;
  for (const auto& r : relators) n += r.size();
  return n;
}

void Presentation::validate() const {
  std::unordered_set<std::string> seen;
  for (const auto& g : generators) {
    if (!seen.insert(g).second) throw ValidationError("duplicate generator \"" + g + "\"");
  }
  for (const auto& r : relators) {
    for (Letter l : r) {
      if (l == 0 || generator_of(l) >= generators.size()) {
        throw ValidationError("relator letter references an undeclared generator");
      }
    }
  }
}

// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::unordered_map<std::string, std::size_t> index;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty()) continue;
    auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(where() + "expected 'generators:' or 'relator:'");
    auto key = trim(line.substr(0, colon));
    auto rest = line.substr(colon + 1);
    if (key == "generators") {
      if (have_header) throw ParseError(where() + "second generators line");
      have_header = true;
      for (auto& name : split_ws(rest)) {
        if (name.find('^') != std::string::npos) throw ParseError(where() + "generator names may not contain '^'");
        if (!index.emplace(name, p.generators.size()).second) {
          throw ParseError(where() + "duplicate generator \"" + name + "\"");
        }
        p.generators.push_back(name);
      }
    } else if (key == "relator") {
      if (!have_header) throw ParseError(where() + "relator before generators line");
      Word w;
      for (auto& tok : split_ws(rest)) {
        bool inv = false;
        std::string name = tok;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
          if (tok.substr(caret) != "^-1") throw ParseError(where() + "bad token \"" + tok + "\" (only ^-1 is allowed)");
          inv = true;
          name = tok.substr(0, caret);
        }
        auto it = index.find(name);
        if (it == index.end()) throw ParseError(where() + "unknown generator \"" + name + "\"");
        w.push_back(letter(it->second, inv));
      }
      p.relators.push_back(std::move(w));
    } else {
      throw ParseError(where() + "unknown key \"" + std::string(key) + "\"");
    }
  }
  if (!have_header) throw ParseError("missing 'generators:' line");
  return p;
}

std::string format_word(const Presentation& p, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += p.generators.at(generator_of(w[i]));
    if (w[i] < 0) out += "^-1";
  }
  return out;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "generators:";
  for (const auto& g : p.generators) out += " " + g;
  out += '\n';
  for (const auto& r : p.relators) {
    out += "relator:";
    if (!r.empty()) out += " " + format_word(p, r);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::string> edge_generator_names(const Graph& g) {
  std::vector<std::string> names;
  names.reserve(g.directed_edge_count());
  bool plain = true;
  for (const auto& n : g.names()) {
    if (n.empty() || n.find_first_of(" \t\r\n^>") != std::string::npos) plain = false;
  }
  for (std::size_t i = 0; i < g.directed_edge_count(); ++i) {
    auto [u, v] = g.edge_at(i);
    names.push_back(plain ? g.name(u) + ">" + g.name(v) : "e" + std::to_string(i));
  }
  return names;
}

Word edge_word(const Graph& g, const std::vector<VertexId>& vertices) {
  Word w;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    auto e = g.edge_index(vertices[i], vertices[i + 1]);
    if (!e) throw ValidationError("edge word over a non-edge");
    w.push_back(letter(*e));
  }
  return w;
}

namespace {

void add_tree_and_pair_relators(const Graph& g, const SpanningTree& t, Presentation& p) {
  for (auto [u, v] : t.edges()) {
    p.relators.push_back({letter(*g.edge_index(u, v))});
    p.relators.push_back({letter(*g.edge_index(v, u))});
  }
  for (auto [u, v] : g.undirected_edges()) {
    p.relators.push_back({letter(*g.edge_index(u, v)), letter(*g.edge_index(v, u))});
  }
}

void check_tree(const Graph& g, const SpanningTree& t) {
  if (t.vertex_count() != g.vertex_count()) throw ValidationError("tree does not span the graph");
  for (auto [u, v] : t.edges()) {
    if (!g.has_edge(u, v)) throw ValidationError("tree edge missing from the graph");
  }
}

}  // namespace

Presentation fundamental_presentation(const Graph& g, const SpanningTree& t) {
  check_tree(g, t);
  Presentation p;
  p.generators = edge_generator_names(g);
  add_tree_and_pair_relators(g, t, p);
  return p;
}

Presentation square_presentation(const Graph& g, const SpanningTree& t) {
  Presentation p = fundamental_presentation(g, t);
  for (const auto& s : enumerate_squares(g)) {
    p.relators.push_back(edge_word(g, {s[0], s[1], s[2], s[3], s[0]}));
  }
  return p;
}

// ---------------------------------------------------------------------------

Presentation free_product(const Presentation& p, const Presentation& q) {
  p.validate();
  q.validate();
  Presentation out = p;
  std::unordered_set<std::string> used(p.generators.begin(), p.generators.end());
  used.insert(q.generators.begin(), q.generators.end());
  std::unordered_set<std::string> left(p.generators.begin(), p.generators.end());
  for (const auto& name : q.generators) {
    std::string chosen = name;
    if (left.count(name) != 0) {
      for (std::size_t k = 1;; ++k) {
        chosen = name + std::to_string(k);
        if (used.count(chosen) == 0) break;
      }
      used.insert(chosen);
    }
    out.generators.push_back(chosen);
  }
  const auto shift = static_cast<Letter>(p.generators.size());
  for (const auto& r : q.relators) {
    Word w;
    for (Letter l : r) w.push_back(l > 0 ? l + shift : l - shift);
    out.relators.push_back(std::move(w));
  }
  return out;
}

FundamentalClass classify_fundamental(const Graph& g) {
  if (!is_connected(g)) throw ValidationError("fundamental group needs a connected graph");
  FundamentalClass c;
  c.loops = g.loop_count();
  // Undirected count with loops once; +1 first to stay unsigned.
  c.free_rank = g.undirected_edge_count() + 1 - g.vertex_count() - c.loops;
  return c;
}

// ---------------------------------------------------------------------------

GraphUnion graph_union(const std::vector<Graph>& gs) {
  GraphUnion u;
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> index;
  EdgeList edges;
  for (const auto& g : gs) {
    std::vector<VertexId> local;
    for (const auto& n : g.names()) {
      auto [it, inserted] = index.emplace(n, static_cast<VertexId>(names.size()));
      if (inserted) names.push_back(n);
      local.push_back(it->second);
    }
    for (auto [a, b] : g.undirected_edges()) edges.emplace_back(local[a], local[b]);
    u.pieces.push_back(std::move(local));
  }
  u.graph = Graph::from_edges(std::move(names), edges);
  return u;
}

Wedge wedge_sum(const std::vector<Graph>& gs, std::string_view shared) {
  if (gs.empty()) throw ValidationError("wedge of zero graphs");
  std::map<std::string, std::size_t> owner;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (!gs[i].find(shared)) {
      throw ValidationError("graph " + std::to_string(i) + " lacks the wedge vertex \"" + std::string(shared) + "\"");
    }
    for (const auto& n : gs[i].names()) {
      if (n == shared) continue;
      auto [it, inserted] = owner.emplace(n, i);
      if (!inserted) {
        throw ValidationError("vertex \"" + n + "\" is shared by graphs " + std::to_string(it->second) +
                              " and " + std::to_string(i) + " besides the wedge vertex");
      }
    }
  }
  Wedge w;
  static_cast<GraphUnion&>(w) = graph_union(gs);
  w.shared = w.graph.require(shared);
  return w;
}

SpanningTree extend_tree(const Graph& whole, const std::vector<std::vector<VertexId>>& pieces,
                         VertexId root) {
  const auto n = whole.vertex_count();
  std::vector<VertexId> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](VertexId x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  EdgeList chosen;
  auto offer = [&](VertexId a, VertexId b) {
    if (a == b) return;
    auto ra = find(a);
    auto rb = find(b);
    if (ra == rb) return;
    uf[ra] = rb;
    chosen.emplace_back(a, b);
  };
  // Spanning trees of the pieces first, in order, then whatever connects
  // the rest.
  for (const auto& piece : pieces) {
    Graph sub = induced_subgraph(whole, piece);
    if (!is_connected(sub)) throw ValidationError("tree extension needs connected pieces");
    SpanningTree st = spanning_tree(sub);
    for (auto [a, b] : st.edges()) offer(piece[a], piece[b]);
  }
  for (auto [a, b] : whole.undirected_edges()) offer(a, b);
  SpanningTree t = SpanningTree::from_edges(whole, root, chosen);
  for (const auto& piece : pieces) {
    std::unordered_set<VertexId> in(piece.begin(), piece.end());
    std::size_t inside = 0;
    for (auto [a, b] : t.edges()) inside += (in.count(a) != 0 && in.count(b) != 0) ? 1 : 0;
    if (inside + 1 != piece.size()) {
      throw ValidationError("no spanning tree of the union restricts to spanning trees of every piece");
    }
  }
  return t;
}

Presentation van_kampen_presentation(const Graph& whole,
                                     const std::vector<std::vector<VertexId>>& pieces,
                                     const SpanningTree& t) {
  check_tree(whole, t);
  Presentation p;
  p.generators = edge_generator_names(whole);
  add_tree_and_pair_relators(whole, t, p);
  std::set<Square> covered;
  for (const auto& piece : pieces) {
    std::unordered_set<VertexId> in(piece.begin(), piece.end());
    std::size_t inside = 0;
    for (auto [a, b] : t.edges()) inside += (in.count(a) != 0 && in.count(b) != 0) ? 1 : 0;
    if (inside + 1 != piece.size()) throw ValidationError("tree does not restrict to a spanning tree of a piece");
    Graph sub = induced_subgraph(whole, piece);
    for (const auto& s : enumerate_squares(sub)) {
      Square lifted{{piece[s[0]], piece[s[1]], piece[s[2]], piece[s[3]]}};
      if (covered.insert(lifted.canonical()).second) {
        p.relators.push_back(edge_word(whole, {lifted[0], lifted[1], lifted[2], lifted[3], lifted[0]}));
      }
    }
  }
  // Squares crossing between pieces.
  for (const auto& s : enumerate_squares(whole)) {
    if (covered.count(s) == 0) p.relators.push_back(edge_word(whole, {s[0], s[1], s[2], s[3], s[0]}));
  }
  return p;
}

Presentation van_kampen_presentation(const std::vector<Graph>& gs) {
  GraphUnion u = graph_union(gs);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    Graph sub = induced_subgraph(u.graph, u.pieces[i]);
    if (sub.undirected_edge_count() != gs[i].undirected_edge_count()) {
      throw ValidationError("piece " + std::to_string(i) + " is not an induced subgraph of the union");
    }
  }
  SpanningTree t = extend_tree(u.graph, u.pieces);
  return van_kampen_presentation(u.graph, u.pieces, t);
}

}  // namespace hsk
