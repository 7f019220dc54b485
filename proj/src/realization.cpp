#include "hsk/realization.hpp"

#include <algorithm>
#include <set>

#include "hsk/simplify.hpp"
#include "hsk/square_group.hpp"

namespace hsk {

namespace {

// Wheel filler over `border` (a cycle of even length n >= 6); inner ring
// ids are first_new .. first_new+n-1 and the hub is first_new+n.
void wheel(const std::vector<VertexId>& border, VertexId first_new, EdgeList& edges,
           std::vector<Square>* faces) {
  const auto n = border.size();
  auto ring = [&](std::size_t k) { return static_cast<VertexId>(first_new + k % n); };
  const auto hub = static_cast<VertexId>(first_new + n);
  for (std::size_t k = 0; k < n; ++k) {
    edges.emplace_back(border[k], ring(k));
    edges.emplace_back(ring(k), ring(k + 1));
    if (k % 2 == 0) edges.emplace_back(hub, ring(k));
    if (faces != nullptr) {
      faces->push_back(Square{{border[k], border[(k + 1) % n], ring(k + 1), ring(k)}}.canonical());
      if (k % 2 == 0) faces->push_back(Square{{hub, ring(k), ring(k + 1), ring(k + 2)}}.canonical());
    }
  }
}

void check_cycle_length(std::size_t n) {
  if (n < 6 || n % 2 != 0) throw ValidationError("quadrangulated cycles need an even length >= 6");
}

bool face_has_edge(const Square& s, VertexId u, VertexId v) {
  for (std::size_t i = 0; i < 4; ++i) {
    if ((s[i] == u && s[i + 1] == v) || (s[i] == v && s[i + 1] == u)) return true;
  }
  return false;
}

}  // namespace

FlatQuadrangulation quadrangulate_cycle(std::size_t n) {
  check_cycle_length(n);
  std::vector<std::string> names;
  FlatQuadrangulation q;
  EdgeList edges;
  for (std::size_t k = 0; k < n; ++k) {
    names.push_back("b" + std::to_string(k));
    q.border.push_back(static_cast<VertexId>(k));
    edges.emplace_back(static_cast<VertexId>(k), static_cast<VertexId>((k + 1) % n));
  }
  for (std::size_t k = 0; k < n; ++k) names.push_back("i" + std::to_string(k));
  names.push_back("hub");
  wheel(q.border, static_cast<VertexId>(n), edges, &q.faces);
  q.graph = Graph::from_edges(std::move(names), edges);
  std::sort(q.faces.begin(), q.faces.end());
  return q;
}

EdgeList boundary_edges(const FlatQuadrangulation& q) {
  EdgeList out;
  for (auto [u, v] : q.graph.undirected_edges()) {
    std::size_t on = 0;
    for (const auto& f : q.faces) on += face_has_edge(f, u, v) ? 1 : 0;
    if (on == 1) out.emplace_back(u, v);
  }
  return out;
}

FlatQuadrangulation peel_boundary_edge(const FlatQuadrangulation& q, VertexId u, VertexId v) {
  if (!q.graph.has_edge(u, v) || u == v) throw ValidationError("peeled edge is not an edge of the quadrangulation");
  std::vector<std::size_t> on;
  for (std::size_t i = 0; i < q.faces.size(); ++i) {
    if (face_has_edge(q.faces[i], u, v)) on.push_back(i);
  }
  if (on.empty()) throw ValidationError("edge lies on no internal face");
  if (on.size() > 1) throw ValidationError("edge is interior (it borders two internal faces)");
  FlatQuadrangulation out;
  out.faces = q.faces;
  out.faces.erase(out.faces.begin() + static_cast<std::ptrdiff_t>(on[0]));
  EdgeList edges;
  for (auto e : q.graph.undirected_edges()) {
    if (e != std::pair{std::min(u, v), std::max(u, v)}) edges.push_back(e);
  }
  out.graph = Graph::from_edges(q.graph.names(), edges);
  return out;
}

bool check_quadrangulation(const FlatQuadrangulation& q, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why != nullptr) *why = m;
    return false;
  };
  std::set<Square> listed;
  for (const auto& f : q.faces) {
    if (!f.valid_on(q.graph)) return fail("a listed face is not a square of the graph");
    listed.insert(f.canonical());
  }
  for (const auto& s : enumerate_squares(q.graph)) {
    if (listed.count(s) == 0) return fail("a square of the graph is not a listed face");
  }
  for (auto [u, v] : q.graph.undirected_edges()) {
    std::size_t on = 0;
    for (const auto& f : q.faces) on += face_has_edge(f, u, v) ? 1 : 0;
    if (on > 2) return fail("an edge lies on more than two faces");
  }
  if (!q.border.empty()) {
    std::set<VertexId> on_border(q.border.begin(), q.border.end());
    const auto n = q.border.size();
    for (std::size_t k = 0; k < n; ++k) {
      if (!q.graph.has_edge(q.border[k], q.border[(k + 1) % n])) return fail("border is not a cycle");
    }
    for (VertexId x = 0; x < q.graph.vertex_count(); ++x) {
      std::size_t border_nb = 0;
      for (VertexId y : q.graph.neighbors(x)) border_nb += on_border.count(y);
      if (on_border.count(x) != 0) {
        if (border_nb != 2) return fail("the border has a chord");
      } else if (border_nb >= 2) {
        return fail("an inner vertex has two border neighbors");
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

Presentation reduce_presentation_input(const Presentation& p) {
  p.validate();
  Presentation cur = p;
  for (;;) {
    std::vector<Word> rels;
    for (const auto& r : cur.relators) {
      Word w = free_reduce(r);
      if (!w.empty()) rels.push_back(std::move(w));
    }
    cur.relators = std::move(rels);
    auto single = std::find_if(cur.relators.begin(), cur.relators.end(), [](const Word& w) { return w.size() == 1; });
    if (single == cur.relators.end()) return cur;
    const std::size_t g = generator_of((*single)[0]);
    Presentation next;
    for (std::size_t h = 0; h < cur.generator_count(); ++h) {
      if (h != g) next.generators.push_back(cur.generators[h]);
    }
    for (const auto& r : cur.relators) {
      Word w;
      for (Letter l : r) {
        std::size_t h = generator_of(l);
        if (h == g) continue;
        std::size_t nh = h > g ? h - 1 : h;
        w.push_back(letter(nh, l < 0));
      }
      next.relators.push_back(std::move(w));
    }
    cur = std::move(next);
  }
}

Realization realize_detailed(const Presentation& p, const RealizationConfig& cfg) {
  p.validate();
  if (!(reduce_presentation_input(p) == p)) {
    throw ValidationError("presentation is not reduced; apply reduce_presentation_input first");
  }
  const std::size_t N = cfg.petal;
  if (N < 6 || N % 2 != 0) throw ValidationError("petal length must be even and at least 6");
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    std::string tag = "r" + std::to_string(i);
    if (std::find(p.generators.begin(), p.generators.end(), tag) != p.generators.end()) {
      throw ValidationError("generator name \"" + tag + "\" collides with a relation tag");
    }
  }

  Realization out;
  std::vector<std::string> names{"ω"};
  out.piece.push_back(-1);
  EdgeList edges;
  auto add = [&](std::string name, int piece) {
    names.push_back(std::move(name));
    out.piece.push_back(piece);
    return static_cast<VertexId>(names.size() - 1);
  };

  // Petals: omega, (a,1), ..., (a,N-1), omega.
  std::vector<VertexId> petal_start;
  for (const auto& a : p.generators) {
    petal_start.push_back(static_cast<VertexId>(names.size()));
    VertexId prev = 0;
    for (std::size_t k = 1; k < N; ++k) {
      VertexId v = add("(" + a + "," + std::to_string(k) + ")", -1);
      edges.emplace_back(prev, v);
      prev = v;
    }
    edges.emplace_back(prev, 0);
    out.counts.petals += N - 1;
  }
  auto petal = [&](std::size_t g, std::size_t k) { return static_cast<VertexId>(petal_start[g] + k - 1); };

  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const Word& r = p.relators[i];
    const std::string tag = "r" + std::to_string(i);
    const int piece = static_cast<int>(i);
    const std::size_t M = N * r.size();
    std::vector<VertexId> cycle;
    for (std::size_t k = 0; k < M; ++k) cycle.push_back(add("(" + tag + "," + std::to_string(k) + ")", piece));
    for (std::size_t k = 0; k < M; ++k) edges.emplace_back(cycle[k], cycle[(k + 1) % M]);
    out.counts.relation_cycles += M;

    // phi_r: the k-th cycle vertex goes to the matching petal position of
    // the k/N-th letter, read backwards for an inverse letter.
    auto phi = [&](std::size_t k) -> VertexId {
      std::size_t m = k % N;
      if (m == 0) return 0;
      Letter l = r[k / N];
      return petal(generator_of(l), l > 0 ? m : N - m);
    };
    for (std::size_t k = 0; k < M; ++k) {
      std::size_t nu = cfg.nu == RealizationConfig::Rungs::Alternating ? k % 2 : 0;
      edges.emplace_back(cycle[(k + nu) % M], phi((k + M - nu) % M));
    }

    VertexId first_new = static_cast<VertexId>(names.size());
    for (std::size_t k = 0; k < M; ++k) add("(" + tag + ",ι," + std::to_string(k) + ")", piece);
    add("(" + tag + ",α)", piece);
    wheel(cycle, first_new, edges, nullptr);
    out.counts.fillers += M + 1;
  }
  try {
    out.graph = Graph::from_edges(std::move(names), edges);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("generator names collide with realization vertex names: ") + e.what());
  }
  return out;
}

Graph realize(const Presentation& p, const RealizationConfig& cfg) { return realize_detailed(p, cfg).graph; }

bool squares_within_pieces(const Realization& r, Square* witness) {
  for (const auto& s : enumerate_squares(r.graph)) {
    int seen = -1;
    for (std::size_t i = 0; i < 4; ++i) {
      int piece = r.piece[s[i]];
      if (piece < 0) continue;
      if (seen >= 0 && piece != seen) {
        if (witness != nullptr) *witness = s;
        return false;
      }
      seen = piece;
    }
  }
  return true;
}

Graph add_self_loop(const Graph& g, std::string* warning) {
  if (g.vertex_count() == 0) throw ValidationError("cannot add a self-loop to an empty graph");
  if (warning != nullptr) {
    warning->clear();
    if (!is_connected(g) || !is_bipartite(g).bipartite) {
      *warning = "input is not a connected bipartite graph; the square group need not split off Z/2";
    }
  }
  EdgeList edges = g.undirected_edges();
  edges.emplace_back(0, 0);
  return Graph::from_edges(g.names(), edges);
}

RealizationReport verify_realization(const Presentation& p, const Graph& g, std::size_t max_cosets) {
  RealizationReport rep;
  Simplified sp = simplify(p);
  rep.presented = enumerate(sp.presentation, max_cosets);
  rep.presented_ab = abelianization(sp.presentation);
  SquareGroup sg = compute_square_group(g, 0, max_cosets);
  rep.realized = sg.outcome;
  rep.realized_ab = abelianization(sg.simplified.presentation);
  std::string problem;
  if (!(rep.presented_ab == rep.realized_ab)) {
    problem = "abelianizations differ (" + format_invariants(rep.presented_ab) + " vs " +
              format_invariants(rep.realized_ab) + ")";
  }
  auto* a = std::get_if<Finite>(&rep.presented);
  auto* b = std::get_if<Finite>(&rep.realized);
  if (a != nullptr && b != nullptr && a->order != b->order) {
    if (!problem.empty()) problem += "; ";
    problem += "orders differ (" + std::to_string(a->order) + " vs " + std::to_string(b->order) + ")";
  }
  rep.consistent = problem.empty();
  rep.summary = rep.consistent ? "consistent" : "REFUTED: " + problem;
  return rep;
}

}  // namespace hsk
