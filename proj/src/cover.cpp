#include "hsk/cover.hpp"

#include <deque>

#include "hsk/square_equivalence.hpp"

namespace hsk {

std::vector<VertexId> Cover::fiber(VertexId base_vertex) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < projection.size(); ++v) {
    if (projection[v] == base_vertex) out.push_back(v);
  }
  return out;
}

std::optional<VertexId> Cover::neighbor_over(VertexId v, VertexId b) const {
  for (VertexId w : total.neighbors(v)) {
    if (projection[w] == b) return w;
  }
  return std::nullopt;
}

Cover identity_cover(const Graph& g) {
  Cover c;
  c.total = g;
  c.base = g;
  c.projection.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) c.projection[v] = v;
  return c;
}

CoverCheck check_covering_map(const Cover& c) {
  CoverCheck out;
  auto fail = [&](std::optional<VertexId> v, std::string why) {
    out.ok = false;
    out.vertex = v;
    out.reason = std::move(why);
    return out;
  };
  if (c.projection.size() != c.total.vertex_count()) return fail(std::nullopt, "projection is not total");
  for (VertexId x = 0; x < c.total.vertex_count(); ++x) {
    if (c.projection[x] >= c.base.vertex_count()) return fail(x, "projection leaves the base graph");
  }
  std::vector<int> hits(c.base.vertex_count(), 0);
  for (VertexId x = 0; x < c.total.vertex_count(); ++x) {
    const VertexId a = c.projection[x];
    for (VertexId y : c.total.neighbors(x)) {
      if (!c.base.has_edge(a, c.projection[y])) {
        return fail(x, "edge " + c.total.name(x) + " - " + c.total.name(y) + " does not project to an edge");
      }
    }
    if (!c.verified(x)) continue;
    for (VertexId y : c.total.neighbors(x)) ++hits[c.projection[y]];
    bool bijective = c.total.degree(x) == c.base.degree(a);
    for (VertexId b : c.base.neighbors(a)) bijective = bijective && hits[b] == 1;
    for (VertexId y : c.total.neighbors(x)) hits[c.projection[y]] = 0;
    if (!bijective) {
      return fail(x, "neighborhood of " + c.total.name(x) + " does not map bijectively onto that of " +
                         c.base.name(a));
    }
  }
  return out;
}

Walk lift_walk(const Cover& c, const Walk& p, VertexId start) {
  if (start >= c.total.vertex_count() || c.projection[start] != p[0]) {
    throw ValidationError("lift start does not lie over the first vertex of the walk");
  }
  std::vector<VertexId> out{start};
  for (std::size_t i = 1; i <= p.length(); ++i) {
    VertexId cur = out.back();
    if (!c.verified(cur)) throw BudgetExceeded("lift leaves the verified radius of the truncated cover");
    auto next = c.neighbor_over(cur, p[i]);
    if (!next) throw ValidationError("walk step has no lift; projection is not a cover here");
    out.push_back(*next);
  }
  return Walk::trusted(std::move(out));
}

namespace {

std::string walk_name(const Graph& g, const std::vector<VertexId>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) s += '/';
    s += g.name(w[i]);
  }
  return s;
}

}  // namespace

Cover universal_cover_ball(const Graph& g, VertexId base, std::size_t radius, std::size_t max_vertices) {
  if (base >= g.vertex_count()) throw ValidationError("unknown base vertex");
  if (!is_connected(g)) throw ValidationError("universal cover needs a connected graph");
  std::vector<std::vector<VertexId>> walks{{base}};
  std::vector<std::size_t> depth{0};
  EdgeList edges;
  for (std::size_t i = 0; i < walks.size(); ++i) {
    if (depth[i] >= radius) continue;
    const auto w = walks[i];
    for (VertexId x : g.neighbors(w.back())) {
      if (w.size() >= 2 && w[w.size() - 2] == x) continue;
      if (walks.size() >= max_vertices) throw BudgetExceeded("universal cover ball exceeds the vertex budget");
      auto nw = w;
      nw.push_back(x);
      edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(walks.size()));
      walks.push_back(std::move(nw));
      depth.push_back(depth[i] + 1);
    }
  }
  Cover c;
  std::vector<std::string> names;
  names.reserve(walks.size());
  for (const auto& w : walks) {
    names.push_back(walk_name(g, w));
    c.projection.push_back(w.back());
  }
  c.total = Graph::from_edges(std::move(names), edges);
  c.base = g;
  c.provenance = Cover::Provenance::TruncatedBall;
  c.radius = radius;
  c.depth = std::move(depth);
  c.basepoint = 0;
  return c;
}

Cover exact_square_cover(const Graph& g, const SquareGroup& sg) {
  const CosetTable* t = sg.table();
  if (t == nullptr) throw ValidationError("exact square cover needs a closed coset table");
  const auto nv = g.vertex_count();
  const auto order = t->order();
  std::vector<std::string> names;
  names.reserve(order * nv);
  Cover c;
  for (std::uint32_t k = 0; k < order; ++k) {
    for (VertexId v = 0; v < nv; ++v) {
      names.push_back("(" + std::to_string(k) + "," + g.name(v) + ")");
      c.projection.push_back(v);
    }
  }
  EdgeList edges;
  for (std::size_t i = 0; i < g.directed_edge_count(); ++i) {
    auto [u, v] = g.edge_at(i);
    if (u > v) continue;
    const Word& voltage = sg.simplified.images.at(i);
    for (std::uint32_t k = 0; k < order; ++k) {
      auto k2 = t->act(k, voltage);
      edges.emplace_back(static_cast<VertexId>(k * nv + u), static_cast<VertexId>(k2 * nv + v));
    }
  }
  c.total = Graph::from_edges(std::move(names), edges);
  c.base = g;
  c.provenance = Cover::Provenance::Exact;
  c.basepoint = sg.tree.root();
  return c;
}

Cover square_cover(const Graph& g, const SquareCoverOptions& opt) {
  SquareGroup sg = compute_square_group(g, opt.tree_root, opt.max_cosets);
  return square_cover(g, sg, opt);
}

Cover square_cover(const Graph& g, const SquareGroup& sg, const SquareCoverOptions& opt) {
  if (sg.table() != nullptr) return exact_square_cover(g, sg);

  // Truncated ball of classes of reduced walks from the root.
  const VertexId root = sg.tree.root();
  RowLattice lattice(sg.raw);
  SquareEquivalenceOptions eq;
  eq.max_moves = opt.rewrite_depth;
  eq.lattice = &lattice;
  eq.lattice_over_edges = true;

  std::vector<Walk> reps{Walk::trusted({root})};
  std::vector<std::size_t> depth{0};
  std::vector<std::vector<VertexId>> ending_at(g.vertex_count());
  ending_at[root].push_back(0);
  EdgeList edges;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (depth[i] >= opt.fallback_radius) continue;
    const Walk cur = reps[i];
    for (VertexId x : g.neighbors(cur.back())) {
      Walk cand = star(cur, Walk::trusted({cur.back(), x}));
      std::optional<VertexId> match;
      for (VertexId j : ending_at[x]) {
        if (reps[j] == cand) {
          match = j;
          break;
        }
      }
      if (!match) {
        for (VertexId j : ending_at[x]) {
          auto r = square_equivalent(g, cand, reps[j], eq);
          if (r.verdict == SquareEquivalence::Verdict::Equivalent) {
            match = j;
            break;
          }
        }
      }
      if (!match) {
        if (reps.size() >= opt.max_vertices) throw BudgetExceeded("truncated square cover exceeds the vertex budget");
        match = static_cast<VertexId>(reps.size());
        reps.push_back(cand);
        depth.push_back(depth[i] + 1);
        ending_at[x].push_back(*match);
      }
      edges.emplace_back(static_cast<VertexId>(i), *match);
    }
  }
  Cover c;
  std::vector<std::string> names;
  for (const auto& w : reps) {
    names.push_back(walk_name(g, w.vertices()));
    c.projection.push_back(w.back());
  }
  c.total = Graph::from_edges(std::move(names), edges);
  c.base = g;
  c.provenance = Cover::Provenance::TruncatedBall;
  c.radius = opt.fallback_radius;
  c.depth = std::move(depth);
  c.basepoint = 0;
  return c;
}

SquareLiftCheck check_square_lifting(const Cover& c) {
  SquareLiftCheck out;
  for (const auto& s : enumerate_squares(c.base)) {
    for (const auto& o : s.orientations()) {
      Walk w = square_walk(o);
      for (VertexId start : c.fiber(o[0])) {
        Walk lifted;
        try {
          lifted = lift_walk(c, w, start);
        } catch (const BudgetExceeded&) {
          continue;
        }
        if (lifted.back() != start) {
          out.ok = false;
          out.square = o;
          out.start = start;
          return out;
        }
      }
    }
  }
  return out;
}

std::optional<std::vector<VertexId>> deck_transformation(const Cover& c, VertexId v, VertexId w) {
  if (!c.exact()) throw ValidationError("deck transformations need an exact cover");
  const auto n = c.total.vertex_count();
  if (v >= n || w >= n) throw ValidationError("unknown cover vertex");
  if (c.projection[v] != c.projection[w]) throw ValidationError("deck transformation endpoints lie in different fibers");
  constexpr VertexId kUnset = static_cast<VertexId>(-1);
  std::vector<VertexId> eta(n, kUnset);
  eta[v] = w;
  std::deque<VertexId> queue{v};
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId x2 : c.total.neighbors(x)) {
      auto y2 = c.neighbor_over(eta[x], c.projection[x2]);
      if (!y2) return std::nullopt;
      if (eta[x2] == kUnset) {
        eta[x2] = *y2;
        queue.push_back(x2);
      } else if (eta[x2] != *y2) {
        return std::nullopt;
      }
    }
  }
  std::vector<bool> hit(n, false);
  for (VertexId x = 0; x < n; ++x) {
    if (eta[x] == kUnset || hit[eta[x]]) return std::nullopt;
    hit[eta[x]] = true;
  }
  for (auto [a, b] : c.total.undirected_edges()) {
    if (!c.total.has_edge(eta[a], eta[b])) return std::nullopt;
  }
  return eta;
}

}  // namespace hsk
