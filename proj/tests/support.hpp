#pragma once

// Shared fixtures and brute-force oracles for the test binaries. Oracles here
// deliberately avoid the library routines they are used to check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hsk/graph.hpp"
#include "hsk/presentation.hpp"
#include "hsk/realization.hpp"

namespace hsk::test {

inline Graph make_graph(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, VertexId> id;
  for (std::size_t i = 0; i < names.size(); ++i) id[names[i]] = static_cast<VertexId>(i);
  EdgeList e;
  for (const auto& [u, v] : edges) e.emplace_back(id.at(u), id.at(v));
  return Graph::from_edges(std::move(names), e);
}

inline Graph cycle(std::size_t n) { return cycle_graph(n); }

inline Graph c4() { return make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}); }

inline Graph bowtie() {
  return make_graph({"o", "a", "b", "c", "d"}, {{"o", "a"}, {"a", "b"}, {"b", "o"}, {"o", "c"}, {"c", "d"}, {"d", "o"}});
}

inline Graph triangle_loop() { return make_graph({"o", "a", "b"}, {{"o", "o"}, {"o", "a"}, {"a", "b"}, {"b", "o"}}); }

inline Graph loop_vertex() { return make_graph({"a"}, {{"a", "a"}}); }

inline Graph k2() { return make_graph({"a", "b"}, {{"a", "b"}}); }

inline Graph complete(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> e;
  for (std::size_t i = 0; i < n; ++i) names.push_back("k" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(names[i], names[j]);
  return make_graph(names, e);
}

inline Graph complete_bipartite(std::size_t m, std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> e;
  for (std::size_t i = 0; i < m; ++i) names.push_back("l" + std::to_string(i));
  for (std::size_t j = 0; j < n; ++j) names.push_back("r" + std::to_string(j));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) e.emplace_back("l" + std::to_string(i), "r" + std::to_string(j));
  return make_graph(names, e);
}

inline Graph grid(std::size_t w, std::size_t h) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> e;
  auto nm = [](std::size_t x, std::size_t y) { return std::to_string(x) + "," + std::to_string(y); };
  for (std::size_t y = 0; y < h; ++y)
    for (std::size_t x = 0; x < w; ++x) {
      names.push_back(nm(x, y));
      if (x + 1 < w) e.emplace_back(nm(x, y), nm(x + 1, y));
      if (y + 1 < h) e.emplace_back(nm(x, y), nm(x, y + 1));
    }
  return make_graph(names, e);
}

inline Graph cube() {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 0; i < 8; ++i) names.push_back("q" + std::to_string(i));
  for (int i = 0; i < 8; ++i)
    for (int b = 0; b < 3; ++b) {
      int j = i ^ (1 << b);
      if (i < j) e.emplace_back("q" + std::to_string(i), "q" + std::to_string(j));
    }
  return make_graph(names, e);
}

inline Graph petersen() {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 0; i < 10; ++i) names.push_back("p" + std::to_string(i));
  auto p = [](int i) { return "p" + std::to_string(i); };
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(p(i), p((i + 1) % 5));
    e.emplace_back(p(i), p(i + 5));
    e.emplace_back(p(5 + i), p(5 + (i + 2) % 5));
  }
  return make_graph(names, e);
}

/// Graph plus a loop on its first vertex, built without add_self_loop.
inline Graph with_loop(const Graph& g) {
  EdgeList e = g.undirected_edges();
  e.emplace_back(0, 0);
  return Graph::from_edges(g.names(), e);
}

inline Presentation cyclic(std::size_t n) {
  Presentation p;
  p.generators = {"g"};
  p.relators = {Word(n, 1)};
  return p;
}

inline Graph realization_z3() { return realize(cyclic(3)); }

struct Named {
  std::string name;
  Graph graph;
};

/// The graph corpus shared by the suites.
inline std::vector<Named> corpus() {
  return {
      {"C4", c4()},
      {"C6", cycle(6)},
      {"bowtie", bowtie()},
      {"triangle+loop", triangle_loop()},
      {"loop", loop_vertex()},
      {"K2", k2()},
      {"K4", complete(4)},
      {"K3,3", complete_bipartite(3, 3)},
      {"grid3x3", grid(3, 3)},
      {"cube", cube()},
      {"petersen", petersen()},
      {"s(C4)", with_loop(c4())},
      {"s(C6)", with_loop(cycle(6))},
      {"wheel8", quadrangulate_cycle(8).graph},
      {"realize(g^3)", realization_z3()},
  };
}

// ---------------------------------------------------------------------------
// Oracles

/// All closed non-backtracking 4-walks s0 s1 s2 s3 s0 with s0 != s2 and
/// s1 != s3, keyed by the least of their 8 rotations and reversals.
inline std::set<std::array<VertexId, 4>> brute_force_squares(const Graph& g) {
  std::set<std::array<VertexId, 4>> out;
  const auto n = static_cast<VertexId>(g.vertex_count());
  auto adj = [&](VertexId u, VertexId v) {
    auto nb = g.neighbors(u);
    return std::find(nb.begin(), nb.end(), v) != nb.end();
  };
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = 0; b < n; ++b)
      for (VertexId c = 0; c < n; ++c)
        for (VertexId d = 0; d < n; ++d) {
          if (!adj(a, b) || !adj(b, c) || !adj(c, d) || !adj(d, a)) continue;
          if (a == c || b == d) continue;
          std::array<VertexId, 4> s{a, b, c, d};
          std::array<VertexId, 4> best = s;
          for (int r = 0; r < 4; ++r) {
            std::array<VertexId, 4> rot{s[r % 4], s[(r + 1) % 4], s[(r + 2) % 4], s[(r + 3) % 4]};
            std::array<VertexId, 4> rev{s[r % 4], s[(r + 3) % 4], s[(r + 2) % 4], s[(r + 1) % 4]};
            best = std::min({best, rot, rev});
          }
          out.insert(best);
        }
  return out;
}

/// Adjacency lists of the strip graph by direct pairwise comparison.
struct NaiveStrip {
  std::vector<std::vector<VertexId>> walks;
  std::vector<std::vector<std::size_t>> adj;
};

inline NaiveStrip naive_strip(const Graph& g, std::size_t n) {
  NaiveStrip s;
  std::vector<std::vector<VertexId>> cur;
  for (VertexId v = 0; v < g.vertex_count(); ++v) cur.push_back({v});
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<VertexId>> next;
    for (const auto& w : cur)
      for (VertexId x : g.neighbors(w.back())) {
        auto e = w;
        e.push_back(x);
        next.push_back(e);
      }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  s.walks = cur;
  s.adj.resize(cur.size());
  for (std::size_t i = 0; i < cur.size(); ++i)
    for (std::size_t j = 0; j < cur.size(); ++j) {
      bool ok = true;
      for (std::size_t k = 0; k <= n && ok; ++k) ok = g.has_edge(cur[i][k], cur[j][k]);
      if (ok) s.adj[i].push_back(j);
    }
  return s;
}

struct OracleDiameter {
  std::size_t value = 0;
  bool connected = true;
};

/// Plain BFS from every vertex.
inline OracleDiameter all_pairs_diameter(const std::vector<std::vector<std::size_t>>& adj) {
  OracleDiameter out;
  const std::size_t n = adj.size();
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<long> dist(n, -1);
    std::deque<std::size_t> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (auto w : adj[u])
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push_back(w);
        }
    }
    for (auto d : dist) {
      if (d < 0) out.connected = false;
      else out.value = std::max(out.value, static_cast<std::size_t>(d));
    }
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (VertexId w : g.neighbors(v)) adj[v].push_back(w);
  return adj;
}

/// Invariant factors d_1 | d_2 | ... of a small integer matrix from the gcds
/// of its k x k minors (d_1...d_k = gcd of k-minors). Returns the nonzero
/// factors; exact for matrices up to about 5 x 5.
inline std::vector<std::int64_t> invariant_factors_by_minors(const std::vector<std::vector<std::int64_t>>& a,
                                                             std::size_t cols) {
  const std::size_t rows = a.size();
  auto det = [](std::vector<std::vector<std::int64_t>> m) {
    // Bareiss fraction-free elimination.
    const std::size_t n = m.size();
    std::int64_t sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m[k][k] == 0) {
        std::size_t r = k + 1;
        while (r < n && m[r][k] == 0) ++r;
        if (r == n) return std::int64_t{0};
        std::swap(m[k], m[r]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
  };
  std::vector<std::int64_t> products{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::int64_t g = 0;
    std::vector<bool> rs(rows, false), cs(cols, false);
    std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
      do {
        std::vector<std::vector<std::int64_t>> m;
        for (std::size_t i = 0; i < rows; ++i) {
          if (!rs[i]) continue;
          std::vector<std::int64_t> row;
          for (std::size_t j = 0; j < cols; ++j)
            if (cs[j]) row.push_back(a[i][j]);
          m.push_back(row);
        }
        g = std::gcd(g, det(m));
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    if (g == 0) break;
    products.push_back(g);
  }
  std::vector<std::int64_t> out;
  for (std::size_t k = 1; k < products.size(); ++k) out.push_back(products[k] / products[k - 1]);
  return out;
}

}  // namespace hsk::test
