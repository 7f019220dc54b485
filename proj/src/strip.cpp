#include "hsk/strip.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <thread>

namespace hsk {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSat - b ? kSat : a + b; }

std::vector<std::vector<std::uint64_t>> walk_counts(const Graph& g, std::size_t n) {
  std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(g.vertex_count(), 0));
  std::fill(c[0].begin(), c[0].end(), 1);
  for (std::size_t k = 1; k <= n; ++k) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      std::uint64_t s = 0;
      for (VertexId w : g.neighbors(v)) s = sat_add(s, c[k - 1][w]);
      c[k][v] = s;
    }
  }
  return c;
}

}  // namespace

Csr csr_of(const Graph& g) {
  Csr c;
  c.offsets.reserve(g.vertex_count() + 1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (VertexId w : g.neighbors(v)) c.targets.push_back(w);
    c.offsets.push_back(c.targets.size());
  }
  return c;
}

std::uint64_t StripGraph::walk_count(const Graph& g, std::size_t n) {
  auto c = walk_counts(g, n);
  std::uint64_t total = 0;
  for (auto x : c[n]) total = sat_add(total, x);
  return total;
}

StripGraph StripGraph::build(const Graph& g, std::size_t n, std::size_t walk_cap) {
  StripGraph s;
  s.base_ = g;
  s.n_ = n;
  s.counts_ = walk_counts(g, n);
  std::uint64_t total = 0;
  for (auto x : s.counts_[n]) total = sat_add(total, x);
  if (total > walk_cap) {
    throw BudgetExceeded("strip graph of length " + std::to_string(n) + " needs " +
                         (total == kSat ? std::string("more than 2^64") : std::to_string(total)) +
                         " walks, above the cap of " + std::to_string(walk_cap));
  }
  s.start_offset_.assign(g.vertex_count() + 1, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) s.start_offset_[v + 1] = s.start_offset_[v] + s.counts_[n][v];
  s.before_.assign(n + 1, std::vector<std::uint64_t>(g.directed_edge_count(), 0));
  for (std::size_t k = 0; k <= n; ++k) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      std::uint64_t acc = 0;
      for (VertexId w : g.neighbors(v)) {
        s.before_[k][*g.edge_index(v, w)] = acc;
        acc += s.counts_[k][w];
      }
    }
  }

  // Enumerate walks in lexicographic order; for each, enumerate the
  // pointwise-adjacent walks with their ranks accumulated position by
  // position.
  const auto count = static_cast<std::size_t>(total);
  Csr& adj = s.adjacency_;
  adj.offsets.reserve(count + 1);
  std::vector<VertexId> w(n + 1);
  std::vector<VertexId> nw(n + 1);
  std::vector<std::uint64_t> nrank(n + 2, 0);

  // DFS over neighbor walks of the current walk w.
  auto neighbors_of = [&](auto&& self, std::size_t i) -> void {
    if (i > n) {
      adj.targets.push_back(static_cast<std::uint32_t>(nrank[i]));
      return;
    }
    auto here = g.neighbors(w[i]);
    if (i == 0) {
      for (VertexId x : here) {
        nw[0] = x;
        nrank[1] = s.start_offset_[x];
        self(self, 1);
      }
      return;
    }
    const VertexId prev = nw[i - 1];
    auto from = g.neighbors(prev);
    if (from.empty()) return;
    // Sorted intersection of N(w_i) and N(nw_{i-1}).
    std::size_t a = 0, b = 0;
    const std::size_t base_edge = *g.edge_index(prev, from[0]);
    while (a < here.size() && b < from.size()) {
      if (here[a] < from[b]) {
        ++a;
      } else if (from[b] < here[a]) {
        ++b;
      } else {
        nw[i] = from[b];
        nrank[i + 1] = nrank[i] + s.before_[n - i][base_edge + b];
        self(self, i + 1);
        ++a;
        ++b;
      }
    }
  };

  auto walks_from = [&](auto&& self, std::size_t i) -> void {
    if (i > n) {
      neighbors_of(neighbors_of, 0);
      adj.offsets.push_back(adj.targets.size());
      return;
    }
    for (VertexId x : g.neighbors(w[i - 1])) {
      w[i] = x;
      self(self, i + 1);
    }
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    w[0] = v;
    walks_from(walks_from, 1);
  }
  // Neighbor lists come out in rank order already, since the DFS follows
  // the same lexicographic order that defines the ranks.
  return s;
}

std::vector<VertexId> StripGraph::walk(std::uint64_t r) const {
  const Graph& g = base_;
  std::vector<VertexId> out;
  auto it = std::upper_bound(start_offset_.begin(), start_offset_.end(), r);
  VertexId v = static_cast<VertexId>(it - start_offset_.begin() - 1);
  out.push_back(v);
  r -= start_offset_[v];
  for (std::size_t i = 1; i <= n_; ++i) {
    for (VertexId w : g.neighbors(v)) {
      const auto c = counts_[n_ - i][w];
      if (r < c) {
        v = w;
        break;
      }
      r -= c;
    }
    out.push_back(v);
  }
  return out;
}

std::uint64_t StripGraph::rank(const std::vector<VertexId>& walk) const {
  const Graph& g = base_;
  if (walk.size() != n_ + 1) throw ValidationError("walk has the wrong length for this strip graph");
  std::uint64_t r = start_offset_.at(walk[0]);
  for (std::size_t i = 0; i < n_; ++i) {
    auto e = g.edge_index(walk[i], walk[i + 1]);
    if (!e) throw ValidationError("not a walk of the base graph");
    r += before_[n_ - i - 1][*e];
  }
  return r;
}

Graph StripGraph::to_graph() const {
  std::vector<std::string> names;
  for (std::uint64_t r = 0; r < vertex_count(); ++r) {
    std::string s;
    for (VertexId v : walk(r)) {
      if (!s.empty()) s += '/';
      s += base_.name(v);
    }
    names.push_back(std::move(s));
  }
  EdgeList edges;
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    for (std::size_t k = adjacency_.offsets[v]; k < adjacency_.offsets[v + 1]; ++k) {
      if (v <= adjacency_.targets[k]) edges.emplace_back(static_cast<VertexId>(v), adjacency_.targets[k]);
    }
  }
  return Graph::from_edges(std::move(names), edges);
}

// ---------------------------------------------------------------------------

namespace {

// Distances from s; returns (farthest vertex, its distance).
std::pair<std::uint32_t, std::size_t> bfs_far(const Csr& g, std::uint32_t s, std::vector<std::int64_t>& dist) {
  std::fill(dist.begin(), dist.end(), -1);
  std::deque<std::uint32_t> q{s};
  dist[s] = 0;
  std::uint32_t far = s;
  while (!q.empty()) {
    auto u = q.front();
    q.pop_front();
    if (dist[u] > dist[far]) far = u;
    for (std::size_t k = g.offsets[u]; k < g.offsets[u + 1]; ++k) {
      auto w = g.targets[k];
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
    }
  }
  return {far, static_cast<std::size_t>(dist[far])};
}

// Largest eccentricity among sources [first, first+64). `comp` labels
// components; a vertex is done once every lane of its component reached it.
// Small frontiers push along their edges, large ones pull.
std::size_t batch_eccentricity(const Csr& g, const std::vector<std::uint32_t>& comp, std::size_t first,
                               std::vector<std::uint64_t>& visited, std::vector<std::uint64_t>& frontier,
                               std::vector<std::uint64_t>& next, std::vector<std::uint64_t>& want) {
  const std::size_t n = g.vertex_count();
  std::fill(visited.begin(), visited.end(), 0);
  std::fill(frontier.begin(), frontier.end(), 0);
  const std::size_t lanes = std::min<std::size_t>(64, n - first);
  std::vector<std::uint32_t> active;
  for (std::size_t i = 0; i < lanes; ++i) {
    visited[first + i] |= std::uint64_t{1} << i;
    frontier[first + i] |= std::uint64_t{1} << i;
    active.push_back(static_cast<std::uint32_t>(first + i));
    want[comp[first + i]] = 0;
  }
  for (std::size_t i = 0; i < lanes; ++i) want[comp[first + i]] |= std::uint64_t{1} << i;
  std::size_t level = 0;
  while (!active.empty()) {
    std::size_t push_cost = 0;
    for (auto u : active) push_cost += g.offsets[u + 1] - g.offsets[u];
    std::fill(next.begin(), next.end(), 0);
    if (push_cost * 4 < g.edge_entries()) {
      for (auto u : active) {
        const std::uint64_t f = frontier[u];
        for (std::size_t k = g.offsets[u]; k < g.offsets[u + 1]; ++k) {
          const auto w = g.targets[k];
          next[w] |= f & ~visited[w];
        }
      }
    } else {
      for (std::size_t v = 0; v < n; ++v) {
        const std::uint64_t goal = want[comp[v]] & ~visited[v];
        if (goal == 0) continue;
        std::uint64_t acc = 0;
        for (std::size_t k = g.offsets[v]; k < g.offsets[v + 1]; ++k) {
          acc |= frontier[g.targets[k]];
          if ((acc & goal) == goal) break;
        }
        next[v] = acc & goal;
      }
    }
    active.clear();
    for (std::size_t v = 0; v < n; ++v) {
      if (next[v] != 0) {
        visited[v] |= next[v];
        active.push_back(static_cast<std::uint32_t>(v));
      }
    }
    if (active.empty()) break;
    ++level;
    std::swap(frontier, next);
  }
  return level;
}

}  // namespace

DiameterResult diameter(const Csr& g, DiameterMode mode, std::size_t exact_cap, unsigned threads) {
  DiameterResult out;
  const std::size_t n = g.vertex_count();
  if (n == 0) return out;
  std::vector<std::int64_t> dist(n);
  // Components, and a representative per component for the sweeps.
  std::vector<std::uint32_t> reps;
  std::vector<std::uint32_t> comp;
  {
    constexpr std::uint32_t kUnseen = static_cast<std::uint32_t>(-1);
    comp.assign(n, kUnseen);
    for (std::uint32_t s = 0; s < n; ++s) {
      if (comp[s] != kUnseen) continue;
      const auto label = static_cast<std::uint32_t>(reps.size());
      reps.push_back(s);
      bfs_far(g, s, dist);
      for (std::size_t v = 0; v < n; ++v) {
        if (dist[v] >= 0) comp[v] = label;
      }
    }
  }
  out.connected = reps.size() == 1;
  const bool exact = mode == DiameterMode::Exact || (mode == DiameterMode::Auto && n <= exact_cap);
  if (!exact) {
    out.exact = false;
    for (auto s : reps) {
      auto [far, d] = bfs_far(g, s, dist);
      std::size_t best = d;
      for (int sweep = 0; sweep < 4; ++sweep) {
        auto [far2, d2] = bfs_far(g, far, dist);
        best = std::max(best, d2);
        far = far2;
      }
      out.value = std::max(out.value, best);
    }
    return out;
  }
  const std::size_t batches = (n + 63) / 64;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, batches));
  std::atomic<std::size_t> next_batch{0};
  std::vector<std::size_t> best(threads, 0);
  auto worker = [&](unsigned id) {
    std::vector<std::uint64_t> visited(n), frontier(n), nx(n), want(reps.size());
    for (;;) {
      std::size_t b = next_batch.fetch_add(1);
      if (b >= batches) break;
      best[id] = std::max(best[id], batch_eccentricity(g, comp, b * 64, visited, frontier, nx, want));
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();
  }
  out.value = *std::max_element(best.begin(), best.end());
  return out;
}

DiameterResult diameter(const Graph& g, DiameterMode mode, std::size_t exact_cap) {
  return diameter(csr_of(g), mode, exact_cap);
}

}  // namespace hsk
