#include "hsk/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace hsk {

Graph Graph::from_edges(std::vector<std::string> names, const EdgeList& undirected_edges,
                        std::size_t* collapsed) {
  Graph g;
  g.names_ = std::move(names);
  for (VertexId v = 0; v < g.names_.size(); ++v) {
    auto [it, inserted] = g.index_.emplace(g.names_[v], v);
    if (!inserted) throw ValidationError("duplicate vertex identifier \"" + g.names_[v] + "\"");
  }
  const auto n = g.names_.size();
  std::vector<std::vector<VertexId>> lists(n);
  for (auto [u, v] : undirected_edges) {
    if (u >= n || v >= n) throw ValidationError("edge endpoint out of range");
    lists[u].push_back(v);
    if (u != v) lists[v].push_back(u);
  }
  std::size_t dupes = 0;
  g.offsets_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    auto& l = lists[v];
    std::sort(l.begin(), l.end());
    auto before = l.size();
    l.erase(std::unique(l.begin(), l.end()), l.end());
    dupes += before - l.size();
    g.offsets_[v + 1] = g.offsets_[v] + l.size();
    for (VertexId w : l) {
      g.adjacency_.push_back(w);
      g.sources_.push_back(v);
      if (w == v) ++g.loops_;
    }
  }
  if (collapsed != nullptr) *collapsed = dupes;
  return g;
}

std::size_t Graph::undirected_edge_count() const {
  return (adjacency_.size() - loops_) / 2 + loops_;
}

std::optional<VertexId> Graph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::require(std::string_view name) const {
  auto v = find(name);
  if (!v) throw ValidationError("unknown vertex \"" + std::string(name) + "\"");
  return *v;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<std::size_t> Graph::edge_index(VertexId u, VertexId v) const {
  if (u >= vertex_count()) return std::nullopt;
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return offsets_[u] + static_cast<std::size_t>(it - nb.begin());
}

std::pair<VertexId, VertexId> Graph::edge_at(std::size_t index) const {
  return {sources_.at(index), adjacency_.at(index)};
}

EdgeList Graph::undirected_edges() const {
  EdgeList out;
  for (std::size_t i = 0; i < adjacency_.size(); ++i) {
    if (sources_[i] <= adjacency_[i]) out.emplace_back(sources_[i], adjacency_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

SpanningTree SpanningTree::from_edges(const Graph& g, VertexId root, const EdgeList& edges) {
  const auto n = g.vertex_count();
  if (root >= n) throw ValidationError("tree root outside the graph");
  if (edges.size() + 1 != n) throw ValidationError("a spanning tree needs |V|-1 edges");
  std::vector<std::vector<VertexId>> adj(n);
  for (auto [u, v] : edges) {
    if (u == v || !g.has_edge(u, v)) throw ValidationError("tree edge is not a non-loop edge of the graph");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  SpanningTree t;
  t.root_ = root;
  t.parent_.assign(n, kNoParent);
  t.depth_.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::deque<VertexId> queue{root};
  seen[root] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : adj[u]) {
      if (seen[w]) continue;
      seen[w] = true;
      ++reached;
      t.parent_[w] = u;
      t.depth_[w] = t.depth_[u] + 1;
      queue.push_back(w);
    }
  }
  if (reached != n) throw ValidationError("tree edges do not span the graph");
  return t;
}

std::optional<VertexId> SpanningTree::parent(VertexId v) const {
  if (parent_.at(v) == kNoParent) return std::nullopt;
  return parent_[v];
}

bool SpanningTree::contains_edge(VertexId u, VertexId v) const {
  if (u >= parent_.size() || v >= parent_.size()) return false;
  return parent_[u] == v || parent_[v] == u;
}

EdgeList SpanningTree::edges() const {
  EdgeList out;
  for (VertexId v = 0; v < parent_.size(); ++v) {
    if (parent_[v] != kNoParent) out.emplace_back(std::min(v, parent_[v]), std::max(v, parent_[v]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

std::array<Square, 8> Square::orientations() const {
  std::array<Square, 8> out{};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t i = 0; i < 4; ++i) {
      out[r].v[i] = v[(r + i) % 4];
      out[4 + r].v[i] = v[(r + 4 - i) % 4];
    }
  }
  return out;
}

Square Square::canonical() const {
  auto all = orientations();
  return *std::min_element(all.begin(), all.end());
}

bool Square::valid_on(const Graph& g) const {
  for (std::size_t i = 0; i < 4; ++i) {
    if (!g.has_edge(v[i], v[(i + 1) % 4])) return false;
  }
  return v[0] != v[2] && v[1] != v[3];
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(g.vertex_count(), kUnset);
  std::size_t next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(u)) {
        if (label[w] == kUnset) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return label;
}

bool is_connected(const Graph& g) {
  std::size_t count = 0;
  connected_components(g, &count);
  return count <= 1;
}

TwoColoring is_bipartite(const Graph& g) {
  if (!is_connected(g)) throw ValidationError("bipartiteness test requires a connected graph");
  TwoColoring out;
  const auto n = g.vertex_count();
  if (n == 0) {
    out.bipartite = true;
    return out;
  }
  std::vector<int> color(n, -1);
  std::vector<VertexId> parent(n, 0);
  std::deque<VertexId> queue{0};
  color[0] = 0;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(u)) {
      if (color[w] < 0) {
        color[w] = 1 - color[u];
        parent[w] = u;
        queue.push_back(w);
      } else if (color[w] == color[u]) {
        // Odd closed walk: root..u, edge u-w, w..root.
        auto path_to_root = [&](VertexId x) {
          std::vector<VertexId> p{x};
          while (x != 0) {
            x = parent[x];
            p.push_back(x);
          }
          return p;
        };
        auto pu = path_to_root(u);
        auto pw = path_to_root(w);
        std::vector<VertexId> cyc(pu.rbegin(), pu.rend());
        cyc.insert(cyc.end(), pw.begin(), pw.end());
        out.bipartite = false;
        out.odd_cycle = std::move(cyc);
        return out;
      }
    }
  }
  out.bipartite = true;
  out.color = std::move(color);
  return out;
}

SpanningTree spanning_tree(const Graph& g, VertexId root) {
  const auto n = g.vertex_count();
  if (root >= n) throw ValidationError("unknown tree root");
  if (!is_connected(g)) throw ValidationError("spanning tree requires a connected graph");
  SpanningTree t;
  t.root_ = root;
  t.parent_.assign(n, SpanningTree::kNoParent);
  t.depth_.assign(n, 0);
  std::vector<bool> seen(n, false);
  seen[root] = true;
  std::deque<VertexId> queue{root};
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = true;
      t.parent_[w] = u;
      t.depth_[w] = t.depth_[u] + 1;
      queue.push_back(w);
    }
  }
  return t;
}

std::vector<Square> enumerate_squares(const Graph& g) {
  // Fix s0 as the lexicographically least vertex of the class, so only
  // walks with s0 <= s1, s2, s3 are generated; canonical() dedups the rest.
  std::vector<Square> out;
  const auto n = static_cast<VertexId>(g.vertex_count());
  for (VertexId s0 = 0; s0 < n; ++s0) {
    for (VertexId s1 : g.neighbors(s0)) {
      if (s1 < s0) continue;
      for (VertexId s2 : g.neighbors(s1)) {
        if (s2 < s0 || s2 == s0) continue;
        for (VertexId s3 : g.neighbors(s2)) {
          if (s3 < s0 || s3 == s1) continue;
          if (!g.has_edge(s3, s0)) continue;
          Square s{{s0, s1, s2, s3}};
          if (s.canonical() == s) out.push_back(s);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Graph cycle_graph(std::size_t n, std::string_view prefix) {
  std::vector<std::string> names;
  EdgeList edges;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::string(prefix) + std::to_string(i));
    edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
  }
  return Graph::from_edges(std::move(names), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<std::string> names;
  std::unordered_map<VertexId, VertexId> local;
  for (VertexId v : vertices) {
    local.emplace(v, static_cast<VertexId>(names.size()));
    names.push_back(g.name(v));
  }
  EdgeList edges;
  for (VertexId v : vertices) {
    for (VertexId w : g.neighbors(v)) {
      auto it = local.find(w);
      if (it != local.end() && v <= w) edges.emplace_back(local.at(v), it->second);
    }
  }
  return Graph::from_edges(std::move(names), edges);
}

}  // namespace hsk
