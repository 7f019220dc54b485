#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hsk {

using VertexId = std::uint32_t;
using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured search or size budget ran out before an answer was found.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (graph, presentation, pattern or cover files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a precondition (disconnected graph,
/// unknown vertex, endpoint mismatch, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Finite undirected graph with optional self-loops.
///
/// Vertices are opaque names kept in declaration order; that order drives
/// every tie-break in the library. Adjacency is stored as a CSR array with
/// each neighbor list sorted by vertex index. A self-loop (a,a) appears
/// once in the list of a and is its own reverse edge, so the number of
/// directed edges is `2 * non-loop edges + loops`.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from vertex names and unordered edges. Parallel edges
  /// collapse; the number of collapsed duplicates is stored in
  /// `*collapsed` when given.
  static Graph from_edges(std::vector<std::string> names,
                          const EdgeList& undirected_edges,
                          std::size_t* collapsed = nullptr);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t directed_edge_count() const { return adjacency_.size(); }
  std::size_t undirected_edge_count() const;
  std::size_t loop_count() const { return loops_; }

  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  VertexId require(std::string_view name) const;

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(VertexId u, VertexId v) const;
  bool has_loop(VertexId v) const { return has_edge(v, v); }

  /// Index of the directed edge (u,v) in [0, directed_edge_count()).
  /// Directed edges are ordered by source, then by target.
  std::optional<std::size_t> edge_index(VertexId u, VertexId v) const;
  std::pair<VertexId, VertexId> edge_at(std::size_t index) const;

  /// Unordered edges as (u,v) with u <= v, sorted.
  EdgeList undirected_edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
  std::vector<VertexId> sources_;
  std::size_t loops_ = 0;
};

/// Spanning tree stored as a parent array rooted at `root`.
class SpanningTree {
 public:
  SpanningTree() = default;

  /// Validates that `edges` (unordered pairs of `g`) form a spanning tree.
  static SpanningTree from_edges(const Graph& g, VertexId root, const EdgeList& edges);

  VertexId root() const { return root_; }
  std::size_t vertex_count() const { return parent_.size(); }
  std::optional<VertexId> parent(VertexId v) const;
  std::size_t depth(VertexId v) const { return depth_.at(v); }
  bool contains_edge(VertexId u, VertexId v) const;
  /// Unordered tree edges (u <= v), sorted.
  EdgeList edges() const;

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;

 private:
  friend SpanningTree spanning_tree(const Graph&, VertexId);
  static constexpr VertexId kNoParent = static_cast<VertexId>(-1);
  VertexId root_ = 0;
  std::vector<VertexId> parent_;
  std::vector<std::size_t> depth_;
};

/// A square s0 s1 s2 s3 s0: a closed non-backtracking walk of length four.
struct Square {
  std::array<VertexId, 4> v{};

  VertexId operator[](std::size_t i) const { return v[i % 4]; }
  /// The eight representatives obtained by rotation and reversal.
  std::array<Square, 8> orientations() const;
  Square canonical() const;
  /// True iff consecutive vertices are adjacent and s0 != s2, s1 != s3.
  bool valid_on(const Graph& g) const;

  friend auto operator<=>(const Square&, const Square&) = default;
};

struct TwoColoring {
  bool bipartite = false;
  std::vector<int> color;          // 0/1 per vertex when bipartite
  std::vector<VertexId> odd_cycle; // closed walk of odd length otherwise
};

bool is_connected(const Graph& g);
/// Component label per vertex, labels numbered in order of first vertex.
std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count = nullptr);
/// Requires a connected graph.
TwoColoring is_bipartite(const Graph& g);
/// Breadth-first tree from `root`, neighbors visited in vertex order.
SpanningTree spanning_tree(const Graph& g, VertexId root = 0);
/// One canonical representative per rotation/reversal class, sorted.
std::vector<Square> enumerate_squares(const Graph& g);

/// Undirected cycle graph on names prefix0..prefix{n-1}; n >= 3.
Graph cycle_graph(std::size_t n, std::string_view prefix = "v");
/// Graph with the given vertices and the edges of `g` restricted to them.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

}  // namespace hsk
