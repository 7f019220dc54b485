#pragma once

#include <cstdint>
#include <vector>

#include "hsk/graph.hpp"

namespace hsk {

/// Compressed adjacency lists, the working format for large graphs.
struct Csr {
  std::vector<std::size_t> offsets{0};
  std::vector<std::uint32_t> targets;

  std::size_t vertex_count() const { return offsets.size() - 1; }
  std::size_t edge_entries() const { return targets.size(); }
};

Csr csr_of(const Graph& g);

constexpr std::size_t kDefaultWalkCap = 500'000;

/// G_n: the walks of length n on the base, adjacent when pointwise adjacent.
/// Walks are numbered in lexicographic order of their vertex sequences.
class StripGraph {
 public:
  /// Throws BudgetExceeded (stating the required count) above `walk_cap`.
  static StripGraph build(const Graph& g, std::size_t n, std::size_t walk_cap = kDefaultWalkCap);
  /// Number of walks of length n, saturating at UINT64_MAX.
  static std::uint64_t walk_count(const Graph& g, std::size_t n);

  std::size_t length() const { return n_; }
  std::size_t vertex_count() const { return adjacency_.vertex_count(); }
  const Csr& adjacency() const { return adjacency_; }
  std::vector<VertexId> walk(std::uint64_t rank) const;
  std::uint64_t rank(const std::vector<VertexId>& walk) const;
  /// Materializes G_n as a Graph with vertices named "p0/p1/.../pn".
  Graph to_graph() const;

 private:
  Graph base_;
  std::size_t n_ = 0;
  // counts_[k][v]: walks of length k starting at v.
  std::vector<std::vector<std::uint64_t>> counts_;
  // before_[k][e]: sum of counts_[k] over the neighbors preceding the
  // target of directed edge e in its source's adjacency list.
  std::vector<std::vector<std::uint64_t>> before_;
  std::vector<std::uint64_t> start_offset_;
  Csr adjacency_;
};

enum class DiameterMode { Exact, Heuristic, Auto };

struct DiameterResult {
  std::size_t value = 0;
  bool exact = true;
  bool connected = true;
};

constexpr std::size_t kExactDiameterCap = 50'000;

/// Exact mode: 64-source bit-parallel BFS from every vertex. Heuristic
/// mode: repeated farthest-vertex sweeps, a lower bound flagged inexact.
/// Auto picks exact up to `exact_cap` vertices. A disconnected graph
/// reports the largest component diameter.
DiameterResult diameter(const Csr& g, DiameterMode mode = DiameterMode::Auto,
                        std::size_t exact_cap = kExactDiameterCap, unsigned threads = 0);
DiameterResult diameter(const Graph& g, DiameterMode mode = DiameterMode::Auto,
                        std::size_t exact_cap = kExactDiameterCap);

}  // namespace hsk
