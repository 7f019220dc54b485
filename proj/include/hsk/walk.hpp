#pragma once

#include <span>
#include <vector>

#include "hsk/graph.hpp"

namespace hsk {

/// A walk p0 p1 ... pl on a graph. The vertex sequence is never empty; the
/// length-0 walk (p0) plays the role of the empty cycle at p0.
class Walk {
 public:
  Walk() = default;
  /// Validates adjacency of consecutive vertices against `g`.
  Walk(const Graph& g, std::vector<VertexId> vertices);
  /// Skips validation; for callers that build walks edge by edge.
  static Walk trusted(std::vector<VertexId> vertices);

  std::size_t length() const { return v_.size() - 1; }
  VertexId front() const { return v_.front(); }
  VertexId back() const { return v_.back(); }
  VertexId operator[](std::size_t i) const { return v_[i]; }
  const std::vector<VertexId>& vertices() const { return v_; }
  bool is_cycle() const { return front() == back(); }
  bool is_non_backtracking() const;

  friend auto operator<=>(const Walk&, const Walk&) = default;

 private:
  explicit Walk(std::vector<VertexId> vertices) : v_(std::move(vertices)) {}
  std::vector<VertexId> v_;
};

/// Removes backtracks x y x -> x until none are left (leftmost first).
Walk reduce(const Walk& p);
/// Concatenation followed by reduction; p must end where q starts.
Walk star(const Walk& p, const Walk& q);
Walk concat(const Walk& p, const Walk& q);
Walk inverse(const Walk& p);
/// The unique non-backtracking a -> b walk inside the tree.
Walk tree_path(const SpanningTree& t, VertexId a, VertexId b);
/// p0..pk ⊙ c ⊙ pk..pl; c must be a cycle at p_k.
Walk insert_cycle(const Walk& p, std::size_t k, const Walk& c);
/// The square as the closed walk s0 s1 s2 s3 s0.
Walk square_walk(const Square& s);

}  // namespace hsk
