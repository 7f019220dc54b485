#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsk/square_group.hpp"
#include "hsk/walk.hpp"

namespace hsk {

/// A graph `total` with a projection onto `base`.
///
/// Exact covers are local isomorphisms everywhere. Truncated balls carry a
/// depth per total vertex and are only guaranteed to be locally isomorphic
/// at vertices of depth < radius; operations refuse to read past that.
struct Cover {
  enum class Provenance { Exact, TruncatedBall };

  Graph total;
  Graph base;
  std::vector<VertexId> projection;
  Provenance provenance = Provenance::Exact;
  std::size_t radius = 0;
  std::vector<std::size_t> depth;  // truncated balls only
  VertexId basepoint = 0;

  bool exact() const { return provenance == Provenance::Exact; }
  bool verified(VertexId v) const { return exact() || depth.at(v) < radius; }
  std::vector<VertexId> fiber(VertexId base_vertex) const;
  /// The neighbor of v lying over base vertex b; requires verified(v).
  std::optional<VertexId> neighbor_over(VertexId v, VertexId b) const;
};

/// The identity cover of g.
Cover identity_cover(const Graph& g);

struct CoverCheck {
  bool ok = true;
  std::optional<VertexId> vertex;  // total vertex where the check failed
  std::string reason;
};

/// Projection is a homomorphism, and each verified vertex's neighborhood
/// maps bijectively onto the neighborhood of its image.
CoverCheck check_covering_map(const Cover& c);

/// Unique lift of p from `start`. Throws ValidationError if start is not over
/// p[0], BudgetExceeded when the lift would leave the verified region.
Walk lift_walk(const Cover& c, const Walk& p, VertexId start);

/// Ball of radius r in the universal cover: non-backtracking walks from
/// base, named by their vertex names joined with '/'.
Cover universal_cover_ball(const Graph& g, VertexId base, std::size_t radius,
                           std::size_t max_vertices = 2'000'000);

struct SquareCoverOptions {
  VertexId tree_root = 0;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t fallback_radius = 4;
  std::size_t rewrite_depth = 64;
  std::size_t max_vertices = 200'000;
};

/// Exact square cover built on a closed coset table of the square group,
/// vertex (c, v) at index c*|V| + v. Requires a Finite outcome in `sg`.
Cover exact_square_cover(const Graph& g, const SquareGroup& sg);

/// Exact cover when the enumeration closes; otherwise the truncated ball of
/// the square cover obtained by merging walks found square equivalent.
Cover square_cover(const Graph& g, const SquareCoverOptions& opt = {});
Cover square_cover(const Graph& g, const SquareGroup& sg, const SquareCoverOptions& opt);

struct SquareLiftCheck {
  bool ok = true;
  std::optional<Square> square;   // orientation that failed to close
  std::optional<VertexId> start;  // total vertex the lift started from
};

/// Every orientation of every base square, lifted from every (verified)
/// fiber point over its first vertex, closes up.
SquareLiftCheck check_square_lifting(const Cover& c);

/// The deck transformation sending v to w, if one exists.
std::optional<std::vector<VertexId>> deck_transformation(const Cover& c, VertexId v, VertexId w);

}  // namespace hsk
