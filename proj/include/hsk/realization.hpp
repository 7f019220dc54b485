#pragma once

#include <string>
#include <vector>

#include "hsk/coset_enum.hpp"
#include "hsk/abelian.hpp"
#include "hsk/graph.hpp"
#include "hsk/presentation.hpp"

namespace hsk {

/// Planar graph with a designated border cycle whose internal faces are
/// exactly the listed squares.
struct FlatQuadrangulation {
  Graph graph;
  /// Border cycle in order; empty once edges have been peeled away.
  std::vector<VertexId> border;
  std::vector<Square> faces;  // canonical, sorted
};

/// The wheel quadrangulation of the n-cycle: border b_0..b_{n-1}, inner
/// ring i_0..i_{n-1} with b_k-i_k and i_k-i_{k+1}, hub joined to even i_k.
/// Vertex names default to "b<k>", "i<k>" and "hub".
FlatQuadrangulation quadrangulate_cycle(std::size_t n);

/// Edges lying on exactly one internal face.
EdgeList boundary_edges(const FlatQuadrangulation& q);

/// Removes an edge that lies on the external face and exactly one
/// internal face, together with that face.
FlatQuadrangulation peel_boundary_edge(const FlatQuadrangulation& q, VertexId u, VertexId v);

/// Checks the face-list invariants: every face is a square of the graph,
/// every square of the graph is a face, every edge is on at most two faces.
bool check_quadrangulation(const FlatQuadrangulation& q, std::string* why = nullptr);

/// Free reduction, then repeated removal of generators that occur alone as
/// a relator (deleting their other occurrences), dropping empty relators.
Presentation reduce_presentation_input(const Presentation& p);

struct RealizationConfig {
  std::size_t petal = 6;  // N: even, >= 6
  enum class Rungs { Zero, Alternating } nu = Rungs::Zero;
};

struct RealizationCounts {
  std::size_t base = 1;
  std::size_t petals = 0;
  std::size_t relation_cycles = 0;
  std::size_t fillers = 0;
  std::size_t total() const { return base + petals + relation_cycles + fillers; }
};

struct Realization {
  Graph graph;
  RealizationCounts counts;
  /// -1 for the base vertex and petals, else the index of the relator
  /// whose cycle or filler the vertex belongs to.
  std::vector<int> piece;
};

/// Graph whose square group is presented by p. The input must already be
/// reduced (see reduce_presentation_input).
Realization realize_detailed(const Presentation& p, const RealizationConfig& cfg = {});
Graph realize(const Presentation& p, const RealizationConfig& cfg = {});

/// True iff every square of the realization lies in one relator piece
/// (together with the shared petals).
bool squares_within_pieces(const Realization& r, Square* witness = nullptr);

/// g with a self-loop added at its first vertex. Sets *warning when g is
/// not bipartite, in which case the free-product identity need not hold.
Graph add_self_loop(const Graph& g, std::string* warning = nullptr);

struct RealizationReport {
  EnumerationOutcome presented;
  EnumerationOutcome realized;
  AbelianInvariants presented_ab;
  AbelianInvariants realized_ab;
  bool consistent = false;
  std::string summary;  // "consistent" or "REFUTED: ..."
};

RealizationReport verify_realization(const Presentation& p, const Graph& g,
                                     std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace hsk
