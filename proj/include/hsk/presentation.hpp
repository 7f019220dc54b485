#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hsk/graph.hpp"

namespace hsk {

/// A letter is +(g+1) for generator g and -(g+1) for its inverse.
using Letter = int;
using Word = std::vector<Letter>;

inline std::size_t generator_of(Letter l) { return static_cast<std::size_t>(l > 0 ? l : -l) - 1; }
inline Letter letter(std::size_t g, bool inverse = false) {
  auto l = static_cast<Letter>(g + 1);
  return inverse ? -l : l;
}

Word inverse_word(const Word& w);
Word free_reduce(const Word& w);
/// Free reduction followed by cancellation across the ends.
Word cyclic_reduce(const Word& w);
/// Least word among all rotations of w and of its inverse; identifies
/// relators that generate the same normal closure.
Word canonical_relator(const Word& w);

/// Finite presentation <generators : relators>.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t generator_count() const { return generators.size(); }
  std::size_t total_length() const;
  /// Throws ValidationError on a letter outside the generator range.
  void validate() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Text form:
///   generators: a b
///   relator: a a b^-1
Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& p);
std::string format_word(const Presentation& p, const Word& w);

/// Generator name of the directed edge (u,v). Edge generators are named
/// "u>v"; graphs whose names would make that ambiguous fall back to "e<i>".
std::vector<std::string> edge_generator_names(const Graph& g);

/// <E_G : R_T(G)>: one generator per directed edge (CSR order), the tree
/// edges in both orientations, e.ē for each reverse pair and e.e for a loop.
Presentation fundamental_presentation(const Graph& g, const SpanningTree& t);
/// fundamental_presentation plus e0e1e2e3 for every canonical square.
Presentation square_presentation(const Graph& g, const SpanningTree& t);
/// Edge word of the closed or open walk given by consecutive vertices.
Word edge_word(const Graph& g, const std::vector<VertexId>& vertices);

/// Disjoint union of the presentations. Clashing names of q get the
/// smallest numeric suffix that makes them unique.
Presentation free_product(const Presentation& p, const Presentation& q);

struct FundamentalClass {
  std::size_t free_rank = 0;  // k
  std::size_t loops = 0;      // n
  friend bool operator==(const FundamentalClass&, const FundamentalClass&) = default;
};
/// pi_1(G) = F_k * (Z/2)^{*n} with k = |E| - |V| - n + 1, |E| counting
/// undirected edges and loops once each.
FundamentalClass classify_fundamental(const Graph& g);

struct GraphUnion {
  Graph graph;
  /// For each input graph, the union index of each of its vertices.
  std::vector<std::vector<VertexId>> pieces;
};
/// Union of graphs identified by vertex name.
GraphUnion graph_union(const std::vector<Graph>& gs);

struct Wedge : GraphUnion {
  VertexId shared = 0;
};
/// Glues the graphs at the vertex named `shared`, which every input must
/// contain. Any other common vertex name is an error.
Wedge wedge_sum(const std::vector<Graph>& gs, std::string_view shared);

/// Spanning tree of `whole` whose restriction to every piece (given as
/// vertex index sets of `whole`) spans that piece. Throws ValidationError
/// when greedy extension cannot achieve it.
SpanningTree extend_tree(const Graph& whole, const std::vector<std::vector<VertexId>>& pieces,
                         VertexId root = 0);
/// Square-group presentation of the union assembled piecewise: the relators
/// of each piece plus the squares of the union that lie in no single piece.
Presentation van_kampen_presentation(const Graph& whole,
                                     const std::vector<std::vector<VertexId>>& pieces,
                                     const SpanningTree& t);
/// Same, over the union of `gs` with a tree from extend_tree.
Presentation van_kampen_presentation(const std::vector<Graph>& gs);

}  // namespace hsk
