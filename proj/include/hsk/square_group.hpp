#pragma once

#include <optional>
#include <string>

#include "hsk/abelian.hpp"
#include "hsk/coset_enum.hpp"
#include "hsk/simplify.hpp"

namespace hsk {

/// Everything derived from the square-group presentation of a graph for a
/// fixed spanning tree: the raw presentation over directed edges, its
/// simplification with generator images, and the enumeration outcome.
struct SquareGroup {
  SpanningTree tree;
  Presentation raw;
  Simplified simplified;
  EnumerationOutcome outcome;

  const CosetTable* table() const {
    auto* f = std::get_if<Finite>(&outcome);
    return f == nullptr ? nullptr : &f->table;
  }
  /// Image of a walk's edge word in the simplified generators.
  Word image_of_walk(const Graph& g, const std::vector<VertexId>& vertices) const;
};

SquareGroup compute_square_group(const Graph& g, VertexId tree_root = 0,
                                 std::size_t max_cosets = kDefaultMaxCosets,
                                 const SimplifyOptions& opt = {});

EnumerationOutcome order_of_square_group(const Graph& g, std::size_t max_cosets = kDefaultMaxCosets);

/// A proof that a presented group is infinite, when one of the cheap
/// certificates applies: positive free rank of the abelianization, or a
/// splitting into at least two nontrivial free factors.
struct InfinitenessCertificate {
  enum class Method { AbelianFreeRank, FreeProduct };
  Method method = Method::AbelianFreeRank;
  std::string detail;
};

std::optional<InfinitenessCertificate> certify_infinite(const Presentation& p,
                                                        std::size_t factor_cosets = 100'000);

}  // namespace hsk
