#pragma once

#include <vector>

#include "hsk/presentation.hpp"

namespace hsk {

struct SimplifyOptions {
  /// Depth of the rewriting search that looks for redundant relators.
  std::size_t rewrite_depth = 4;
  /// Per-relator cap on rewriting states.
  std::size_t rewrite_states = 2000;
  /// Eliminations stop once the total relator length would exceed this.
  std::size_t max_total_length = 1u << 22;
};

/// Result of Tietze simplification. images[g] expresses original generator
/// g as a word in the surviving generators; it realizes the isomorphism
/// from the input group onto the simplified one.
struct Simplified {
  Presentation presentation;
  std::vector<Word> images;
};

Simplified simplify(const Presentation& p, const SimplifyOptions& opt = {});

/// Translates a word in the original generators through `images`.
Word substitute(const Word& w, const std::vector<Word>& images);

}  // namespace hsk
