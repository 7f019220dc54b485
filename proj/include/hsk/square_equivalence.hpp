#pragma once

#include <vector>

#include "hsk/abelian.hpp"
#include "hsk/square_group.hpp"
#include "hsk/walk.hpp"

namespace hsk {

/// One differ-by-a-square move between neighboring walks of a chain.
/// Forward: next = reduce(insert_cycle(prev, position, square)).
/// Backward: prev = reduce(insert_cycle(next, position, square)).
struct SquareMove {
  std::size_t position = 0;
  Square square;  // oriented so that square[0] is the attachment vertex
  bool forward = true;
};

Walk apply_square_move(const Walk& p, std::size_t position, const Square& s);

struct SquareEquivalence {
  enum class Verdict { Equivalent, Inequivalent, Unknown };
  enum class Certificate { None, RewriteChain, CosetTable, AbelianLattice, Exhaustion };

  Verdict verdict = Verdict::Unknown;
  Certificate certificate = Certificate::None;
  std::vector<Walk> chain;  // walks[0] = p, walks.back() = q
  std::vector<SquareMove> moves;
};

struct SquareEquivalenceOptions {
  std::size_t max_moves = 64;
  std::size_t max_states = 50'000;
  /// Intermediate walks may be at most this much longer than p and q.
  std::size_t length_slack = 8;
  const SquareGroup* group = nullptr;        // closed table when available
  const RowLattice* lattice = nullptr;       // over group->simplified, or raw edges
  bool lattice_over_edges = false;           // lattice columns are directed edges
};

/// Decides p ~ q (same endpoints). A closed coset table or the abelian
/// lattice that separates p and q answers Inequivalent at once, as does a
/// graph without squares. Otherwise a bidirectional search over square moves
/// looks for a chain; when it gives up, a table that identifies p and q
/// still answers Equivalent, without a chain.
SquareEquivalence square_equivalent(const Graph& g, const Walk& p, const Walk& q,
                                    const SquareEquivalenceOptions& opt = {});

/// Re-applies every move of an Equivalent chain and checks it ends at q.
bool replay_chain(const SquareEquivalence& r, const Walk& p, const Walk& q);

}  // namespace hsk
