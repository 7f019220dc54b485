#pragma once

#include <cstdint>
#include <vector>

#include "hsk/presentation.hpp"

namespace hsk {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Smith normal form D = U A V of an integer matrix. Only V is kept, which
/// is what the lattice membership test needs. Arithmetic is overflow
/// checked; an overflow raises Error.
struct SmithForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> diagonal;  // d_0 | d_1 | ... , all positive
  IntMatrix v;                         // cols x cols, unimodular
};

SmithForm smith_normal_form(IntMatrix a, std::size_t cols);

/// Exponent-sum matrix: one row per relator, one column per generator.
IntMatrix relator_matrix(const Presentation& p);

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;  // invariant factors > 1, each dividing the next

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool infinite() const { return free_rank > 0; }
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

AbelianInvariants abelianization(const Presentation& p);
/// Prime-power decomposition of the torsion part, sorted: [6] -> [2, 3].
std::vector<std::int64_t> elementary_divisors(const std::vector<std::int64_t>& invariant_factors);
std::string format_invariants(const AbelianInvariants& a);

/// Decides whether an integer vector lies in the row lattice of the matrix
/// the Smith form was computed from.
class RowLattice {
 public:
  explicit RowLattice(const Presentation& p);
  RowLattice(const IntMatrix& a, std::size_t cols);
  bool contains(const std::vector<std::int64_t>& x) const;
  /// Image of a word of the presentation in the abelianization.
  bool contains_word(const Word& w) const;

 private:
  SmithForm snf_;
};

}  // namespace hsk
