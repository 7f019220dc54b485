#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "hsk/cover.hpp"

namespace hsk {

/// Rectangular pattern; cell (x, y) is column x of row y, stored row major.
struct Pattern {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<VertexId> cells;

  VertexId at(std::size_t x, std::size_t y) const { return cells[y * width + x]; }
  VertexId& at(std::size_t x, std::size_t y) { return cells[y * width + x]; }
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

struct Cell {
  std::size_t x = 0;
  std::size_t y = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct AdmissibilityCheck {
  bool ok = true;
  Cell first;   // first offending pair, in row-major scan order
  Cell second;
};

AdmissibilityCheck is_locally_admissible(const Graph& g, const Pattern& p);

/// Rows (s0,s1,s0), (s3,s2,s3), (s0,s1,s0).
Pattern counterexample_pattern(const Square& s);

struct Obstruction {
  Cell plaquette;       // top-left corner of the unit square that fails
  Cell cell;            // cell reached along two different routes
  VertexId by_column = 0;  // lift reached from the cell above
  VertexId by_row = 0;     // lift reached from the cell to the left
};

using LiftResult = std::variant<Pattern, Obstruction>;

/// Lifts row 0 from the corner, then every column downward, then checks
/// that horizontally adjacent lifts are adjacent. Throws ValidationError on
/// an inadmissible pattern or a bad corner, BudgetExceeded when a truncated
/// cover is too small.
LiftResult lift_pattern(const Cover& c, const Pattern& p, VertexId corner_lift);

/// Uniform choice at each cell among the vertices compatible with its left
/// and upper neighbors, backtracking on dead ends. Returns nullopt if no
/// admissible pattern of that size exists.
std::optional<Pattern> random_admissible_pattern(const Graph& g, std::size_t width, std::size_t height,
                                                 std::mt19937_64& rng);

/// Seed from HSK_SEED when set, otherwise `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback = 20240601);

}  // namespace hsk
