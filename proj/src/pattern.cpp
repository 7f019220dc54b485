#include "hsk/pattern.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace hsk {

AdmissibilityCheck is_locally_admissible(const Graph& g, const Pattern& p) {
  AdmissibilityCheck out;
  if (p.cells.size() != p.width * p.height) throw ValidationError("pattern cell count does not match its size");
  for (VertexId v : p.cells) {
    if (v >= g.vertex_count()) throw ValidationError("pattern cell outside the graph");
  }
  for (std::size_t y = 0; y < p.height; ++y) {
    for (std::size_t x = 0; x < p.width; ++x) {
      if (x + 1 < p.width && !g.has_edge(p.at(x, y), p.at(x + 1, y))) {
        return {false, {x, y}, {x + 1, y}};
      }
      if (y + 1 < p.height && !g.has_edge(p.at(x, y), p.at(x, y + 1))) {
        return {false, {x, y}, {x, y + 1}};
      }
    }
  }
  return out;
}

Pattern counterexample_pattern(const Square& s) {
  Pattern p;
  p.width = 3;
  p.height = 3;
  p.cells = {s[0], s[1], s[0], s[3], s[2], s[3], s[0], s[1], s[0]};
  return p;
}

namespace {

VertexId step(const Cover& c, VertexId from, VertexId over) {
  if (!c.verified(from)) throw BudgetExceeded("pattern lift leaves the verified radius of the truncated cover");
  auto nb = c.neighbor_over(from, over);
  if (!nb) throw ValidationError("pattern step has no lift; projection is not a cover here");
  return *nb;
}

}  // namespace

LiftResult lift_pattern(const Cover& c, const Pattern& p, VertexId corner_lift) {
  auto adm = is_locally_admissible(c.base, p);
  if (!adm.ok) throw ValidationError("pattern is not locally admissible");
  if (p.cells.empty()) return p;
  if (corner_lift >= c.total.vertex_count() || c.projection[corner_lift] != p.at(0, 0)) {
    throw ValidationError("corner lift does not lie over the corner cell");
  }
  Pattern out = p;
  out.at(0, 0) = corner_lift;
  for (std::size_t x = 1; x < p.width; ++x) out.at(x, 0) = step(c, out.at(x - 1, 0), p.at(x, 0));
  for (std::size_t x = 0; x < p.width; ++x) {
    for (std::size_t y = 1; y < p.height; ++y) out.at(x, y) = step(c, out.at(x, y - 1), p.at(x, y));
  }
  for (std::size_t y = 1; y < p.height; ++y) {
    for (std::size_t x = 1; x < p.width; ++x) {
      VertexId by_row = step(c, out.at(x - 1, y), p.at(x, y));
      if (by_row != out.at(x, y)) return Obstruction{{x - 1, y - 1}, {x, y}, out.at(x, y), by_row};
    }
  }
  return out;
}

std::optional<Pattern> random_admissible_pattern(const Graph& g, std::size_t width, std::size_t height,
                                                 std::mt19937_64& rng) {
  Pattern p;
  p.width = width;
  p.height = height;
  const std::size_t n = width * height;
  p.cells.assign(n, 0);
  if (n == 0) return p;
  if (g.vertex_count() == 0) return std::nullopt;
  std::vector<std::vector<VertexId>> options(n);
  std::vector<std::size_t> next(n, 0);
  std::size_t i = 0;
  std::size_t steps = 0;
  bool entering = true;
  while (i < n) {
    if (++steps > 1'000'000) return std::nullopt;
    if (entering) {
      const std::size_t x = i % width;
      const std::size_t y = i / width;
      auto& opt = options[i];
      opt.clear();
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (x > 0 && !g.has_edge(p.at(x - 1, y), v)) continue;
        if (y > 0 && !g.has_edge(p.at(x, y - 1), v)) continue;
        opt.push_back(v);
      }
      std::shuffle(opt.begin(), opt.end(), rng);
      next[i] = 0;
    }
    if (next[i] < options[i].size()) {
      p.cells[i] = options[i][next[i]++];
      ++i;
      entering = true;
    } else {
      if (i == 0) return std::nullopt;
      --i;
      entering = false;
    }
  }
  return p;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("HSK_SEED");
  if (s == nullptr || *s == '\0') return fallback;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    return fallback;
  }
}

}  // namespace hsk
