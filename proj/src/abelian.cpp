#include "hsk/abelian.hpp"

#include <algorithm>
#include <cstdlib>

namespace hsk {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in Smith normal form");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw Error("integer overflow in Smith normal form");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in Smith normal form");
  return r;
}

std::int64_t abs64(std::int64_t x) {
  if (x == INT64_MIN) throw Error("integer overflow in Smith normal form");
  return x < 0 ? -x : x;
}

}  // namespace

SmithForm smith_normal_form(IntMatrix a, std::size_t cols) {
  SmithForm out;
  const std::size_t m = a.size();
  const std::size_t n = cols;
  out.rows = m;
  out.cols = n;
  for (auto& row : a) {
    if (row.size() != n) throw ValidationError("ragged matrix");
  }
  out.v.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out.v[i][i] = 1;
  auto& v = out.v;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : v) std::swap(row[x], row[y]);
  };
  // col_j -= q * col_t
  auto sub_col = [&](std::size_t j, std::size_t t, std::int64_t q) {
    if (q == 0) return;
    for (auto& row : a) row[j] = checked_sub(row[j], checked_mul(q, row[t]));
    for (auto& row : v) row[j] = checked_sub(row[j], checked_mul(q, row[t]));
  };
  auto sub_row = [&](std::size_t i, std::size_t t, std::int64_t q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < n; ++j) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[t][j]));
  };

  const std::size_t limit = std::min(m, n);
  for (std::size_t t = 0; t < limit; ++t) {
    // Smallest nonzero entry of the remaining block becomes the pivot.
    std::size_t pi = m, pj = n;
    std::int64_t best = 0;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (a[i][j] != 0 && (best == 0 || abs64(a[i][j]) < best)) {
          best = abs64(a[i][j]);
          pi = i;
          pj = j;
        }
      }
    }
    if (best == 0) break;
    std::swap(a[t], a[pi]);
    swap_cols(t, pj);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        sub_row(i, t, a[i][t] / a[t][t]);
        if (a[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        sub_col(j, t, a[t][j] / a[t][t]);
        if (a[t][j] != 0) dirty = true;
      }
      if (dirty) {
        // A remainder smaller than the pivot is left; bring it to (t,t).
        std::size_t bi = t, bj = t;
        std::int64_t b = abs64(a[t][t]);
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a[i][t] != 0 && abs64(a[i][t]) < b) { b = abs64(a[i][t]); bi = i; bj = t; }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[t][j] != 0 && abs64(a[t][j]) < b) { b = abs64(a[t][j]); bi = t; bj = j; }
        }
        std::swap(a[t], a[bi]);
        swap_cols(t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility of the block.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == m) break;
      for (std::size_t j = 0; j < n; ++j) a[t][j] = checked_add(a[t][j], a[bad][j]);
    }
    if (a[t][t] < 0) {
      for (std::size_t j = 0; j < n; ++j) a[t][j] = -a[t][j];
    }
    out.diagonal.push_back(a[t][t]);
  }
  return out;
}

IntMatrix relator_matrix(const Presentation& p) {
  IntMatrix a;
  for (const auto& r : p.relators) {
    std::vector<std::int64_t> row(p.generator_count(), 0);
    for (Letter l : r) row.at(generator_of(l)) += l > 0 ? 1 : -1;
    if (std::any_of(row.begin(), row.end(), [](std::int64_t x) { return x != 0; })) a.push_back(std::move(row));
  }
  return a;
}

AbelianInvariants abelianization(const Presentation& p) {
  auto snf = smith_normal_form(relator_matrix(p), p.generator_count());
  AbelianInvariants out;
  out.free_rank = p.generator_count() - snf.diagonal.size();
  for (auto d : snf.diagonal) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

std::vector<std::int64_t> elementary_divisors(const std::vector<std::int64_t>& invariant_factors) {
  std::vector<std::int64_t> out;
  for (auto d : invariant_factors) {
    std::int64_t x = d;
    for (std::int64_t q = 2; q * q <= x; ++q) {
      if (x % q != 0) continue;
      std::int64_t pp = 1;
      while (x % q == 0) {
        x /= q;
        pp *= q;
      }
      out.push_back(pp);
    }
    if (x > 1) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_invariants(const AbelianInvariants& a) {
  std::string out;
  if (a.free_rank > 0) out = a.free_rank == 1 ? "Z" : "Z^" + std::to_string(a.free_rank);
  for (auto d : a.torsion) {
    if (!out.empty()) out += " x ";
    out += "Z/" + std::to_string(d);
  }
  return out.empty() ? "1" : out;
}

RowLattice::RowLattice(const Presentation& p)
    : snf_(smith_normal_form(relator_matrix(p), p.generator_count())) {}

RowLattice::RowLattice(const IntMatrix& a, std::size_t cols) : snf_(smith_normal_form(a, cols)) {}

bool RowLattice::contains(const std::vector<std::int64_t>& x) const {
  if (x.size() != snf_.cols) throw ValidationError("lattice vector has the wrong dimension");
  for (std::size_t j = 0; j < snf_.cols; ++j) {
    std::int64_t y = 0;
    for (std::size_t i = 0; i < snf_.cols; ++i) {
      if (x[i] != 0) y = checked_add(y, checked_mul(x[i], snf_.v[i][j]));
    }
    if (j < snf_.diagonal.size()) {
      if (y % snf_.diagonal[j] != 0) return false;
    } else if (y != 0) {
      return false;
    }
  }
  return true;
}

bool RowLattice::contains_word(const Word& w) const {
  std::vector<std::int64_t> x(snf_.cols, 0);
  for (Letter l : w) x.at(generator_of(l)) += l > 0 ? 1 : -1;
  return contains(x);
}

}  // namespace hsk
