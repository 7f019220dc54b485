#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hsk/presentation.hpp"

namespace hsk {

/// Closed coset table of the trivial subgroup: a transitive right action of
/// the group on {0, ..., order-1}, coset 0 being the identity. Column 2g is
/// generator g, column 2g+1 its inverse.
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(std::size_t generators, std::vector<std::uint32_t> entries);

  std::size_t order() const { return cols_ == 0 ? 1 : entries_.size() / cols_; }
  std::size_t generator_count() const { return cols_ / 2; }
  std::uint32_t act(std::uint32_t coset, Letter l) const {
    return entries_[coset * cols_ + 2 * generator_of(l) + (l > 0 ? 0 : 1)];
  }
  std::uint32_t act(std::uint32_t coset, const Word& w) const;

  friend bool operator==(const CosetTable&, const CosetTable&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> entries_;
};

struct Finite {
  std::size_t order = 0;
  CosetTable table;
};

struct Unknown {
  std::size_t cosets_used = 0;  // peak number of cosets defined
  std::size_t budget = 0;
};

using EnumerationOutcome = std::variant<Finite, Unknown>;

inline bool is_finite(const EnumerationOutcome& o) { return std::holds_alternative<Finite>(o); }

constexpr std::size_t kDefaultMaxCosets = 1'000'000;

/// HLT enumeration with lookahead over the trivial subgroup. Finite(n)
/// means the group has order exactly n; the table is checked against every
/// relator at every coset before it is returned.
EnumerationOutcome enumerate(const Presentation& p, std::size_t max_cosets = kDefaultMaxCosets);

/// Permutation of the cosets induced by w: result[c] = c . w.
std::vector<std::uint32_t> action_of_word(const CosetTable& t, const Word& w);

/// Plain-text listing, one line per coset: "c: g->d g^-1->e ...".
std::string format_table(const CosetTable& t, const Presentation& p);

}  // namespace hsk
