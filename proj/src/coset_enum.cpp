#include "hsk/coset_enum.hpp"

#include <algorithm>

namespace hsk {

CosetTable::CosetTable(std::size_t generators, std::vector<std::uint32_t> entries)
    : cols_(2 * generators), entries_(std::move(entries)) {
  if (cols_ != 0 && entries_.size() % cols_ != 0) throw ValidationError("coset table size mismatch");
}

std::uint32_t CosetTable::act(std::uint32_t coset, const Word& w) const {
  for (Letter l : w) coset = act(coset, l);
  return coset;
}

namespace {

// Upper bound on table entries, independent of the coset budget, so that a
// presentation with many generators cannot exhaust memory.
constexpr std::size_t kMaxEntries = std::size_t{1} << 26;

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t max_cosets) : cols_(2 * p.generator_count()) {
    capacity_ = std::min(max_cosets, std::max<std::size_t>(1, kMaxEntries / cols_));
    for (const auto& r : p.relators) {
      Word c = cyclic_reduce(r);
      if (c.empty()) continue;
      std::vector<int> w;
      for (Letter l : c) w.push_back(static_cast<int>(2 * generator_of(l) + (l > 0 ? 0 : 1)));
      rels_.push_back(std::move(w));
    }
    table_.assign(cols_, -1);
    parent_.push_back(0);
    next_ = 1;
    live_ = 1;
    peak_ = 1;
  }

  EnumerationOutcome run() {
    std::size_t alpha = 0;
    while (alpha < next_) {
      if (parent_[alpha] == static_cast<int>(alpha)) {
        if (!process(alpha)) {
          lookahead();
          alpha = compact(alpha);
          if (next_ >= capacity_) return Unknown{peak_, capacity_};
          continue;
        }
      }
      ++alpha;
    }
    compact(0);
    return Finite{live_, export_table()};
  }

 private:
  int& at(std::size_t c, int x) { return table_[c * cols_ + static_cast<std::size_t>(x)]; }
  static int inv(int x) { return x ^ 1; }

  bool define(std::size_t alpha, int x) {
    if (next_ >= capacity_) return false;
    std::size_t beta = next_++;
    table_.resize(next_ * cols_, -1);
    parent_.push_back(static_cast<int>(beta));
    ++live_;
    peak_ = std::max(peak_, next_);
    at(alpha, x) = static_cast<int>(beta);
    at(beta, inv(x)) = static_cast<int>(alpha);
    return true;
  }

  int rep(int k) {
    int l = k;
    while (parent_[static_cast<std::size_t>(l)] != l) l = parent_[static_cast<std::size_t>(l)];
    while (parent_[static_cast<std::size_t>(k)] != l) {
      int next = parent_[static_cast<std::size_t>(k)];
      parent_[static_cast<std::size_t>(k)] = l;
      k = next;
    }
    return l;
  }

  void merge(int k, int l) {
    int a = rep(k);
    int b = rep(l);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    --live_;
    queue_.push_back(b);
  }

  void coincidence(int a, int b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      auto g = static_cast<std::size_t>(queue_[i]);
      for (int x = 0; x < static_cast<int>(cols_); ++x) {
        int d = at(g, x);
        if (d < 0) continue;
        at(static_cast<std::size_t>(d), inv(x)) = -1;
        int mu = rep(static_cast<int>(g));
        int nu = rep(d);
        int& mux = at(static_cast<std::size_t>(mu), x);
        int& nux = at(static_cast<std::size_t>(nu), inv(x));
        if (mux >= 0) {
          merge(nu, mux);
        } else if (nux >= 0) {
          merge(mu, nux);
        } else {
          mux = nu;
          nux = mu;
        }
      }
    }
    queue_.clear();
  }

  // Scans w at alpha, defining cosets when `fill`; returns false when a
  // definition was needed but the table is full.
  bool scan(std::size_t alpha, const std::vector<int>& w, bool fill) {
    int f = static_cast<int>(alpha);
    int b = static_cast<int>(alpha);
    std::size_t i = 0;
    std::size_t j = w.size();  // exclusive upper end
    for (;;) {
      while (i < j && at(static_cast<std::size_t>(f), w[i]) >= 0) f = at(static_cast<std::size_t>(f), w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j > i && at(static_cast<std::size_t>(b), inv(w[j - 1])) >= 0) {
        b = at(static_cast<std::size_t>(b), inv(w[j - 1]));
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return true;
      }
      if (j == i + 1) {
        at(static_cast<std::size_t>(f), w[i]) = b;
        at(static_cast<std::size_t>(b), inv(w[i])) = f;
        return true;
      }
      if (!fill) return true;
      if (!define(static_cast<std::size_t>(f), w[i])) return false;
    }
  }

  bool process(std::size_t alpha) {
    for (const auto& w : rels_) {
      if (!scan(alpha, w, true)) return false;
      if (parent_[alpha] != static_cast<int>(alpha)) return true;
    }
    for (int x = 0; x < static_cast<int>(cols_); ++x) {
      if (at(alpha, x) < 0 && !define(alpha, x)) return false;
    }
    return true;
  }

  void lookahead() {
    for (std::size_t beta = 0; beta < next_; ++beta) {
      for (const auto& w : rels_) {
        if (parent_[beta] != static_cast<int>(beta)) break;
        scan(beta, w, false);
      }
    }
  }

  // Renumbers live cosets in order; returns the new index of the first
  // live coset at or after `alpha`.
  std::size_t compact(std::size_t alpha) {
    std::vector<int> fresh(next_, -1);
    std::size_t count = 0;
    std::size_t new_alpha = static_cast<std::size_t>(-1);
    for (std::size_t c = 0; c < next_; ++c) {
      if (parent_[c] != static_cast<int>(c)) continue;
      if (c >= alpha && new_alpha == static_cast<std::size_t>(-1)) new_alpha = count;
      fresh[c] = static_cast<int>(count++);
    }
    std::vector<int> t(count * cols_, -1);
    for (std::size_t c = 0; c < next_; ++c) {
      if (fresh[c] < 0) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        int d = table_[c * cols_ + x];
        t[static_cast<std::size_t>(fresh[c]) * cols_ + x] = d < 0 ? -1 : fresh[static_cast<std::size_t>(d)];
      }
    }
    table_ = std::move(t);
    next_ = count;
    live_ = count;
    parent_.resize(count);
    for (std::size_t c = 0; c < count; ++c) parent_[c] = static_cast<int>(c);
    return new_alpha == static_cast<std::size_t>(-1) ? count : new_alpha;
  }

  CosetTable export_table() {
    std::vector<std::uint32_t> entries(table_.size());
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (table_[i] < 0) throw Error("coset enumeration finished with an undefined entry");
      entries[i] = static_cast<std::uint32_t>(table_[i]);
    }
    CosetTable t(cols_ / 2, std::move(entries));
    for (std::uint32_t c = 0; c < next_; ++c) {
      for (std::size_t g = 0; g < cols_ / 2; ++g) {
        if (t.act(t.act(c, letter(g)), letter(g, true)) != c) throw Error("coset table is not a permutation");
      }
      for (const auto& w : rels_) {
        std::uint32_t d = c;
        for (int x : w) d = static_cast<std::uint32_t>(table_[d * cols_ + static_cast<std::size_t>(x)]);
        if (d != c) throw Error("relator acts nontrivially on the closed coset table");
      }
    }
    return t;
  }

  std::size_t cols_;
  std::size_t capacity_ = 0;
  std::vector<std::vector<int>> rels_;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::vector<int> queue_;
  std::size_t next_ = 0;
  std::size_t live_ = 0;
  std::size_t peak_ = 0;
};

}  // namespace

EnumerationOutcome enumerate(const Presentation& p, std::size_t max_cosets) {
  if (max_cosets == 0) throw ValidationError("coset budget must be positive");
  p.validate();
  if (p.generator_count() == 0) return Finite{1, CosetTable(0, {})};
  return Enumerator(p, max_cosets).run();
}

std::vector<std::uint32_t> action_of_word(const CosetTable& t, const Word& w) {
  std::vector<std::uint32_t> perm(t.order());
  for (std::uint32_t c = 0; c < perm.size(); ++c) perm[c] = t.act(c, w);
  return perm;
}

std::string format_table(const CosetTable& t, const Presentation& p) {
  std::string out = "cosets: " + std::to_string(t.order()) + "\n";
  for (std::uint32_t c = 0; c < t.order(); ++c) {
    out += std::to_string(c) + ":";
    for (std::size_t g = 0; g < t.generator_count(); ++g) {
      const auto& name = p.generators.at(g);
      out += " " + name + "->" + std::to_string(t.act(c, letter(g)));
      out += " " + name + "^-1->" + std::to_string(t.act(c, letter(g, true)));
    }
    out += "\n";
  }
  return out;
}

}  // namespace hsk
