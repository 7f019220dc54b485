#include "hsk/simplify.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hsk {

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (Letter l : w) {
    const Word& img = images.at(generator_of(l));
    if (l > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back(-*it);
    }
  }
  return free_reduce(out);
}

namespace {

void normalize(std::vector<Word>& rels) {
  std::set<Word> seen;
  std::vector<Word> out;
  for (auto& r : rels) {
    Word c = cyclic_reduce(r);
    if (c.empty()) continue;
    if (seen.insert(canonical_relator(c)).second) out.push_back(std::move(c));
  }
  rels = std::move(out);
}

// Replaces generator g by `rep` in w.
Word replace_generator(const Word& w, std::size_t g, const Word& rep, const Word& rep_inv) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (generator_of(l) != g) {
      out.push_back(l);
    } else {
      const Word& r = l > 0 ? rep : rep_inv;
      out.insert(out.end(), r.begin(), r.end());
    }
  }
  return out;
}

struct Elimination {
  std::size_t relator = 0;
  std::size_t generator = 0;
  long long cost = 0;
};

// Generator eliminable through one of the relators, with the least growth.
bool choose_elimination(const std::vector<Word>& rels, std::size_t ngen, std::size_t total,
                        std::size_t max_total, Elimination& best) {
  std::vector<std::size_t> occ(ngen, 0);
  for (const auto& r : rels) {
    for (Letter l : r) ++occ[generator_of(l)];
  }
  bool found = false;
  std::vector<std::size_t> local(ngen, 0);
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const auto& r = rels[i];
    for (Letter l : r) ++local[generator_of(l)];
    for (Letter l : r) {
      std::size_t g = generator_of(l);
      if (local[g] != 1) continue;
      auto len = static_cast<long long>(r.size());
      long long cost = static_cast<long long>(occ[g] - 1) * (len - 2) - len;
      if (cost > 0 && total + static_cast<std::size_t>(cost) > max_total) continue;
      bool better = !found || cost < best.cost ||
                    (cost == best.cost && (r.size() < rels[best.relator].size() ||
                                           (r.size() == rels[best.relator].size() && g < best.generator)));
      if (better) {
        best = {i, g, cost};
        found = true;
      }
    }
    for (Letter l : r) local[generator_of(l)] = 0;
  }
  return found;
}

// Bounded search for a rewriting of `target` to the empty word, each step
// replacing a subword u by v^-1 for some cyclic conjugate u v of a relator
// in `others` with |u| >= |v|.
bool derivable(const Word& target, const std::vector<const Word*>& others, const SimplifyOptions& opt) {
  std::vector<std::pair<Word, Word>> rules;  // (u, v^-1)
  for (const Word* s : others) {
    for (const Word& base : {*s, inverse_word(*s)}) {
      const std::size_t n = base.size();
      for (std::size_t rot = 0; rot < n; ++rot) {
        Word c(base.begin() + static_cast<std::ptrdiff_t>(rot), base.end());
        c.insert(c.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(rot));
        for (std::size_t ulen = (n + 1) / 2; ulen <= n; ++ulen) {
          Word u(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(ulen));
          Word v(c.begin() + static_cast<std::ptrdiff_t>(ulen), c.end());
          rules.emplace_back(std::move(u), inverse_word(v));
        }
      }
    }
  }
  std::set<Word> seen{canonical_relator(target)};
  std::deque<std::pair<Word, std::size_t>> queue{{cyclic_reduce(target), 0}};
  while (!queue.empty()) {
    auto [w, depth] = queue.front();
    queue.pop_front();
    if (depth >= opt.rewrite_depth) continue;
    const std::size_t n = w.size();
    for (std::size_t start = 0; start < n; ++start) {
      for (const auto& [u, rep] : rules) {
        if (u.size() > n) continue;
        bool match = true;
        for (std::size_t k = 0; k < u.size() && match; ++k) match = w[(start + k) % n] == u[k];
        if (!match) continue;
        Word next = rep;
        for (std::size_t k = u.size(); k < n; ++k) next.push_back(w[(start + k) % n]);
        next = cyclic_reduce(next);
        if (next.empty()) return true;
        if (next.size() > n) continue;
        if (!seen.insert(canonical_relator(next)).second) continue;
        if (seen.size() > opt.rewrite_states) return false;
        queue.emplace_back(std::move(next), depth + 1);
      }
    }
  }
  return false;
}

bool remove_redundant(std::vector<Word>& rels, const SimplifyOptions& opt) {
  if (rels.size() > 200) return false;
  bool changed = false;
  // Longest relators are the likeliest consequences; try them first.
  std::vector<std::size_t> order(rels.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rels[a].size() > rels[b].size(); });
  std::vector<bool> dropped(rels.size(), false);
  for (std::size_t i : order) {
    std::vector<const Word*> others;
    for (std::size_t j = 0; j < rels.size(); ++j) {
      if (j != i && !dropped[j]) others.push_back(&rels[j]);
    }
    if (derivable(rels[i], others, opt)) {
      dropped[i] = true;
      changed = true;
    }
  }
  if (changed) {
    std::vector<Word> kept;
    for (std::size_t j = 0; j < rels.size(); ++j) {
      if (!dropped[j]) kept.push_back(std::move(rels[j]));
    }
    rels = std::move(kept);
  }
  return changed;
}

}  // namespace

Simplified simplify(const Presentation& p, const SimplifyOptions& opt) {
  p.validate();
  const std::size_t ngen = p.generator_count();
  std::vector<Word> rels = p.relators;
  std::vector<Word> images(ngen);
  for (std::size_t g = 0; g < ngen; ++g) images[g] = {letter(g)};
  std::vector<bool> alive(ngen, true);

  for (;;) {
    normalize(rels);
    Elimination e;
    std::size_t total = 0;
    for (const auto& w : rels) total += w.size();
    if (choose_elimination(rels, ngen, total, opt.max_total_length, e)) {
      Word r = rels[e.relator];
      // Rotate so that the generator is the last letter: r = u g^eps.
      auto pos = static_cast<std::size_t>(std::find_if(r.begin(), r.end(), [&](Letter l) {
                                            return generator_of(l) == e.generator;
                                          }) - r.begin());
      std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end());
      Letter last = r.back();
      Word u(r.begin(), r.end() - 1);
      Word rep = last > 0 ? inverse_word(u) : u;
      Word rep_inv = inverse_word(rep);
      rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(e.relator));
      for (auto& w : rels) w = replace_generator(w, e.generator, rep, rep_inv);
      for (auto& w : images) w = free_reduce(replace_generator(w, e.generator, rep, rep_inv));
      alive[e.generator] = false;
      continue;
    }
    if (!remove_redundant(rels, opt)) break;
  }

  std::vector<Letter> renumber(ngen, 0);
  Simplified out;
  for (std::size_t g = 0; g < ngen; ++g) {
    if (alive[g]) {
      renumber[g] = static_cast<Letter>(out.presentation.generators.size() + 1);
      out.presentation.generators.push_back(p.generators[g]);
    }
  }
  auto rename = [&](const Word& w) {
    Word o;
    o.reserve(w.size());
    for (Letter l : w) o.push_back(l > 0 ? renumber[generator_of(l)] : -renumber[generator_of(l)]);
    return o;
  };
  for (const auto& r : rels) out.presentation.relators.push_back(rename(r));
  for (const auto& w : images) out.images.push_back(rename(w));
  return out;
}

}  // namespace hsk
