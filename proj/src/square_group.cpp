#include "hsk/square_group.hpp"

#include <numeric>

namespace hsk {

Word SquareGroup::image_of_walk(const Graph& g, const std::vector<VertexId>& vertices) const {
  return substitute(edge_word(g, vertices), simplified.images);
}

SquareGroup compute_square_group(const Graph& g, VertexId tree_root, std::size_t max_cosets,
                                 const SimplifyOptions& opt) {
  SquareGroup sg;
  sg.tree = spanning_tree(g, tree_root);
  sg.raw = square_presentation(g, sg.tree);
  sg.simplified = simplify(sg.raw, opt);
  sg.outcome = enumerate(sg.simplified.presentation, max_cosets);
  return sg;
}

EnumerationOutcome order_of_square_group(const Graph& g, std::size_t max_cosets) {
  return compute_square_group(g, 0, max_cosets).outcome;
}

std::optional<InfinitenessCertificate> certify_infinite(const Presentation& p, std::size_t factor_cosets) {
  auto ab = abelianization(p);
  if (ab.infinite()) {
    return InfinitenessCertificate{InfinitenessCertificate::Method::AbelianFreeRank,
                                   "abelianization " + format_invariants(ab) + " has free rank " +
                                       std::to_string(ab.free_rank)};
  }
  // Generators linked by a common relator belong to the same free factor.
  const auto n = p.generator_count();
  std::vector<std::size_t> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](std::size_t x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (const auto& r : p.relators) {
    for (std::size_t i = 1; i < r.size(); ++i) uf[find(generator_of(r[i]))] = find(generator_of(r[0]));
  }
  std::vector<std::size_t> comp_of(n, n);
  std::vector<Presentation> factors;
  for (std::size_t g = 0; g < n; ++g) {
    auto root = find(g);
    if (comp_of[root] == n) {
      comp_of[root] = factors.size();
      factors.emplace_back();
    }
  }
  if (factors.size() < 2) return std::nullopt;
  std::vector<std::size_t> local(n);
  for (std::size_t g = 0; g < n; ++g) {
    auto& f = factors[comp_of[find(g)]];
    local[g] = f.generators.size();
    f.generators.push_back(p.generators[g]);
  }
  for (const auto& r : p.relators) {
    if (r.empty()) continue;
    auto& f = factors[comp_of[find(generator_of(r[0]))]];
    Word w;
    for (Letter l : r) w.push_back(l > 0 ? letter(local[generator_of(l)]) : letter(local[generator_of(l)], true));
    f.relators.push_back(std::move(w));
  }
  // Factors that cannot be shown nontrivial are left out; two nontrivial
  // factors already force an infinite free product.
  std::size_t nontrivial = 0;
  std::string parts;
  for (auto& f : factors) {
    auto fab = abelianization(f);
    if (!fab.trivial()) {
      parts += " [" + format_invariants(fab) + "]";
      ++nontrivial;
      continue;
    }
    auto out = enumerate(simplify(f).presentation, factor_cosets);
    auto* fin = std::get_if<Finite>(&out);
    if (fin == nullptr || fin->order <= 1) continue;
    parts += " [order " + std::to_string(fin->order) + "]";
    ++nontrivial;
  }
  if (nontrivial < 2) return std::nullopt;
  return InfinitenessCertificate{InfinitenessCertificate::Method::FreeProduct,
                                 "free product with " + std::to_string(nontrivial) + " nontrivial factors:" + parts};
}

}  // namespace hsk
