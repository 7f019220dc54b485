#include "hsk/square_equivalence.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

namespace hsk {

Walk apply_square_move(const Walk& p, std::size_t position, const Square& s) {
  return reduce(insert_cycle(p, position, square_walk(s)));
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<VertexId>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (VertexId x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

struct Node {
  std::vector<VertexId> parent;
  SquareMove move;  // move taking parent to this node
  std::size_t depth = 0;
  bool root = false;
};

using Side = std::unordered_map<std::vector<VertexId>, Node, VecHash>;

// Square orientations grouped by their first vertex.
std::vector<std::vector<Square>> orientations_by_vertex(const Graph& g) {
  std::vector<std::vector<Square>> out(g.vertex_count());
  for (const auto& s : enumerate_squares(g)) {
    for (const auto& o : s.orientations()) out[o[0]].push_back(o);
  }
  for (auto& l : out) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  return out;
}

std::vector<Walk> path_to_root(const Side& side, std::vector<VertexId> w, std::vector<SquareMove>* moves) {
  std::vector<Walk> out;
  for (;;) {
    out.push_back(Walk::trusted(w));
    const Node& n = side.at(w);
    if (n.root) break;
    if (moves != nullptr) moves->push_back(n.move);
    w = n.parent;
  }
  return out;
}

}  // namespace

SquareEquivalence square_equivalent(const Graph& g, const Walk& p_in, const Walk& q_in,
                                    const SquareEquivalenceOptions& opt) {
  if (p_in.front() != q_in.front() || p_in.back() != q_in.back()) {
    throw ValidationError("square equivalence needs walks with the same endpoints");
  }
  const Walk p = reduce(p_in);
  const Walk q = reduce(q_in);
  SquareEquivalence out;
  if (p == q) {
    out.verdict = SquareEquivalence::Verdict::Equivalent;
    out.certificate = SquareEquivalence::Certificate::RewriteChain;
    out.chain = {p};
    return out;
  }

  // Cheap certificates of inequivalence first; the search can only
  // confirm equivalence.
  std::vector<VertexId> cycle = p.vertices();
  cycle.insert(cycle.end(), q.vertices().rbegin() + 1, q.vertices().rend());
  std::optional<bool> table_says;
  if (opt.group != nullptr && opt.group->table() != nullptr) {
    Word w = opt.group->image_of_walk(g, cycle);
    table_says = opt.group->table()->act(0, w) == 0;
    if (!*table_says) {
      out.verdict = SquareEquivalence::Verdict::Inequivalent;
      out.certificate = SquareEquivalence::Certificate::CosetTable;
      return out;
    }
  } else if (opt.lattice != nullptr) {
    Word w = edge_word(g, cycle);
    if (!opt.lattice_over_edges) {
      if (opt.group == nullptr) throw ValidationError("a lattice over simplified generators needs the group");
      w = substitute(w, opt.group->simplified.images);
    }
    if (!opt.lattice->contains_word(w)) {
      out.verdict = SquareEquivalence::Verdict::Inequivalent;
      out.certificate = SquareEquivalence::Certificate::AbelianLattice;
      return out;
    }
  }

  const auto by_vertex = orientations_by_vertex(g);
  const bool squareless = std::all_of(by_vertex.begin(), by_vertex.end(), [](const auto& l) { return l.empty(); });
  if (squareless) {
    // No moves exist, so every class is a single reduced walk.
    out.verdict = SquareEquivalence::Verdict::Inequivalent;
    out.certificate = SquareEquivalence::Certificate::Exhaustion;
    return out;
  }
  const std::size_t cap = std::max(p.length(), q.length()) + opt.length_slack;

  Side sides[2];
  std::vector<std::vector<VertexId>> frontier[2];
  std::size_t level[2] = {0, 0};
  for (int s = 0; s < 2; ++s) {
    const auto& start = (s == 0 ? p : q).vertices();
    Node root;
    root.root = true;
    sides[s].emplace(start, root);
    frontier[s].push_back(start);
  }

  std::vector<VertexId> meet;
  bool met = false;
  std::size_t states = 2;
  while (!met && (!frontier[0].empty() || !frontier[1].empty()) && level[0] + level[1] < opt.max_moves &&
         states <= opt.max_states) {
    int s = 0;
    if (frontier[0].empty() || (!frontier[1].empty() && frontier[1].size() < frontier[0].size())) s = 1;
    std::vector<std::vector<VertexId>> next;
    for (const auto& w : frontier[s]) {
      Walk cur = Walk::trusted(w);
      for (std::size_t k = 0; k <= cur.length() && !met; ++k) {
        for (const auto& o : by_vertex[cur[k]]) {
          Walk nw = apply_square_move(cur, k, o);
          if (nw.length() > cap) continue;
          const auto& key = nw.vertices();
          if (sides[s].count(key) != 0) continue;
          Node n;
          n.parent = w;
          n.move = {k, o, true};
          n.depth = level[s] + 1;
          sides[s].emplace(key, std::move(n));
          ++states;
          if (sides[1 - s].count(key) != 0) {
            meet = key;
            met = true;
            break;
          }
          next.push_back(key);
        }
      }
      if (met || states > opt.max_states) break;
    }
    frontier[s] = std::move(next);
    ++level[s];
  }

  if (met) {
    std::vector<SquareMove> fwd;
    auto left = path_to_root(sides[0], meet, &fwd);  // meet ... p
    std::vector<SquareMove> back;
    auto right = path_to_root(sides[1], meet, &back);  // meet ... q
    std::reverse(left.begin(), left.end());
    std::reverse(fwd.begin(), fwd.end());
    out.chain = left;
    out.chain.insert(out.chain.end(), right.begin() + 1, right.end());
    out.moves = fwd;
    for (auto m : back) {
      m.forward = false;
      out.moves.push_back(m);
    }
    out.verdict = SquareEquivalence::Verdict::Equivalent;
    out.certificate = SquareEquivalence::Certificate::RewriteChain;
    return out;
  }

  if (table_says) {
    out.verdict = SquareEquivalence::Verdict::Equivalent;
    out.certificate = SquareEquivalence::Certificate::CosetTable;
  }
  return out;
}

bool replay_chain(const SquareEquivalence& r, const Walk& p, const Walk& q) {
  if (r.verdict != SquareEquivalence::Verdict::Equivalent || r.chain.empty()) return false;
  if (r.chain.front() != reduce(p) || r.chain.back() != reduce(q)) return false;
  if (r.moves.size() + 1 != r.chain.size()) return false;
  for (std::size_t i = 0; i < r.moves.size(); ++i) {
    const auto& m = r.moves[i];
    const Walk& prev = r.chain[i];
    const Walk& next = r.chain[i + 1];
    try {
      if (m.forward ? apply_square_move(prev, m.position, m.square) != next
                    : apply_square_move(next, m.position, m.square) != prev) {
        return false;
      }
    } catch (const ValidationError&) {
      return false;
    }
  }
  return true;
}

}  // namespace hsk
