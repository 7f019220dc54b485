#include "hsk/walk.hpp"

#include <algorithm>

namespace hsk {

Walk::Walk(const Graph& g, std::vector<VertexId> vertices) : v_(std::move(vertices)) {
  if (v_.empty()) throw ValidationError("a walk needs at least one vertex");
  for (VertexId x : v_) {
    if (x >= g.vertex_count()) throw ValidationError("walk vertex outside the graph");
  }
  for (std::size_t i = 0; i + 1 < v_.size(); ++i) {
    if (!g.has_edge(v_[i], v_[i + 1])) {
      throw ValidationError("walk step " + g.name(v_[i]) + " -> " + g.name(v_[i + 1]) +
                            " is not an edge");
    }
  }
}

Walk Walk::trusted(std::vector<VertexId> vertices) {
  if (vertices.empty()) throw ValidationError("a walk needs at least one vertex");
  return Walk(std::move(vertices));
}

bool Walk::is_non_backtracking() const {
  for (std::size_t i = 0; i + 2 < v_.size(); ++i) {
    if (v_[i] == v_[i + 2]) return false;
  }
  return true;
}

Walk reduce(const Walk& p) {
  // Stack form of leftmost removal: pushing x onto ... x y pops y instead.
  std::vector<VertexId> out;
  out.reserve(p.vertices().size());
  for (VertexId x : p.vertices()) {
    if (out.size() >= 2 && out[out.size() - 2] == x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return Walk::trusted(std::move(out));
}

Walk concat(const Walk& p, const Walk& q) {
  if (p.back() != q.front()) throw ValidationError("walks are not composable: endpoint mismatch");
  std::vector<VertexId> v = p.vertices();
  v.insert(v.end(), q.vertices().begin() + 1, q.vertices().end());
  return Walk::trusted(std::move(v));
}

Walk star(const Walk& p, const Walk& q) { return reduce(concat(p, q)); }

Walk inverse(const Walk& p) {
  std::vector<VertexId> v(p.vertices().rbegin(), p.vertices().rend());
  return Walk::trusted(std::move(v));
}

Walk tree_path(const SpanningTree& t, VertexId a, VertexId b) {
  if (a >= t.vertex_count() || b >= t.vertex_count()) {
    throw ValidationError("tree path endpoint outside the tree");
  }
  std::vector<VertexId> up_a{a};
  std::vector<VertexId> up_b{b};
  while (t.depth(up_a.back()) > t.depth(up_b.back())) up_a.push_back(*t.parent(up_a.back()));
  while (t.depth(up_b.back()) > t.depth(up_a.back())) up_b.push_back(*t.parent(up_b.back()));
  while (up_a.back() != up_b.back()) {
    up_a.push_back(*t.parent(up_a.back()));
    up_b.push_back(*t.parent(up_b.back()));
  }
  up_b.pop_back();
  up_a.insert(up_a.end(), up_b.rbegin(), up_b.rend());
  return Walk::trusted(std::move(up_a));
}

Walk insert_cycle(const Walk& p, std::size_t k, const Walk& c) {
  if (k > p.length()) throw ValidationError("cycle insertion index past the end of the walk");
  if (!c.is_cycle() || c.front() != p[k]) {
    throw ValidationError("inserted cycle must start and end at the attachment vertex");
  }
  const auto& pv = p.vertices();
  std::vector<VertexId> v(pv.begin(), pv.begin() + static_cast<std::ptrdiff_t>(k) + 1);
  v.insert(v.end(), c.vertices().begin() + 1, c.vertices().end());
  v.insert(v.end(), pv.begin() + static_cast<std::ptrdiff_t>(k) + 1, pv.end());
  return Walk::trusted(std::move(v));
}

Walk square_walk(const Square& s) { return Walk::trusted({s[0], s[1], s[2], s[3], s[0]}); }

}  // namespace hsk
