#include <doctest.h>

#include "hsk/cover.hpp"
#include "hsk/square_equivalence.hpp"
#include "support.hpp"

using namespace hsk;
using namespace hsk::test;

namespace {

Cover make_cover(const Graph& total, const Graph& base, const std::vector<std::string>& over) {
  Cover c;
  c.total = total;
  c.base = base;
  for (const auto& b : over) c.projection.push_back(base.require(b));
  return c;
}

// The 12-cycle labeled a b c d a b c d ... over C4.
Cover twelve_cycle() {
  Graph t = cycle_graph(12, "t");
  std::vector<std::string> over;
  for (int i = 0; i < 12; ++i) over.push_back(std::string(1, static_cast<char>('a' + i % 4)));
  return make_cover(t, c4(), over);
}

// A 3-sheeted cover of the bowtie centered at b, with no deck
// transformation sending a2 to a1.
Cover bowtie_cover() {
  Graph base = make_graph({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"b", "d"}, {"d", "e"}, {"e", "b"}});
  std::vector<std::string> cyc{"b1", "a2", "c3", "b2", "e3", "d2", "b2", "a3", "c2", "b1",
                               "e2", "d1", "b3", "c1", "a1", "b3", "e1", "d3", "b1"};
  std::vector<std::string> names;
  for (const auto& n : cyc)
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i + 1 < cyc.size(); ++i) edges.emplace_back(cyc[i], cyc[i + 1]);
  Graph total = make_graph(names, edges);
  std::vector<std::string> over;
  for (const auto& n : names) over.push_back(n.substr(0, 1));
  return make_cover(total, base, over);
}

Walk w(const Graph& g, std::initializer_list<const char*> names) {
  std::vector<VertexId> v;
  for (auto n : names) v.push_back(g.require(n));
  return Walk(g, v);
}

}  // namespace

TEST_CASE("check_covering_map") {
  for (const auto& [name, g] : corpus()) {
    CAPTURE(name);
    CHECK(check_covering_map(identity_cover(g)).ok);
  }
  CHECK(check_covering_map(twelve_cycle()).ok);
  CHECK(check_covering_map(bowtie_cover()).ok);

  // Collapsing b onto a is not a homomorphism edge-wise injective map.
  Graph base = c4();
  Cover bad = make_cover(base, base, {"a", "a", "c", "d"});
  auto r = check_covering_map(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.vertex.has_value());
  CHECK_FALSE(r.reason.empty());
}

TEST_CASE("lift_walk") {
  Cover c = twelve_cycle();
  Walk p = w(c.base, {"a", "b", "c", "d", "a"});
  Walk lifted = lift_walk(c, p, 0);
  CHECK(lifted.length() == 4);
  CHECK(lifted.back() != lifted.front());
  for (std::size_t i = 0; i <= p.length(); ++i) CHECK(c.projection[lifted[i]] == p[i]);

  CHECK(lift_walk(c, w(c.base, {"c"}), 2) == Walk(c.total, {2}));
  CHECK_THROWS_AS(lift_walk(c, p, 1), ValidationError);
}

TEST_CASE("universal_cover_ball") {
  Cover c = universal_cover_ball(c4(), 0, 3);
  CHECK(c.total.vertex_count() == 7);
  CHECK(c.total.undirected_edge_count() == 6);
  CHECK(is_connected(c.total));
  CHECK_FALSE(c.exact());
  CHECK(c.radius == 3);
  CHECK(check_covering_map(c).ok);

  Graph tree = make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"b", "d"}});
  Cover t = universal_cover_ball(tree, 0, 5);
  CHECK(t.total.vertex_count() == 4);
  CHECK(t.total.undirected_edge_count() == 3);

  Cover l = universal_cover_ball(loop_vertex(), 0, 1);
  CHECK(l.total.vertex_count() == 2);
  CHECK(l.total.name(0) == "a");
  CHECK(l.total.name(1) == "a/a");

  CHECK_THROWS_AS(lift_walk(c, Walk(c4(), {0, 1, 2, 3, 0}), 0), BudgetExceeded);
}

TEST_CASE("exact square covers") {
  Cover c = square_cover(c4());
  CHECK(c.exact());
  CHECK(c.total.vertex_count() == 4);
  CHECK(c.total.undirected_edge_count() == 4);

  Cover z = square_cover(realization_z3());
  CHECK(z.exact());
  CHECK(z.total.vertex_count() == 129);
  CHECK(check_covering_map(z).ok);
  CHECK(check_square_lifting(z).ok);

  Cover t = square_cover(triangle_loop());
  CHECK(t.total.vertex_count() == 6);
  CHECK(check_covering_map(t).ok);
}

TEST_CASE("truncated fallback on C6 is a path") {
  SquareCoverOptions opt;
  opt.max_cosets = 1000;
  for (std::size_t r : {1, 2, 4, 5}) {
    opt.fallback_radius = r;
    Cover c = square_cover(cycle(6), opt);
    CHECK_FALSE(c.exact());
    CHECK(c.total.vertex_count() == 2 * r + 1);
    CHECK(c.total.undirected_edge_count() == 2 * r);
    CHECK(check_covering_map(c).ok);
  }
}

TEST_CASE("truncated square cover of a finite case matches the exact cover near the base") {
  // s(C4) has order 2: the exact cover has 8 vertices. Forcing the fallback
  // with a tiny budget must find the same 8 classes.
  Graph g = with_loop(c4());
  SquareCoverOptions opt;
  opt.max_cosets = 1;
  opt.fallback_radius = 6;
  Cover c = square_cover(g, opt);
  CHECK_FALSE(c.exact());
  CHECK(c.total.vertex_count() == 8);
  CHECK(check_square_lifting(c).ok);
}

TEST_CASE("square_equivalent") {
  Graph g = c4();
  Walk p = w(g, {"a", "b", "c"}), q = w(g, {"a", "d", "c"});
  auto same = square_equivalent(g, p, p);
  CHECK(same.verdict == SquareEquivalence::Verdict::Equivalent);
  CHECK(same.moves.empty());

  auto r = square_equivalent(g, p, q);
  CHECK(r.verdict == SquareEquivalence::Verdict::Equivalent);
  CHECK(r.certificate == SquareEquivalence::Certificate::RewriteChain);
  CHECK(r.moves.size() == 1);
  CHECK(replay_chain(r, p, q));
  auto back = square_equivalent(g, q, p);
  CHECK(back.verdict == SquareEquivalence::Verdict::Equivalent);
  CHECK(replay_chain(back, q, p));

  Graph c6 = cycle(6);
  Walk arc1(c6, {0, 1, 2, 3}), arc2(c6, {0, 5, 4, 3});
  auto i = square_equivalent(c6, arc1, arc2);
  CHECK(i.verdict == SquareEquivalence::Verdict::Inequivalent);
  SquareGroup sg = compute_square_group(c6, 0, 1000);
  RowLattice lat(sg.simplified.presentation);
  SquareEquivalenceOptions opt;
  opt.group = &sg;
  opt.lattice = &lat;
  auto j = square_equivalent(c6, arc1, arc2, opt);
  CHECK(j.verdict == SquareEquivalence::Verdict::Inequivalent);
  CHECK(j.certificate == SquareEquivalence::Certificate::AbelianLattice);

  CHECK_THROWS_AS(square_equivalent(g, p, w(g, {"a", "b"})), ValidationError);
}

TEST_CASE("square_equivalent with a coset table") {
  Graph g = triangle_loop();
  SquareGroup sg = compute_square_group(g);
  REQUIRE(sg.table() != nullptr);
  SquareEquivalenceOptions opt;
  opt.group = &sg;
  opt.max_states = 10;
  // The loop o-o is nontrivial in Z/2; the two ways around the triangle
  // differ by it.
  Walk loop(g, {0, 0}), empty(g, {0});
  auto r = square_equivalent(g, loop, empty, opt);
  CHECK(r.verdict == SquareEquivalence::Verdict::Inequivalent);
  CHECK(r.certificate == SquareEquivalence::Certificate::CosetTable);
  Walk tri(g, {0, 1, 2, 0});
  auto s = square_equivalent(g, tri, loop, opt);
  CHECK(s.verdict == SquareEquivalence::Verdict::Equivalent);
}

TEST_CASE("check_square_lifting") {
  CHECK(check_square_lifting(identity_cover(c4())).ok);
  for (std::size_t r : {4, 6}) {
    auto res = check_square_lifting(universal_cover_ball(c4(), 0, r));
    CHECK_FALSE(res.ok);
    REQUIRE(res.square.has_value());
    CHECK(res.square->canonical().v == std::array<VertexId, 4>{0, 1, 2, 3});
  }
}

TEST_CASE("deck transformations") {
  Cover z = square_cover(realization_z3());
  auto id = deck_transformation(z, 5, 5);
  REQUIRE(id.has_value());
  for (VertexId v = 0; v < z.total.vertex_count(); ++v) CHECK((*id)[v] == v);

  Cover b = bowtie_cover();
  CHECK_FALSE(deck_transformation(b, b.total.require("a2"), b.total.require("a1")).has_value());
  CHECK_THROWS_AS(deck_transformation(b, b.total.require("a2"), b.total.require("b1")), ValidationError);
}

TEST_CASE("cover basics") {
  Cover c = twelve_cycle();
  CHECK(c.fiber(0) == std::vector<VertexId>{0, 4, 8});
  CHECK(c.neighbor_over(0, 1) == std::optional<VertexId>{1});
  CHECK(c.neighbor_over(0, 3) == std::optional<VertexId>{11});
  CHECK_FALSE(c.neighbor_over(0, 2).has_value());
}
