#include <doctest.h>

#include "hsk/abelian.hpp"
#include "hsk/coset_enum.hpp"
#include "hsk/simplify.hpp"
#include "hsk/square_group.hpp"
#include "support.hpp"

using namespace hsk;
using namespace hsk::test;

namespace {

Presentation pres(const char* text) { return parse_presentation(text); }

std::size_t order(const Presentation& p, std::size_t budget = 200000) {
  auto o = enumerate(p, budget);
  REQUIRE(is_finite(o));
  return std::get<Finite>(o).order;
}

Presentation simplified_fundamental(const Graph& g) {
  return simplify(fundamental_presentation(g, spanning_tree(g, 0))).presentation;
}

Presentation simplified_square(const Graph& g) {
  return simplify(square_presentation(g, spanning_tree(g, 0))).presentation;
}

}  // namespace

TEST_CASE("word helpers") {
  CHECK(free_reduce({1, -1, 2}) == Word{2});
  CHECK(free_reduce({1, 2, -2, -1}) == Word{});
  CHECK(cyclic_reduce({-1, 2, 1}) == Word{2});
  CHECK(inverse_word({1, 2, -3}) == Word{3, -2, -1});
  // Rotations and inverses share a canonical relator.
  CHECK(canonical_relator({1, 2, -1}) == canonical_relator({2, -1, 1}));
  CHECK(canonical_relator({1, 2}) == canonical_relator({-2, -1}));
}

TEST_CASE("presentation text format") {
  Presentation p = pres("generators: a b\nrelator: a a b^-1\nrelator: b b\n");
  CHECK(p.generators == std::vector<std::string>{"a", "b"});
  CHECK(p.relators == std::vector<Word>{{1, 1, -2}, {2, 2}});
  CHECK(parse_presentation(format_presentation(p)) == p);
  CHECK(format_word(p, {1, -2}) == "a b^-1");
  CHECK(pres("generators:\n").generators.empty());

  CHECK_THROWS_AS(pres("relator: a\n"), ParseError);
  CHECK_THROWS_AS(pres("generators: a\nrelator: b\n"), ParseError);
  CHECK_THROWS_AS(pres("generators: a\nrelator: a^2\n"), ParseError);
  CHECK_THROWS_AS(pres("generators: a a\n"), ParseError);
  try {
    pres("generators: a\nrelator: a\nrelator: q\n");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("fundamental_presentation shape") {
  Graph g = c4();
  SpanningTree t = spanning_tree(g, 0);
  Presentation p = fundamental_presentation(g, t);
  CHECK(p.generator_count() == 8);
  // 3 tree edges in both orientations plus 4 reverse pairs.
  CHECK(p.relators.size() == 10);
  CHECK(p.generators[0] == "a>b");

  Graph l = loop_vertex();
  Presentation lp = fundamental_presentation(l, spanning_tree(l, 0));
  CHECK(lp.generator_count() == 1);
  CHECK(lp.relators == std::vector<Word>{{1, 1}});
}

TEST_CASE("fundamental groups of the three example graphs") {
  Presentation c = simplified_fundamental(c4());
  CHECK(c.generator_count() == 1);
  CHECK(c.relators.empty());

  Presentation b = simplified_fundamental(bowtie());
  CHECK(b.generator_count() == 2);
  CHECK(b.relators.empty());

  Presentation t = simplified_fundamental(triangle_loop());
  CHECK(t.generator_count() == 2);
  REQUIRE(t.relators.size() == 1);
  CHECK(t.relators[0].size() == 2);
  CHECK(t.relators[0][0] == t.relators[0][1]);
}

TEST_CASE("square groups of the three example graphs") {
  Presentation c = simplified_square(c4());
  CHECK(c.generator_count() == 0);
  CHECK(c.relators.empty());

  Presentation b = simplified_square(bowtie());
  CHECK(b.generator_count() == 2);
  CHECK(b.relators.empty());
  CHECK(abelianization(b).free_rank == 2);

  Presentation t = simplified_square(triangle_loop());
  CHECK(order(t) == 2);
}

TEST_CASE("square_presentation adds one relator per square") {
  for (const auto& [name, g] : corpus()) {
    CAPTURE(name);
    SpanningTree t = spanning_tree(g, 0);
    CHECK(square_presentation(g, t).relators.size() ==
          fundamental_presentation(g, t).relators.size() + enumerate_squares(g).size());
  }
}

TEST_CASE("trees have trivial fundamental group") {
  Graph tree = make_graph({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}, {"b", "d"}, {"d", "e"}});
  Presentation p = simplified_fundamental(tree);
  CHECK(p.generator_count() == 0);
  CHECK(p.relators.empty());
}

TEST_CASE("edge generator names fall back when ambiguous") {
  Graph g = make_graph({"x>y", "z"}, {{"x>y", "z"}});
  auto names = edge_generator_names(g);
  CHECK(names == std::vector<std::string>{"e0", "e1"});
  CHECK(edge_generator_names(k2()) == std::vector<std::string>{"a>b", "b>a"});
}

TEST_CASE("simplify") {
  SUBCASE("lone generator relator") {
    Presentation s = simplify(pres("generators: a b\nrelator: b\n")).presentation;
    CHECK(s.generators == std::vector<std::string>{"a"});
    CHECK(s.relators.empty());
  }
  SUBCASE("free reduction") {
    Presentation s = simplify(pres("generators: a\nrelator: a a^-1\n")).presentation;
    CHECK(s.generators == std::vector<std::string>{"a"});
    CHECK(s.relators.empty());
  }
  SUBCASE("C4 square presentation eliminates every generator") {
    CHECK(simplified_square(c4()).generator_count() == 0);
  }
  SUBCASE("images substitute back to the simplified group") {
    Presentation p = pres("generators: a b c\nrelator: a b c^-1\nrelator: c c c\nrelator: a a\nrelator: b b\n");
    Simplified s = simplify(p);
    CHECK(order(s.presentation) == order(p));
    // Every original relator maps to the identity of the simplified group.
    auto o = enumerate(s.presentation);
    const auto& t = std::get<Finite>(o).table;
    for (const auto& r : p.relators) CHECK(t.act(0, substitute(r, s.images)) == 0);
  }
  SUBCASE("redundant relators are removed") {
    Presentation p = pres("generators: a b\nrelator: a b a^-1 b^-1\nrelator: b a b^-1 a^-1\n");
    CHECK(simplify(p).presentation.relators.size() == 1);
  }
}

TEST_CASE("free_product") {
  Presentation trivial;
  Presentation z2 = pres("generators: g\nrelator: g g\n");
  CHECK(free_product(trivial, z2) == z2);

  Presentation z = pres("generators: a\n");
  Presentation b2 = pres("generators: b\nrelator: b b\n");
  CHECK(free_product(z, b2) == pres("generators: a b\nrelator: b b\n"));

  CHECK(abelianization(free_product(z, z)).free_rank == 2);
  Presentation fz = free_product(z, z);
  CHECK(fz.generators == std::vector<std::string>{"a", "a1"});
  Presentation clash = free_product(pres("generators: a a1\n"), z);
  CHECK(clash.generators == std::vector<std::string>{"a", "a1", "a2"});
}

TEST_CASE("classify_fundamental") {
  CHECK(classify_fundamental(c4()) == FundamentalClass{1, 0});
  CHECK(classify_fundamental(bowtie()) == FundamentalClass{2, 0});
  CHECK(classify_fundamental(triangle_loop()) == FundamentalClass{1, 1});
  CHECK(classify_fundamental(loop_vertex()) == FundamentalClass{0, 1});
  CHECK_THROWS_AS(classify_fundamental(make_graph({"a", "b"}, {})), ValidationError);

  // Rank k and n divisors equal to 2 in the abelianization.
  for (const auto& [name, g] : corpus()) {
    CAPTURE(name);
    auto f = classify_fundamental(g);
    auto a = abelianization(fundamental_presentation(g, spanning_tree(g, 0)));
    CHECK(a.free_rank == f.free_rank);
    CHECK(std::count(a.torsion.begin(), a.torsion.end(), 2) == static_cast<long>(f.loops));
    CHECK(a.torsion.size() == f.loops);
  }
}

TEST_CASE("wedge_sum") {
  Graph a = cycle_graph(6, "x");
  Graph b = cycle_graph(6, "y");
  // Rename so both contain the shared vertex "o".
  auto rename0 = [](const Graph& g) {
    auto names = g.names();
    names[0] = "o";
    return Graph::from_edges(names, g.undirected_edges());
  };
  Wedge w = wedge_sum({rename0(a), rename0(b)}, "o");
  CHECK(w.graph.vertex_count() == 11);
  CHECK(w.graph.name(w.shared) == "o");
  CHECK(abelianization(square_presentation(w.graph, spanning_tree(w.graph, 0))).free_rank == 2);

  Graph single = make_graph({"o"}, {});
  Graph g = rename0(cycle_graph(5, "z"));
  Wedge ws = wedge_sum({g, single}, "o");
  CHECK(ws.graph == g);

  Graph c4a = make_graph({"o", "a1", "a2", "a3"}, {{"o", "a1"}, {"a1", "a2"}, {"a2", "a3"}, {"a3", "o"}});
  Graph c4b = make_graph({"o", "b1", "b2", "b3"}, {{"o", "b1"}, {"b1", "b2"}, {"b2", "b3"}, {"b3", "o"}});
  Wedge w4 = wedge_sum({c4a, c4b}, "o");
  CHECK(std::get<Finite>(order_of_square_group(w4.graph)).order == 1);

  CHECK_THROWS_AS(wedge_sum({c4a, c4a}, "o"), ValidationError);
  CHECK_THROWS_AS(wedge_sum({c4a, cycle_graph(4)}, "o"), ValidationError);
}

TEST_CASE("abelianization") {
  CHECK(abelianization(pres("generators: g\nrelator: g g g\n")) == AbelianInvariants{0, {3}});
  CHECK(abelianization(pres("generators: a b\n")) == AbelianInvariants{2, {}});
  CHECK(abelianization(pres("generators: a b\nrelator: a a\nrelator: a b\n")) == AbelianInvariants{0, {2}});
  CHECK(elementary_divisors({6}) == std::vector<std::int64_t>{2, 3});
  CHECK(elementary_divisors({2, 12}) == std::vector<std::int64_t>{2, 3, 4});
  CHECK(format_invariants(AbelianInvariants{1, {2}}) == "Z x Z/2");
  CHECK(format_invariants(AbelianInvariants{}) == "1");
}

TEST_CASE("Smith form agrees with the minors oracle") {
  std::vector<IntMatrix> ms{
      {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}},
      {{1, 2}, {3, 4}},
      {{0, 0}, {0, 6}},
      {{4, 6, 0}, {6, 9, 0}},
      {{2, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 6}},
      {{3, 1, 4}, {1, 5, 9}, {2, 6, 5}, {3, 5, 8}},
  };
  for (const auto& m : ms) {
    auto snf = smith_normal_form(m, m[0].size());
    CHECK(snf.diagonal == invariant_factors_by_minors(m, m[0].size()));
  }
}

TEST_CASE("RowLattice membership") {
  RowLattice l(IntMatrix{{2, 0}, {0, 3}}, 2);
  CHECK(l.contains({4, 3}));
  CHECK_FALSE(l.contains({1, 0}));
  CHECK_FALSE(l.contains({0, 1}));
  RowLattice z(IntMatrix{}, 1);
  CHECK(z.contains({0}));
  CHECK_FALSE(z.contains({5}));
}

TEST_CASE("van_kampen_presentation") {
  Graph g = c4();
  SpanningTree t = spanning_tree(g, 0);
  std::vector<VertexId> all{0, 1, 2, 3};
  CHECK(van_kampen_presentation(g, {all}, t) == square_presentation(g, t));

  Graph c4a = make_graph({"o", "a1", "a2", "a3"}, {{"o", "a1"}, {"a1", "a2"}, {"a2", "a3"}, {"a3", "o"}});
  Graph c4b = make_graph({"o", "b1", "b2", "b3"}, {{"o", "b1"}, {"b1", "b2"}, {"b2", "b3"}, {"b3", "o"}});
  CHECK(order(simplify(van_kampen_presentation({c4a, c4b})).presentation) == 1);

  // Two wheels glued along their whole border cycle.
  FlatQuadrangulation q = quadrangulate_cycle(6);
  auto renamed = [&](const std::string& tag) {
    auto names = q.graph.names();
    for (auto& n : names)
      if (n[0] != 'b') n = tag + n;
    return Graph::from_edges(names, q.graph.undirected_edges());
  };
  Graph top = renamed("t"), bottom = renamed("u");
  Presentation vk = van_kampen_presentation({top, bottom});
  GraphUnion u = graph_union({top, bottom});
  Presentation direct = square_presentation(u.graph, spanning_tree(u.graph, 0));
  CHECK(abelianization(vk) == abelianization(direct));
  CHECK(order(simplify(vk).presentation) == order(simplify(direct).presentation));
}
