#include <doctest.h>

#include "hsk/pattern.hpp"
#include "hsk/probe.hpp"
#include "hsk/strip.hpp"
#include "support.hpp"

using namespace hsk;
using namespace hsk::test;

namespace {

Pattern constant(VertexId v, std::size_t w, std::size_t h) { return Pattern{w, h, std::vector<VertexId>(w * h, v)}; }

}  // namespace

TEST_CASE("is_locally_admissible") {
  CHECK(is_locally_admissible(loop_vertex(), constant(0, 3, 3)).ok);
  auto r = is_locally_admissible(c4(), constant(0, 2, 2));
  CHECK_FALSE(r.ok);
  CHECK(r.first == Cell{0, 0});
  CHECK(r.second == Cell{1, 0});
  CHECK(is_locally_admissible(c4(), constant(0, 1, 1)).ok);
}

TEST_CASE("counterexample_pattern") {
  Square s{{0, 1, 2, 3}};
  Pattern p = counterexample_pattern(s);
  CHECK(p.width == 3);
  CHECK(p.height == 3);
  CHECK(p.cells == std::vector<VertexId>{0, 1, 0, 3, 2, 3, 0, 1, 0});
  for (const auto& [name, g] : corpus()) {
    for (const auto& sq : enumerate_squares(g))
      for (const auto& o : sq.orientations()) CHECK(is_locally_admissible(g, counterexample_pattern(o)).ok);
  }
}

TEST_CASE("lift_pattern") {
  Graph g = c4();
  Pattern p = counterexample_pattern(Square{{0, 1, 2, 3}});

  Cover exact = square_cover(g);
  auto ok = lift_pattern(exact, p, 0);
  REQUIRE(std::holds_alternative<Pattern>(ok));
  const auto& lifted = std::get<Pattern>(ok);
  for (std::size_t i = 0; i < p.cells.size(); ++i) CHECK(exact.projection[lifted.cells[i]] == p.cells[i]);

  Cover ball = universal_cover_ball(g, 0, 6);
  auto bad = lift_pattern(ball, p, 0);
  REQUIRE(std::holds_alternative<Obstruction>(bad));
  const auto& o = std::get<Obstruction>(bad);
  CHECK(o.by_column != o.by_row);
  CHECK(o.plaquette.x + 1 == o.cell.x);
  CHECK(o.plaquette.y + 1 == o.cell.y);
  CHECK(ball.projection[o.by_column] == ball.projection[o.by_row]);

  auto single = lift_pattern(exact, constant(2, 1, 1), 2);
  REQUIRE(std::holds_alternative<Pattern>(single));
  CHECK(std::get<Pattern>(single).cells == std::vector<VertexId>{2});

  CHECK_THROWS_AS(lift_pattern(exact, p, 1), ValidationError);
  CHECK_THROWS_AS(lift_pattern(exact, constant(0, 2, 1), 0), ValidationError);
  CHECK_THROWS_AS(lift_pattern(universal_cover_ball(g, 0, 1), p, 0), BudgetExceeded);
}

TEST_CASE("random_admissible_pattern") {
  std::mt19937_64 rng(seed_from_env());
  for (const auto& [name, g] : corpus()) {
    CAPTURE(name);
    auto p = random_admissible_pattern(g, 5, 4, rng);
    REQUIRE(p.has_value());
    CHECK(p->width == 5);
    CHECK(p->height == 4);
    CHECK(is_locally_admissible(g, *p).ok);
  }
  // An isolated vertex admits only 1x1 patterns.
  Graph lone = make_graph({"a"}, {});
  CHECK(random_admissible_pattern(lone, 1, 1, rng).has_value());
  CHECK_FALSE(random_admissible_pattern(lone, 2, 1, rng).has_value());
}

TEST_CASE("strip graphs") {
  SUBCASE("loop") {
    for (std::size_t n : {0, 1, 5}) {
      StripGraph s = StripGraph::build(loop_vertex(), n);
      CHECK(s.vertex_count() == 1);
      CHECK(diameter(s.adjacency()).value == 0);
    }
  }
  SUBCASE("K2, n = 3") {
    Graph g = k2();
    StripGraph s = StripGraph::build(g, 3);
    CHECK(s.vertex_count() == 2);
    Graph sg = s.to_graph();
    CHECK(sg.name(0) == "a/b/a/b");
    CHECK(sg.name(1) == "b/a/b/a");
    CHECK(sg.has_edge(0, 1));
    CHECK(diameter(s.adjacency()).value == 1);
  }
  SUBCASE("C4, n = 0") {
    StripGraph s = StripGraph::build(c4(), 0);
    Graph sg = s.to_graph();
    CHECK(sg.names() == c4().names());
    CHECK(sg.undirected_edges() == c4().undirected_edges());
  }
  SUBCASE("rank and walk are inverse") {
    Graph g = triangle_loop();
    StripGraph s = StripGraph::build(g, 4);
    CHECK(s.vertex_count() == StripGraph::walk_count(g, 4));
    for (std::uint64_t r = 0; r < s.vertex_count(); ++r) CHECK(s.rank(s.walk(r)) == r);
    auto naive = naive_strip(g, 4);
    for (std::uint64_t r = 0; r < s.vertex_count(); ++r) CHECK(s.walk(r) == naive.walks[r]);
  }
  SUBCASE("adjacency matches pointwise comparison") {
    for (const auto& [name, g] : corpus()) {
      for (std::size_t n = 0; n <= 3; ++n) {
        if (StripGraph::walk_count(g, n) > 600) continue;
        CAPTURE(name);
        CAPTURE(n);
        StripGraph s = StripGraph::build(g, n);
        auto naive = naive_strip(g, n);
        REQUIRE(s.vertex_count() == naive.walks.size());
        const Csr& a = s.adjacency();
        for (std::size_t v = 0; v < naive.adj.size(); ++v) {
          std::vector<std::size_t> got(a.targets.begin() + static_cast<long>(a.offsets[v]),
                                       a.targets.begin() + static_cast<long>(a.offsets[v + 1]));
          std::sort(got.begin(), got.end());
          CHECK(got == naive.adj[v]);
        }
      }
    }
  }
  SUBCASE("walk cap") {
    try {
      StripGraph::build(complete(4), 6, 100);
      FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
      CHECK(std::string(e.what()).find("2916") != std::string::npos);
    }
  }
}

TEST_CASE("diameter") {
  CHECK(diameter(cycle(6)).value == 3);
  CHECK(diameter(cycle(6)).exact);
  CHECK(diameter(complete(4)).value == 1);
  auto two = diameter(make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}));
  CHECK(two.value == 1);
  CHECK(two.exact);
  CHECK_FALSE(two.connected);
  auto h = diameter(petersen(), DiameterMode::Heuristic);
  CHECK_FALSE(h.exact);
  CHECK(h.value <= 2);
  CHECK(diameter(grid(5, 3), DiameterMode::Exact).value == 6);
  CHECK(diameter(grid(5, 3), DiameterMode::Heuristic).value == 6);
  // More than 64 sources on a path checks lane batching.
  Graph path;
  {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> e;
    for (int i = 0; i < 150; ++i) {
      names.push_back("p" + std::to_string(i));
      if (i > 0) e.emplace_back("p" + std::to_string(i - 1), "p" + std::to_string(i));
    }
    path = make_graph(names, e);
  }
  CHECK(diameter(path).value == 149);
  CHECK(diameter(csr_of(path), DiameterMode::Exact, 0, 3).value == 149);
}

TEST_CASE("diameter matches the all-pairs oracle on corpus strip graphs") {
  for (const auto& [name, g] : corpus()) {
    for (std::size_t n = 0; n <= 6; ++n) {
      if (StripGraph::walk_count(g, n) > 2000) break;
      CAPTURE(name);
      CAPTURE(n);
      StripGraph s = StripGraph::build(g, n);
      auto oracle = all_pairs_diameter(naive_strip(g, n).adj);
      auto got = diameter(s.adjacency(), DiameterMode::Exact);
      CHECK(got.value == oracle.value);
      CHECK(got.connected == oracle.connected);
    }
  }
}

TEST_CASE("classify_diameters") {
  auto pts = [](std::vector<std::size_t> d) {
    std::vector<ProbePoint> out;
    for (std::size_t i = 0; i < d.size(); ++i) out.push_back({i + 1, 0, d[i], true, true});
    return out;
  };
  CHECK(classify_diameters(pts({0, 0, 0})) == GluingClass::Bounded);
  CHECK(classify_diameters(pts({3, 4, 5, 6, 7, 8, 9, 10})) == GluingClass::Linear);
  CHECK(classify_diameters(pts({2, 3, 3, 4, 4, 4, 4, 4, 4, 4})) == GluingClass::Logarithmic);
  CHECK(classify_diameters(pts({1, 2})) == GluingClass::Inconclusive);
  CHECK(classify_diameters({}) == GluingClass::Inconclusive);
  ProbeReport fit;
  classify_diameters(pts({3, 4, 5, 6, 7}), &fit);
  CHECK(fit.linear_slope == doctest::Approx(1.0));
  CHECK(fit.linear_intercept == doctest::Approx(2.0));
  CHECK(fit.linear_residual == doctest::Approx(0.0));
}

TEST_CASE("gluing_rate_probe") {
  ProbeOptions opt;
  opt.n_max = 6;
  auto loop = gluing_rate_probe(loop_vertex(), opt);
  CHECK(loop.classification == GluingClass::Bounded);
  CHECK(loop.points.size() == 6);

  opt.n_max = 8;
  auto c6 = gluing_rate_probe(with_loop(cycle(6)), opt);
  CHECK(c6.classification == GluingClass::Linear);
  CHECK(c6.expected.rfind("Linear", 0) == 0);

  ProbeOptions capped;
  capped.n_max = 20;
  capped.walk_cap = 1000;
  capped.cross_reference = false;
  auto t = gluing_rate_probe(with_loop(c4()), capped);
  CHECK(t.truncated);
  CHECK(t.n_reached == 6);
  CHECK_FALSE(t.notes.empty());

  auto bip = gluing_rate_probe(cycle(6), opt);
  CHECK(std::any_of(bip.notes.begin(), bip.notes.end(),
                    [](const std::string& n) { return n.find("phased only") != std::string::npos; }));
  CHECK_THROWS_AS(gluing_rate_probe(make_graph({"a", "b"}, {})), ValidationError);
}
