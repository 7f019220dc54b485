#include <doctest.h>

#include "hsk/analysis.hpp"
#include "hsk/io.hpp"
#include "support.hpp"

using namespace hsk;
using namespace hsk::test;

TEST_CASE("cover files round trip") {
  Cover exact = square_cover(triangle_loop());
  Cover back = parse_cover(write_cover(exact), exact.base);
  CHECK(back.total == exact.total);
  CHECK(back.projection == exact.projection);
  CHECK(back.exact());

  Cover ball = universal_cover_ball(c4(), 0, 3);
  Cover b2 = parse_cover(write_cover(ball), ball.base);
  CHECK_FALSE(b2.exact());
  CHECK(b2.radius == 3);
  CHECK(b2.depth == ball.depth);
  CHECK(write_cover(b2) == write_cover(ball));
}

TEST_CASE("cover file validation") {
  Graph base = c4();
  CHECK_THROWS_AS(parse_cover(R"({"vertices":["x"],"edges":[],"projection":{"x":"q"}})", base), ValidationError);
  CHECK_THROWS_AS(parse_cover(R"({"vertices":["x","y"],"edges":[],"projection":{"x":"a"}})", base), ValidationError);
  CHECK_THROWS_AS(parse_cover(R"({"vertices":["x"],"edges":[]})", base), ParseError);
  CHECK_THROWS_AS(parse_cover(R"({"vertices":["x"],"edges":[],"projection":{"x":"a"},"provenance":"odd"})", base),
                  ParseError);
}

TEST_CASE("pattern files round trip") {
  Graph g = c4();
  Pattern p = counterexample_pattern(Square{{0, 1, 2, 3}});
  std::string text = write_pattern(p, g);
  CHECK(parse_pattern(text, g) == p);
  CHECK_THROWS_AS(parse_pattern(R"({"width":2,"height":1,"cells":["a"]})", g), ValidationError);
  CHECK_THROWS_AS(parse_pattern(R"({"width":1,"height":1,"cells":["z"]})", g), ValidationError);
}

TEST_CASE("dot export") {
  std::string dot = to_dot(triangle_loop());
  CHECK(dot.rfind("graph G {", 0) == 0);
  CHECK(dot.find("\"o\" -- \"o\";") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '-') == 2 * 4);
  std::vector<VertexId> fiber{0, 1, 1};
  std::string colored = to_dot(triangle_loop(), &fiber);
  CHECK(colored.find("fillcolor") != std::string::npos);
}

TEST_CASE("analyze") {
  AnalysisReport c = analyze(c4());
  CHECK(std::get<Finite>(c.outcome).order == 1);
  CHECK(c.predicted == GluingClass::Logarithmic);
  CHECK(c.bipartite);
  CHECK_FALSE(c.mixing);
  CHECK_FALSE(c.warnings.empty());
  CHECK(c.cover_exact);
  CHECK(c.cover_vertices == std::optional<std::size_t>{4});

  AnalysisOptions opt;
  opt.max_cosets = 20000;
  AnalysisReport s = analyze(with_loop(realization_z3()), opt);
  CHECK_FALSE(is_finite(s.outcome));
  REQUIRE(s.infinite);
  CHECK(s.predicted == GluingClass::Linear);
  CHECK(s.mixing);
  CHECK_FALSE(s.cover_exact);

  CHECK_THROWS_AS(analyze(make_graph({"a", "b"}, {})), ValidationError);

  Json j = to_json(c);
  CHECK(j["enumeration"]["order"] == 1);
  CHECK(j["predicted_gluing"] == "Logarithmic");
  CHECK(format_report(c).find("predicted gluing") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  Graph g = realization_z3();
  CHECK(write_graph(g) == write_graph(realization_z3()));
  CHECK(write_cover(square_cover(g)) == write_cover(square_cover(g)));
  CHECK(to_json(analyze(c4())).dump() == to_json(analyze(c4())).dump());
}
