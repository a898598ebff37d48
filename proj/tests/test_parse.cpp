#include <doctest.h>

#include <random>

#include "gkm/catalog.hpp"
#include "gkm/errors.hpp"
#include "gkm/parse.hpp"

using namespace gkm;

namespace {

std::size_t error_column(const char* text, std::size_t valence) {
  try {
    parse_expr(text, valence);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

std::size_t error_line(const char* text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("parse") {

TEST_CASE("expressions") {
  const CharClassExpr a = parse_expr("3*c1^2 + c2", 2);
  CHECK(a.weighted_degree() == 2);
  CHECK(a == CharClassExpr(2, {{3, {{ClassSymbol::chern(1), 2}}}, {1, {{ClassSymbol::chern(2), 1}}}}));
  CHECK(parse_expr("c1*c1", 2) == parse_expr("c1^2", 2));
  CHECK(parse_expr("p1 - p1", 2).to_string() == "0");
  CHECK(parse_expr("-eu", 3).terms().begin()->second == -1);
  CHECK(parse_expr("eu", 3).only_pontryagin_and_euler());
  CHECK(parse_expr("  c1 *c2 ", 3) == parse_expr("c2*c1", 3));
}

TEST_CASE("expression errors") {
  CHECK_THROWS_AS(parse_expr("", 2), ParseError);
  CHECK(error_column("c1 + ", 2) > 0);
  CHECK(error_column("c1 $ c2", 2) == 4);
  CHECK_THROWS_AS(parse_expr("c1^", 2), ParseError);
  CHECK_THROWS_AS(parse_expr("x1", 2), ParseError);
  CHECK_THROWS_AS(parse_expr("c3", 2), InputError);
  CHECK_THROWS_AS(parse_expr("c1 + c2", 2), InputError);
}

TEST_CASE("random expressions round-trip") {
  std::mt19937_64 rng(29);
  const std::size_t n = 4;
  const std::vector<ClassSymbol> symbols{ClassSymbol::chern(1), ClassSymbol::chern(2), ClassSymbol::chern(4),
                                         ClassSymbol::pontryagin(1), ClassSymbol::euler()};
  for (int t = 0; t < 200; ++t) {
    // Random monomials of weighted degree 4.
    std::vector<std::pair<Integer, ClassMonomial>> terms;
    const int count = 1 + rng() % 3;
    for (int k = 0; k < count; ++k) {
      ClassMonomial m;
      std::size_t degree = 0;
      while (degree < n) {
        const ClassSymbol s = symbols[rng() % symbols.size()];
        if (degree + s.weighted_degree(n) > n) continue;
        ++m[s];
        degree += s.weighted_degree(n);
      }
      terms.push_back({Integer(static_cast<long>(rng() % 7) - 3), m});
    }
    const CharClassExpr e(n, terms);
    CAPTURE(e.to_string());
    CHECK(parse_expr(e.to_string(), n) == e);
  }
}

TEST_CASE("graph files") {
  const ParsedGraph p = parse_graph(
      "# a circle action on S^2\n"
      "rank 1\n"
      "vertex n\n"
      "vertex s   # south pole\n"
      "signed edge n s (1)\n");
  CHECK(p.graph.valence() == 1);
  CHECK(p.graph.vertex_count() == 2);
  REQUIRE(p.signs);
  CHECK(p.signs->oriented(0) == Weight{1});
  CHECK_FALSE(parse_graph("rank 1\nvertex a\nvertex b\nedge a b (1)\n").signs);
}

TEST_CASE("graph file errors") {
  CHECK(error_line("rank 1\nvertex a\nvertex a\n") == 3);
  CHECK(error_line("rank 1\nvertex a\nedge a b (1)\n") == 3);
  CHECK(error_line("rank 2\nvertex a\nvertex b\nedge a b (1)\n") == 4);
  CHECK(error_line("rank 1\nvertex a\nvertex b\nedge a b (1)\nsigned edge a b (1)\n") == 5);
  // A missing header is reported at the end of input.
  CHECK(error_line("vertex a\n") == 2);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  CHECK_THROWS_AS(parse_graph("rank 1\n"), ParseError);
}

TEST_CASE("catalog graphs round-trip") {
  for (const std::string& name : catalog_names()) {
    CAPTURE(name);
    const CatalogEntry e = catalog(name);
    const ParsedGraph p = parse_graph(serialize_graph(e.graph, e.signs));
    CHECK(p.graph == e.graph);
    CHECK(p.signs.has_value() == e.signs.has_value());
    if (e.signs) CHECK(*p.signs == *e.signs);
    CHECK(serialize_graph(p.graph, p.signs) == serialize_graph(e.graph, e.signs));
  }
}

TEST_CASE("orientations") {
  const GKMGraph g = catalog("cp1").graph;
  CHECK(parse_orientation("v0 +1\nv1 -1\n", g) == std::vector<int>{1, -1});
  CHECK_THROWS_AS(parse_orientation("v0 +1\n", g), InputError);
  CHECK_THROWS_AS(parse_orientation("v0 +2\nv1 -1\n", g), InputError);
}

}
