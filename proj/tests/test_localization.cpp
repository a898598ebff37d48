#include <doctest.h>

#include <random>

#include "gkm/catalog.hpp"
#include "gkm/checks/oracles.hpp"
#include "gkm/errors.hpp"
#include "gkm/localization.hpp"
#include "gkm/parse.hpp"

using namespace gkm;

namespace {

Rational integral(const char* name, const char* text) {
  const CatalogEntry e = catalog(name);
  return integrate(e.graph, *e.signs, parse_expr(text, e.graph.valence()));
}

}  // namespace

TEST_SUITE("localization") {

TEST_CASE("characteristic numbers of projective spaces") {
  CHECK(integral("cp1", "c1") == 2);
  CHECK(integral("cp2", "c1^2") == 9);
  CHECK(integral("cp2", "c2") == 3);
  CHECK(integral("cp2", "p1") == 3);
  CHECK(integral("cp3", "c1^3") == 64);
  CHECK(integral("cp3", "eu") == 4);
  CHECK(integral("cp4", "p1^2") == 25);
  CHECK(integral("cp4", "p2") == 10);
}

TEST_CASE("classes below the top degree integrate to zero") {
  for (const char* text : {"1", "c1", "c2", "c1^2", "c1*c2 - c1^3 + 0*c1"}) {
    CAPTURE(text);
    const CatalogEntry e = catalog("cp4");
    CHECK(integrate(e.graph, *e.signs, parse_expr(text, 4)) == 0);
  }
}

TEST_CASE("localization agrees with evaluation at points") {
  for (const char* name : {"cp2", "cp3", "cp1xcp3"}) {
    const CatalogEntry e = catalog(name);
    const std::size_t n = e.graph.valence();
    const std::vector<const char*> top = n == 2   ? std::vector<const char*>{"c1^2", "c2", "eu", "p1"}
                                         : n == 3 ? std::vector<const char*>{"c1^3", "c3 + 2*c1*c2", "eu"}
                                                  : std::vector<const char*>{"c1^4", "c2^2", "p1^2", "eu"};
    for (const char* text : top) {
      const CharClassExpr expr = parse_expr(text, n);
      const std::string label = std::string(name) + " " + text;
      CAPTURE(label);
      const auto sampled = oracle::localization_at_points(e.graph, *e.signs, expr);
      REQUIRE(sampled);
      CHECK(*sampled == integrate(e.graph, *e.signs, expr));
    }
  }
}

TEST_CASE("Pontryagin integrals depend only on the orientation") {
  std::mt19937_64 rng(17);
  const GKMGraph g = catalog("cp4").graph;
  const CharClassExpr expr = parse_expr("p1^2 - p2", 4);
  for (int t = 0; t < 20; ++t) {
    std::vector<int> signs(g.edge_count());
    for (int& s : signs) s = (rng() & 1) ? 1 : -1;
    const SignedStructure s = SignedStructure::from_signs(g, signs);
    const std::vector<int> orient = orientation_from_signs(g, s);
    std::optional<Rational> a, b;
    try { a = integrate(g, s, expr); } catch (const InconsistentDataError&) {}
    try { b = integrate_oriented(g, orient, expr); } catch (const InconsistentDataError&) {}
    CHECK(a == b);
  }
}

TEST_CASE("Pontryagin numbers of CP^1 x CP^3 vanish") {
  const CatalogEntry e = catalog("cp1xcp3");
  const std::vector<int> orient = orientation_from_signs(e.graph, *e.signs);
  CHECK(pontryagin_number(e.graph, orient, {1, 1}).value == 0);
  CHECK(pontryagin_number(e.graph, orient, {2}).value == 0);
  CHECK(pontryagin_number(e.graph, orient, {2}).integral);
  CHECK_THROWS_AS(pontryagin_number(e.graph, orient, {1}), InputError);
}

TEST_CASE("invalid expressions") {
  CHECK_THROWS_AS(CharClassExpr(2, {{1, {{ClassSymbol::chern(3), 1}}}}), InputError);
  CHECK_THROWS_AS(CharClassExpr(3, {{1, {{ClassSymbol::pontryagin(2), 1}}}}), InputError);
  CHECK_THROWS_AS(CharClassExpr(3, {{1, {{ClassSymbol::chern(1), 1}}}, {1, {{ClassSymbol::chern(2), 1}}}}),
                  InputError);
  const CatalogEntry e = catalog("cp2");
  CHECK_THROWS_AS(integrate(e.graph, *e.signs, parse_expr("c1^3", 2)), InputError);
  CHECK_THROWS_AS(integrate(e.graph, *e.signs, parse_expr("c1^2", 3)), InputError);
  CHECK_THROWS_AS(integrate_oriented(e.graph, {1, 1, 1}, parse_expr("c2", 2)), InputError);
}

TEST_CASE("inconsistent data is detected") {
  // Flipping one fixed-point orientation of CP^2 makes the sum nonconstant.
  const CatalogEntry e = catalog("cp2");
  std::vector<int> orient = orientation_from_signs(e.graph, *e.signs);
  orient[0] = -orient[0];
  CHECK_THROWS_AS(integrate_oriented(e.graph, orient, parse_expr("p1", 2)), InconsistentDataError);
}

}
