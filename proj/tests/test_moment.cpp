#include <doctest.h>

#include <random>

#include "gkm/catalog.hpp"
#include "gkm/checks/oracles.hpp"
#include "gkm/errors.hpp"
#include "gkm/linear_feasibility.hpp"
#include "gkm/moment.hpp"

using namespace gkm;

namespace {

MomentumRealization moved(MomentumRealization m, const Point& shift, const Rational& factor) {
  for (Point& p : m.positions)
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = p[i] * factor + shift[i];
  for (Rational& l : m.lengths) l *= factor;
  return m;
}

}  // namespace

TEST_SUITE("moment") {

TEST_CASE("linear feasibility on small systems") {
  // x >= 1, y >= 1, x + y = 3. y is the free variable, so the lex-min
  // point is (2, 1).
  lp::LinearSystem s{2, {{{1, 1}, 3}}, {{{1, 0}, 1}, {{0, 1}, 1}}};
  const lp::Result r = lp::solve(s);
  REQUIRE(r.feasible);
  CHECK(lp::satisfies(s, r.point));
  CHECK(r.point == std::vector<Rational>{2, 1});

  // x + y = 1 with x, y >= 1 is empty.
  lp::LinearSystem t{2, {{{1, 1}, 1}}, {{{1, 0}, 1}, {{0, 1}, 1}}};
  const lp::Result q = lp::solve(t);
  CHECK_FALSE(q.feasible);
  REQUIRE(q.certificate);
  CHECK(lp::certifies_infeasibility(t, *q.certificate));
}

TEST_CASE("random systems are solved or certified") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> coef(-3, 3), count(1, 4);
  for (int trial = 0; trial < 150; ++trial) {
    lp::LinearSystem s;
    s.variables = 3;
    const long eqs = count(rng) - 1, ineqs = count(rng) + 1;
    for (long k = 0; k < eqs + ineqs; ++k) {
      lp::Row row{{coef(rng), coef(rng), coef(rng)}, coef(rng)};
      (k < eqs ? s.equalities : s.inequalities).push_back(row);
    }
    const lp::Result r = lp::solve(s);
    if (r.feasible) {
      CHECK(lp::satisfies(s, r.point));
    } else {
      REQUIRE(r.certificate);
      CHECK(lp::certifies_infeasibility(s, *r.certificate));
    }
  }
}

TEST_CASE("realization of CP^1") {
  const CatalogEntry e = catalog("cp1");
  const RealizationResult r = realize(e.graph, *e.signs);
  REQUIRE(r.feasible());
  CHECK(r.realization->positions[0] == Point{0});
  CHECK(abs(r.realization->positions[1][0]) == 1);
  CHECK(r.realization->lengths == std::vector<Rational>{1});
  CHECK(is_valid_realization(e.graph, *e.signs, *r.realization));
}

TEST_CASE("example8 has no realization") {
  const GKMGraph g = catalog("example8").graph;
  const SignSearch s = feasible_sign_classes(g);
  CHECK(s.feasible_signs.empty());
  CHECK_FALSE(realize_any_signs(g).first);
  const SignedStructure plus = SignedStructure::from_signs(g, std::vector<int>(g.edge_count(), 1));
  const RealizationResult r = realize(g, plus);
  REQUIRE(r.certificate);
  CHECK_FALSE(r.certificate->describe(g).empty());
}

TEST_CASE("CP^1 x CP^3 is realizable and its cycles close") {
  const CatalogEntry e = catalog("cp1xcp3");
  const RealizationResult r = realize(e.graph, *e.signs);
  REQUIRE(r.feasible());
  CHECK(is_valid_realization(e.graph, *e.signs, *r.realization));
  CHECK(oracle::cycles_close(e.graph, *e.signs, *r.realization));
  CHECK(realize_any_signs(e.graph).first.has_value());
}

TEST_CASE("extra length constraints") {
  const CatalogEntry e = catalog("cp1");
  const RealizationResult r = realize(e.graph, *e.signs, {LengthConstraint{{1}, 3}});
  REQUIRE(r.feasible());
  CHECK(r.realization->lengths[0] == 3);
  // -l >= -0 contradicts l >= 1.
  const RealizationResult bad = realize(e.graph, *e.signs, {LengthConstraint{{-1}, 0}});
  CHECK_FALSE(bad.feasible());
  REQUIRE(bad.certificate);
  CHECK(bad.certificate->extra_multipliers.size() == 1);
}

TEST_CASE("x-rays compared exactly and up to translation and scaling") {
  const CatalogEntry e = catalog("cp1xcp3");
  const MomentumRealization m = *realize(e.graph, *e.signs).realization;
  const MomentumRealization m2 = moved(m, Point{Rational(1, 2), 3, -1}, 2);
  REQUIRE(is_valid_realization(e.graph, *e.signs, m2));
  const XRay a = xray(e.graph, *e.signs, m), b = xray(e.graph, *e.signs, m2);
  CHECK(xray_equal(a, a, XRayComparison::Exact));
  CHECK_FALSE(xray_equal(a, b, XRayComparison::Exact));
  CHECK(xray_equal(a, b, XRayComparison::UpToTranslationAndScaling));
  CHECK(xray_equal(normalize_xray(a), normalize_xray(b), XRayComparison::Exact));

  MomentumRealization broken = m;
  broken.lengths[0] += 1;
  CHECK_THROWS_AS(xray(e.graph, *e.signs, broken), InputError);
}

TEST_CASE("x-rays of the product and the Hamiltonian bundle agree") {
  const CatalogEntry p = catalog("cp1xcp3"), y = catalog("hamiltonian_y");
  const XRay a = xray(p.graph, *p.signs, *realize(p.graph, *p.signs).realization);
  const XRay b = xray(y.graph, *y.signs, *realize(y.graph, *y.signs).realization);
  CHECK(xray_equal(a, b, XRayComparison::UpToTranslationAndScaling));
}

}
