#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gkm/catalog.hpp"
#include "gkm/errors.hpp"
#include "gkm/graph.hpp"
#include "gkm/isomorphism.hpp"

using namespace gkm;

namespace {

bool has_axiom(const ValidationReport& r, Axiom a) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.axiom == a; });
}

GKMGraph two_vertices(std::size_t valence, const std::vector<Weight>& labels) {
  GKMGraph g(labels.front().size(), valence);
  const VertexId a = g.add_vertex("a"), b = g.add_vertex("b");
  for (const Weight& w : labels) g.add_edge(a, b, w);
  return g;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("catalog graphs are valid") {
  for (const std::string& name : catalog_names()) {
    CAPTURE(name);
    CHECK(validate(catalog(name).graph).ok());
  }
}

TEST_CASE("validation reports each violated axiom") {
  CHECK(has_axiom(validate(two_vertices(2, {Weight{1, 0}, Weight{2, 0}})), Axiom::CollinearWeights));
  CHECK(has_axiom(validate(two_vertices(2, {Weight{1, 0}, Weight{0, 0}})), Axiom::ZeroLabel));
  CHECK(has_axiom(validate(two_vertices(3, {Weight{1, 0}, Weight{0, 1}})), Axiom::NonRegularValence));
  CHECK(has_axiom(validate(GKMGraph(2, 2)), Axiom::EmptyGraph));

  GKMGraph loop(1, 1);
  const VertexId v = loop.add_vertex("v");
  loop.add_edge(v, v, Weight{1});
  CHECK(has_axiom(validate(loop), Axiom::LoopEdge));

  GKMGraph split(1, 1);
  const VertexId a = split.add_vertex("a"), b = split.add_vertex("b");
  const VertexId c = split.add_vertex("c"), d = split.add_vertex("d");
  split.add_edge(a, b, Weight{1});
  split.add_edge(c, d, Weight{1});
  CHECK(has_axiom(validate(split), Axiom::Disconnected));

  GKMGraph arity(2, 1);
  const VertexId x = arity.add_vertex("x"), y = arity.add_vertex("y");
  CHECK_THROWS_AS(arity.add_edge(x, y, Weight{1, 0, 0}), InputError);
}

TEST_CASE("euler characteristic and complexity") {
  const GKMGraph e8 = catalog("example8").graph;
  CHECK(euler_characteristic(e8) == 4);
  CHECK(complexity(e8) == 1);
  CHECK(label_rank(e8) == 3);
  CHECK(complexity(catalog("cp3").graph) == 0);
  CHECK(euler_characteristic(catalog("cp5").graph) == 6);
}

TEST_CASE("strict isomorphism") {
  const GKMGraph e8 = catalog("example8").graph, prod = catalog("product_s2s6").graph;
  const auto iso = isomorphic_strict(e8, prod);
  REQUIRE(iso);
  CHECK(is_strict_isomorphism(e8, prod, *iso));
  CHECK_FALSE(isomorphic_strict(e8, catalog("cp3").graph));
  CHECK_FALSE(isomorphic_strict(catalog("cp2").graph, catalog("cp3").graph));
}

TEST_CASE("isomorphism is invariant under vertex permutations") {
  std::mt19937_64 rng(3);
  for (const char* name : {"example8", "cp3", "cp1xcp3"}) {
    const GKMGraph g = catalog(name).graph;
    std::vector<VertexId> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < 5; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const GKMGraph h = permute_vertices(g, perm);
      const auto iso = isomorphic_strict(g, h);
      REQUIRE(iso);
      CHECK(is_strict_isomorphism(g, h, *iso));
    }
  }
}

TEST_CASE("isomorphism up to a lattice automorphism") {
  const GKMGraph g = catalog("cp3").graph;
  const IntMatrix m{{1, 1, 0}, {0, 1, 0}, {2, 3, 1}};
  const GKMGraph h = transform_labels(g, m);
  CHECK_FALSE(isomorphic_strict(g, h));
  const auto iso = isomorphic_up_to_lattice_aut(g, h);
  REQUIRE(iso);
  CHECK(is_lattice_isomorphism(g, h, *iso));
  CHECK(unimodular_inverse(m) * m == IntMatrix::identity(3));

  // Doubling every label is not induced by an automorphism of Z^3.
  const GKMGraph doubled = transform_labels(g, IntMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  CHECK_FALSE(isomorphic_up_to_lattice_aut(g, doubled));
}

}
