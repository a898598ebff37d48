#include <doctest.h>

#include <algorithm>

#include "gkm/catalog.hpp"
#include "gkm/checks/oracles.hpp"
#include "gkm/strata.hpp"

using namespace gkm;

TEST_SUITE("strata") {

TEST_CASE("fixed subgraph of a circle") {
  // H = {(s,1,1)}: a label vanishes on H iff its first entry is 0, which
  // keeps the four meridian edges (0,1,0), (0,0,1) and splits off c-d.
  const GKMGraph g = catalog("example8").graph;
  const TorusSubgroup h = kernel_of_weights({Weight{0, 1, 0}, Weight{0, 0, 1}}, 3);
  const FixedSubgraph f = fixed_subgraph(g, h);
  REQUIRE(f.edges.size() == 4);
  for (EdgeId e : f.edges) CHECK(g.edge(e).label[0] == 0);
  CHECK(f.components.size() == 2);
}

TEST_CASE("element counts") {
  CHECK(orbit_poset(catalog("cp1").graph).elements.size() == 3);
  CHECK(orbit_poset(catalog("cp2").graph).elements.size() == 7);
  CHECK(orbit_poset(catalog("cp3").graph).elements.size() == 15);
  CHECK(orbit_poset(catalog("example8").graph).elements.size() == 22);
}

TEST_CASE("closed label sets agree with all subsets") {
  for (const char* name : {"cp1", "cp2", "cp3", "example8", "product_s2s6", "cp1xcp3"}) {
    CAPTURE(name);
    const GKMGraph g = catalog(name).graph;
    std::vector<Subgraph> fast;
    for (const StratElement& e : orbit_poset(g).elements) fast.push_back(e.component);
    std::sort(fast.begin(), fast.end());
    CHECK(fast == oracle::strata_components_by_subsets(g));
  }
}

TEST_CASE("isotropy is antitone in the containment order") {
  for (const char* name : {"example8", "cp3", "cp1xcp3"}) {
    const StratPoset p = orbit_poset(catalog(name).graph);
    for (std::size_t i = 0; i < p.elements.size(); ++i)
      for (std::size_t j = 0; j < p.elements.size(); ++j) {
        if (!p.leq[i][j]) continue;
        CHECK(p.elements[j].component.contains(p.elements[i].component));
        CHECK(subgroup_contains(p.elements[i].principal_isotropy, p.elements[j].principal_isotropy));
      }
    CHECK(p.all_isotropy_vertex_independent());
  }
}

TEST_CASE("components are GKM graphs") {
  // The full torus still acts on a component, so only the effectiveness
  // check (negative complexity) may fail.
  const GKMGraph g = catalog("cp3").graph;
  for (const StratElement& e : orbit_poset(g).elements) {
    if (e.component.edges.empty()) continue;
    for (const Violation& v : validate(component_graph(g, e.component)).violations)
      CHECK(v.axiom == Axiom::NegativeComplexity);
  }
}

TEST_CASE("posets of isomorphic graphs match") {
  const StratPoset a = orbit_poset(catalog("example8").graph);
  const StratPoset b = orbit_poset(catalog("product_s2s6").graph);
  CHECK(poset_isomorphic_with_labels(a, b).has_value());
  CHECK_FALSE(poset_isomorphic_with_labels(a, orbit_poset(catalog("cp3").graph)).has_value());
}

}
