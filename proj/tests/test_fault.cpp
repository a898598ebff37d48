#include <doctest.h>

#include "gkm/catalog.hpp"
#include "gkm/checks/acceptance.hpp"

using namespace gkm;

// The acceptance suite must notice a corrupted input graph.
TEST_CASE("corrupted example8 makes the suite fail") {
  const checks::CatalogProvider corrupted = [](std::string_view name) {
    CatalogEntry e = catalog(name);
    if (name != "example8") return e;
    // Replace the S^2 fibre label (1,-1,-1) on edge a-c by (1,-1,1).
    GKMGraph g(e.graph.rank(), e.graph.valence());
    for (const std::string& v : e.graph.vertex_names()) g.add_vertex(v);
    for (const Edge& ed : e.graph.edges())
      g.add_edge(ed.u, ed.v, ed.label == Weight{1, -1, -1} && ed.u == 0 ? Weight{1, -1, 1} : ed.label);
    e.graph = std::move(g);
    return e;
  };
  const auto rows = checks::run_acceptance(corrupted);
  CHECK_FALSE(checks::all_passed(rows));
}
