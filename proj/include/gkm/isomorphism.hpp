#pragma once

#include <optional>
#include <vector>

#include "gkm/graph.hpp"

namespace gkm {

struct GraphIsomorphism {
  std::vector<VertexId> vertex_map;  // g1 vertex -> g2 vertex
  std::vector<EdgeId> edge_map;      // g1 edge -> g2 edge
};

struct LatticeIsomorphism {
  GraphIsomorphism map;
  IntMatrix transform;  // M in GL(r, Z) with M * label1(e) = +-label2(map(e))
};

// Bijection preserving incidence and unsigned labels. Deterministic:
// vertices of g1 are visited in breadth-first order from vertex 0, and each
// is tried first against the g2 vertex with the same name, then by id.
std::optional<GraphIsomorphism> isomorphic_strict(const GKMGraph& g1, const GKMGraph& g2);

// Isomorphism after a change of basis of the weight lattice. Tries the
// identity first, then every matrix determined by sending an independent set
// of g1-labels to signed g2-labels.
std::optional<LatticeIsomorphism> isomorphic_up_to_lattice_aut(const GKMGraph& g1,
                                                               const GKMGraph& g2);

bool is_strict_isomorphism(const GKMGraph& g1, const GKMGraph& g2, const GraphIsomorphism& iso);
bool is_lattice_isomorphism(const GKMGraph& g1, const GKMGraph& g2, const LatticeIsomorphism& iso);

// Same graph with every label replaced by M * label.
GKMGraph transform_labels(const GKMGraph& g, const IntMatrix& m);

// Same graph with vertices renumbered: vertex v of g becomes perm[v].
GKMGraph permute_vertices(const GKMGraph& g, const std::vector<VertexId>& perm);

// Inverse of a unimodular matrix; throws InputError if det is not +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace gkm
