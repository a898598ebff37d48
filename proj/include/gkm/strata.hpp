#pragma once

// The closed orbit-type stratification as seen by the graph: connected
// components of the fixed subgraphs Gamma^H, ordered by inclusion, each with
// its principal isotropy subgroup.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "gkm/graph.hpp"
#include "gkm/lattice.hpp"

namespace gkm {

struct Subgraph {
  std::vector<VertexId> vertices;  // sorted
  std::vector<EdgeId> edges;       // sorted

  bool contains(const Subgraph& other) const;
  friend auto operator<=>(const Subgraph&, const Subgraph&) = default;
};

struct FixedSubgraph {
  std::vector<EdgeId> edges;         // edges whose label vanishes on H
  std::vector<Subgraph> components;  // every vertex lies in exactly one
};

// Keeps every vertex; isolated vertices are their own components.
FixedSubgraph fixed_subgraph(const GKMGraph& g, const TorusSubgroup& h);

// Connected components of (all vertices, given edges), sorted.
std::vector<Subgraph> components(const GKMGraph& g, const std::vector<EdgeId>& edges);

// The component as a graph of its own (vertex and edge order preserved).
GKMGraph component_graph(const GKMGraph& g, const Subgraph& c);

struct StratElement {
  Subgraph component;
  TorusSubgroup generating_subgroup;  // kernel of the component's labels
  TorusSubgroup principal_isotropy;   // kernel of the labels at one vertex
  bool isotropy_vertex_independent = true;
};

struct StratPoset {
  std::vector<StratElement> elements;   // sorted by (vertices, edge count, edges)
  std::vector<std::vector<bool>> leq;   // leq[i][j]: element i contained in j

  bool all_isotropy_vertex_independent() const;
  // Index of the element equal to the whole graph, if present.
  std::optional<std::size_t> maximum() const;
};

// Sets of labels of the form {labels vanishing on ker(S)} for S a set of
// labels, i.e. the labels in the Z-span of S. Every vanishing pattern of a
// subgroup on the labels is one of these.
std::vector<std::vector<Weight>> closed_label_sets(const GKMGraph& g);

StratPoset orbit_poset(const GKMGraph& g);

// First bijection p: 0..n-1 -> 0..n-1 with leq1[i][j] == leq2[p[i]][p[j]] and
// compatible(i, p[i]) for all i, or nullopt.
std::optional<std::vector<std::size_t>> find_order_isomorphism(
    const std::vector<std::vector<bool>>& leq1, const std::vector<std::vector<bool>>& leq2,
    const std::function<bool(std::size_t, std::size_t)>& compatible);

// Order isomorphism preserving principal isotropy subgroups.
std::optional<std::vector<std::size_t>> poset_isomorphic_with_labels(const StratPoset& p1,
                                                                     const StratPoset& p2);

}  // namespace gkm
