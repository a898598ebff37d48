#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gkm/lattice.hpp"

namespace gkm {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// One invariant 2-sphere. The label is stored as the lexicographically
/// positive representative of {w, -w}.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Weight label;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Labelled multigraph of a torus action: vertices are fixed points, edges
/// are invariant 2-spheres. Parallel edges are distinct edges.
class GKMGraph {
 public:
  GKMGraph(std::size_t rank, std::size_t valence);

  VertexId add_vertex(std::string name);
  EdgeId add_edge(VertexId u, VertexId v, const Weight& label);

  std::size_t rank() const { return rank_; }
  std::size_t valence() const { return valence_; }
  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return names_[v]; }
  const std::vector<std::string>& vertex_names() const { return names_; }
  std::optional<VertexId> find_vertex(std::string_view name) const;

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  // Edge ids incident to v, in insertion order.
  const std::vector<EdgeId>& incident(VertexId v) const { return incidence_[v]; }

  // Distinct edge labels, sorted.
  std::vector<Weight> distinct_labels() const;

  friend bool operator==(const GKMGraph& a, const GKMGraph& b) {
    return a.rank_ == b.rank_ && a.valence_ == b.valence_ && a.names_ == b.names_ &&
           a.edges_ == b.edges_;
  }

 private:
  std::size_t rank_;
  std::size_t valence_;
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// A lift of every unsigned label to an honest weight. The stored weight
/// belongs to the orientation edge.u -> edge.v; the reverse orientation
/// carries its negative.
class SignedStructure {
 public:
  // signs[e] = +1 keeps the canonical label on u -> v, -1 negates it.
  static SignedStructure from_signs(const GKMGraph& g, std::vector<int> signs);
  // oriented[e] is the weight on u -> v; must reduce to the unsigned label.
  static SignedStructure from_weights(const GKMGraph& g, const std::vector<Weight>& oriented);

  std::size_t edge_count() const { return signs_.size(); }
  int sign(EdgeId e) const { return signs_[e]; }
  const std::vector<int>& signs() const { return signs_; }
  const Weight& oriented(EdgeId e) const { return oriented_[e]; }
  // Weight of edge e read from the endpoint `tail`.
  Weight weight_from(const GKMGraph& g, EdgeId e, VertexId tail) const;

  SignedStructure negated() const;

  friend bool operator==(const SignedStructure& a, const SignedStructure& b) {
    return a.signs_ == b.signs_ && a.oriented_ == b.oriented_;
  }

 private:
  std::vector<int> signs_;
  std::vector<Weight> oriented_;
};

enum class Axiom {
  EmptyGraph,
  LabelArity,
  ZeroLabel,
  LoopEdge,
  NonRegularValence,
  CollinearWeights,
  Disconnected,
  NegativeComplexity,
};

std::string_view axiom_name(Axiom a);

struct Violation {
  Axiom axiom;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> warnings;

  bool ok() const { return violations.empty(); }
  bool has(Axiom a) const;
};

ValidationReport validate(const GKMGraph& g);

// Number of fixed points.
std::size_t euler_characteristic(const GKMGraph& g);
// valence - rank; may be negative for inputs that fail validation.
long complexity(const GKMGraph& g);

// Rank over Q of all edge labels.
std::size_t label_rank(const GKMGraph& g);

}  // namespace gkm
