#include "gkm/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gkm/errors.hpp"

namespace gkm {

GKMGraph::GKMGraph(std::size_t rank, std::size_t valence) : rank_(rank), valence_(valence) {
  if (rank == 0) throw InputError("torus rank must be at least 1");
}

VertexId GKMGraph::add_vertex(std::string name) {
  if (find_vertex(name)) throw InputError("duplicate vertex name '" + name + "'");
  names_.push_back(std::move(name));
  incidence_.emplace_back();
  return names_.size() - 1;
}

EdgeId GKMGraph::add_edge(VertexId u, VertexId v, const Weight& label) {
  if (u >= vertex_count() || v >= vertex_count()) throw InputError("edge endpoint out of range");
  if (label.size() != rank_)
    throw InputError("label " + label.to_string() + " has arity " +
                     std::to_string(label.size()) + ", expected rank " + std::to_string(rank_));
  edges_.push_back(Edge{u, v, label.canonical_sign()});
  const EdgeId e = edges_.size() - 1;
  incidence_[u].push_back(e);
  if (v != u) incidence_[v].push_back(e);
  return e;
}

std::optional<VertexId> GKMGraph::find_vertex(std::string_view name) const {
  for (VertexId i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::vector<Weight> GKMGraph::distinct_labels() const {
  std::set<Weight> s;
  for (const Edge& e : edges_) s.insert(e.label);
  return {s.begin(), s.end()};
}

// ---------------------------------------------------------------------------

SignedStructure SignedStructure::from_signs(const GKMGraph& g, std::vector<int> signs) {
  if (signs.size() != g.edge_count()) throw InputError("sign vector length does not match edge count");
  SignedStructure s;
  s.oriented_.reserve(signs.size());
  for (EdgeId e = 0; e < signs.size(); ++e) {
    if (signs[e] != 1 && signs[e] != -1) throw InputError("signs must be +1 or -1");
    s.oriented_.push_back(signs[e] > 0 ? g.edge(e).label : -g.edge(e).label);
  }
  s.signs_ = std::move(signs);
  return s;
}

SignedStructure SignedStructure::from_weights(const GKMGraph& g, const std::vector<Weight>& oriented) {
  if (oriented.size() != g.edge_count()) throw InputError("signed label count does not match edge count");
  std::vector<int> signs(oriented.size());
  for (EdgeId e = 0; e < oriented.size(); ++e) {
    const Weight& label = g.edge(e).label;
    if (oriented[e] == label) {
      signs[e] = 1;
    } else if (oriented[e] == -label) {
      signs[e] = -1;
    } else {
      throw InputError("signed label " + oriented[e].to_string() + " does not reduce to " +
                       label.to_string());
    }
  }
  return from_signs(g, std::move(signs));
}

Weight SignedStructure::weight_from(const GKMGraph& g, EdgeId e, VertexId tail) const {
  return g.edge(e).u == tail ? oriented_[e] : -oriented_[e];
}

SignedStructure SignedStructure::negated() const {
  SignedStructure s = *this;
  for (int& x : s.signs_) x = -x;
  for (Weight& w : s.oriented_) w = -w;
  return s;
}

// ---------------------------------------------------------------------------

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::EmptyGraph: return "empty graph";
    case Axiom::LabelArity: return "label arity";
    case Axiom::ZeroLabel: return "zero label";
    case Axiom::LoopEdge: return "loop edge";
    case Axiom::NonRegularValence: return "non-regular valence";
    case Axiom::CollinearWeights: return "collinear weights at vertex";
    case Axiom::Disconnected: return "disconnected graph";
    case Axiom::NegativeComplexity: return "negative complexity";
  }
  return "unknown";
}

bool ValidationReport::has(Axiom a) const {
  return std::any_of(violations.begin(), violations.end(),
                     [a](const Violation& v) { return v.axiom == a; });
}

ValidationReport validate(const GKMGraph& g) {
  ValidationReport report;
  auto add = [&](Axiom a, std::string msg) {
    report.violations.push_back({a, std::string(axiom_name(a)) + ": " + msg});
  };

  if (g.vertex_count() == 0) {
    add(Axiom::EmptyGraph, "graph has no vertices");
    return report;
  }

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const std::string where = "edge " + std::to_string(e) + " (" + g.vertex_name(ed.u) + "-" +
                              g.vertex_name(ed.v) + ")";
    if (ed.label.size() != g.rank()) add(Axiom::LabelArity, where);
    if (ed.label.is_zero()) add(Axiom::ZeroLabel, where);
    if (ed.u == ed.v) add(Axiom::LoopEdge, where);
  }

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident(v);
    std::size_t degree = 0;
    for (EdgeId e : inc) degree += g.edge(e).u == g.edge(e).v ? 2 : 1;
    if (degree != g.valence())
      add(Axiom::NonRegularValence, "vertex " + g.vertex_name(v) + " has degree " +
                                        std::to_string(degree) + ", expected " +
                                        std::to_string(g.valence()));
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        const Weight& a = g.edge(inc[i]).label;
        const Weight& b = g.edge(inc[j]).label;
        if (a.is_zero() || b.is_zero()) continue;
        if (!linearly_independent(a, b))
          add(Axiom::CollinearWeights, "vertex " + g.vertex_name(v) + ": " + a.to_string() +
                                           " and " + b.to_string());
      }
  }

  // Connectivity by union-find.
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) parent[find(e.u)] = find(e.v);
  std::size_t roots = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) roots += find(v) == v;
  if (roots > 1) add(Axiom::Disconnected, std::to_string(roots) + " connected components");

  if (complexity(g) < 0)
    add(Axiom::NegativeComplexity, "valence " + std::to_string(g.valence()) + " < rank " +
                                       std::to_string(g.rank()) + "; the action cannot be effective");
  else if (label_rank(g) < g.rank())
    report.warnings.push_back("labels span a sublattice of rank " + std::to_string(label_rank(g)) +
                              " < " + std::to_string(g.rank()) + "; the action is not effective");
  return report;
}

std::size_t euler_characteristic(const GKMGraph& g) { return g.vertex_count(); }

long complexity(const GKMGraph& g) {
  return static_cast<long>(g.valence()) - static_cast<long>(g.rank());
}

std::size_t label_rank(const GKMGraph& g) {
  std::vector<Weight> labels = g.distinct_labels();
  if (labels.empty()) return 0;
  return rank(IntMatrix::from_rows(labels, g.rank()));
}

}  // namespace gkm
