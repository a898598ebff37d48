#include "gkm/strata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "gkm/errors.hpp"

namespace gkm {

bool Subgraph::contains(const Subgraph& other) const {
  return std::includes(vertices.begin(), vertices.end(), other.vertices.begin(), other.vertices.end()) &&
         std::includes(edges.begin(), edges.end(), other.edges.begin(), other.edges.end());
}

std::vector<Subgraph> components(const GKMGraph& g, const std::vector<EdgeId>& edges) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (EdgeId e : edges) {
    std::size_t a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  }
  std::vector<Subgraph> by_root(n);
  for (VertexId v = 0; v < n; ++v) by_root[find(v)].vertices.push_back(v);
  for (EdgeId e : edges) by_root[find(g.edge(e).u)].edges.push_back(e);
  std::vector<Subgraph> out;
  for (Subgraph& c : by_root) {
    if (c.vertices.empty()) continue;
    std::sort(c.edges.begin(), c.edges.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FixedSubgraph fixed_subgraph(const GKMGraph& g, const TorusSubgroup& h) {
  if (h.rank() != g.rank()) throw InputError("subgroup rank does not match the graph rank");
  FixedSubgraph out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (vanishes_on(g.edge(e).label, h)) out.edges.push_back(e);
  out.components = components(g, out.edges);
  return out;
}

GKMGraph component_graph(const GKMGraph& g, const Subgraph& c) {
  std::vector<std::size_t> degree(g.vertex_count(), 0);
  for (EdgeId e : c.edges) {
    ++degree[g.edge(e).u];
    ++degree[g.edge(e).v];
  }
  GKMGraph out(g.rank(), c.vertices.empty() ? 0 : degree[c.vertices.front()]);
  std::vector<VertexId> local(g.vertex_count());
  for (VertexId v : c.vertices) local[v] = out.add_vertex(g.vertex_name(v));
  for (EdgeId e : c.edges) out.add_edge(local[g.edge(e).u], local[g.edge(e).v], g.edge(e).label);
  return out;
}

bool StratPoset::all_isotropy_vertex_independent() const {
  return std::all_of(elements.begin(), elements.end(),
                     [](const StratElement& e) { return e.isotropy_vertex_independent; });
}

std::optional<std::size_t> StratPoset::maximum() const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (std::all_of(leq.begin(), leq.end(), [&](const std::vector<bool>& row) { return row[i]; }))
      return i;
  return std::nullopt;
}

std::vector<std::vector<Weight>> closed_label_sets(const GKMGraph& g) {
  const std::vector<Weight> labels = g.distinct_labels();
  auto closure = [&](const std::vector<Weight>& s) {
    const TorusSubgroup h = kernel_of_weights(s, g.rank());
    std::vector<Weight> out;
    for (const Weight& w : labels)
      if (vanishes_on(w, h)) out.push_back(w);
    return out;
  };
  std::set<std::vector<Weight>> seen;
  std::deque<std::vector<Weight>> queue;
  queue.push_back(closure({}));
  seen.insert(queue.front());
  while (!queue.empty()) {
    const std::vector<Weight> c = queue.front();
    queue.pop_front();
    for (const Weight& w : labels) {
      if (std::binary_search(c.begin(), c.end(), w)) continue;
      std::vector<Weight> grown = c;
      grown.push_back(w);
      std::vector<Weight> next = closure(grown);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

StratPoset orbit_poset(const GKMGraph& g) {
  std::set<Subgraph> found;
  for (const std::vector<Weight>& closed : closed_label_sets(g)) {
    std::vector<EdgeId> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (std::binary_search(closed.begin(), closed.end(), g.edge(e).label)) edges.push_back(e);
    for (Subgraph& c : components(g, edges)) found.insert(std::move(c));
  }
  for (Subgraph& c : fixed_subgraph(g, TorusSubgroup::trivial(g.rank())).components)
    found.insert(std::move(c));

  std::vector<Subgraph> comps(found.begin(), found.end());
  std::stable_sort(comps.begin(), comps.end(), [](const Subgraph& a, const Subgraph& b) {
    if (a.vertices != b.vertices) return a.vertices < b.vertices;
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });

  StratPoset p;
  for (const Subgraph& c : comps) {
    std::vector<Weight> labels;
    for (EdgeId e : c.edges) labels.push_back(g.edge(e).label);
    auto isotropy_at = [&](VertexId v) {
      std::vector<Weight> at;
      for (EdgeId e : c.edges)
        if (g.edge(e).u == v || g.edge(e).v == v) at.push_back(g.edge(e).label);
      return kernel_of_weights(at, g.rank());
    };
    TorusSubgroup principal = isotropy_at(c.vertices.front());
    bool independent = true;
    for (VertexId v : c.vertices)
      if (isotropy_at(v) != principal) independent = false;
    p.elements.push_back(StratElement{c, kernel_of_weights(labels, g.rank()), principal, independent});
  }
  const std::size_t n = p.elements.size();
  p.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p.leq[i][j] = p.elements[j].component.contains(p.elements[i].component);
  return p;
}

std::optional<std::vector<std::size_t>> find_order_isomorphism(
    const std::vector<std::vector<bool>>& leq1, const std::vector<std::vector<bool>>& leq2,
    const std::function<bool(std::size_t, std::size_t)>& compatible) {
  const std::size_t n = leq1.size();
  if (leq2.size() != n) return std::nullopt;
  // Cheap invariants: sizes of the down-set and the up-set.
  auto profile = [n](const std::vector<std::vector<bool>>& leq, std::size_t i) {
    std::size_t down = 0, up = 0;
    for (std::size_t j = 0; j < n; ++j) {
      down += leq[j][i];
      up += leq[i][j];
    }
    return std::make_pair(down, up);
  };
  std::vector<std::vector<std::size_t>> cands(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto pi = profile(leq1, i);
    for (std::size_t j = 0; j < n; ++j)
      if (profile(leq2, j) == pi && compatible(i, j)) cands[i].push_back(j);
    if (cands[i].empty()) return std::nullopt;
  }
  // Most constrained elements first.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return cands[a].size() < cands[b].size(); });

  std::vector<std::size_t> map(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) return true;
    const std::size_t i = order[k];
    for (std::size_t j : cands[i]) {
      if (used[j]) continue;
      bool ok = true;
      for (std::size_t t = 0; t < k && ok; ++t) {
        const std::size_t a = order[t];
        ok = leq1[i][a] == leq2[j][map[a]] && leq1[a][i] == leq2[map[a]][j];
      }
      if (!ok) continue;
      map[i] = j;
      used[j] = true;
      if (rec(k + 1)) return true;
      used[j] = false;
    }
    map[i] = n;
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return map;
}

std::optional<std::vector<std::size_t>> poset_isomorphic_with_labels(const StratPoset& p1,
                                                                     const StratPoset& p2) {
  return find_order_isomorphism(p1.leq, p2.leq, [&](std::size_t i, std::size_t j) {
    return p1.elements[i].principal_isotropy == p2.elements[j].principal_isotropy;
  });
}

}  // namespace gkm
