#include "gkm/connection.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

#include "gkm/errors.hpp"

namespace gkm {

namespace {

// Admissible targets per tail position; the position holding e itself is
// forced onto e.
using Candidates = std::vector<std::vector<EdgeId>>;

Candidates unsigned_candidates(const GKMGraph& g, EdgeId e, SignConvention convention) {
  const Edge& ed = g.edge(e);
  const auto& tail = g.incident(ed.u);
  const auto& head = g.incident(ed.v);
  Candidates out(tail.size());
  for (std::size_t k = 0; k < tail.size(); ++k) {
    if (tail[k] == e) {
      out[k] = {e};
      continue;
    }
    const Weight& moved = g.edge(tail[k]).label;
    for (EdgeId f : head) {
      if (f == e) continue;
      const Weight& target = g.edge(f).label;
      bool ok = integer_multiple_of(target - moved, ed.label);
      if (!ok && convention == SignConvention::PlusOrMinus)
        ok = integer_multiple_of(target + moved, ed.label);
      if (ok) out[k].push_back(f);
    }
  }
  return out;
}

Candidates signed_candidates(const GKMGraph& g, const SignedStructure& s, EdgeId e) {
  const Edge& ed = g.edge(e);
  const auto& tail = g.incident(ed.u);
  const auto& head = g.incident(ed.v);
  const Weight alpha = s.weight_from(g, e, ed.u);
  Candidates out(tail.size());
  for (std::size_t k = 0; k < tail.size(); ++k) {
    if (tail[k] == e) {
      out[k] = {e};
      continue;
    }
    const Weight moved = s.weight_from(g, tail[k], ed.u);
    for (EdgeId f : head) {
      if (f == e) continue;
      if (integer_multiple_of(s.weight_from(g, f, ed.v) - moved, alpha)) out[k].push_back(f);
    }
  }
  return out;
}

// Visits every bijection compatible with `cands`, in lexicographic order.
// The visitor returns false to stop.
void for_each_matching(const Candidates& cands, const std::function<bool(const std::vector<EdgeId>&)>& visit) {
  std::vector<EdgeId> chosen(cands.size());
  std::vector<EdgeId> used;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (stop) return;
    if (k == cands.size()) {
      if (!visit(chosen)) stop = true;
      return;
    }
    for (EdgeId f : cands[k]) {
      if (std::find(used.begin(), used.end(), f) != used.end()) continue;
      chosen[k] = f;
      used.push_back(f);
      rec(k + 1);
      used.pop_back();
      if (stop) return;
    }
  };
  rec(0);
}

std::optional<std::vector<EdgeId>> first_matching(const Candidates& cands) {
  std::optional<std::vector<EdgeId>> out;
  for_each_matching(cands, [&](const std::vector<EdgeId>& m) {
    out = m;
    return false;
  });
  return out;
}

}  // namespace

EdgeId Connection::transport(const GKMGraph& g, EdgeId along, VertexId from, EdgeId moved) const {
  const Edge& ed = g.edge(along);
  const auto& forward = images_.at(along);
  if (from == ed.u) {
    const auto& tail = g.incident(ed.u);
    auto it = std::find(tail.begin(), tail.end(), moved);
    if (it == tail.end()) throw InputError("edge is not incident to the transport origin");
    return forward.at(static_cast<std::size_t>(it - tail.begin()));
  }
  if (from != ed.v) throw InputError("transport origin is not an endpoint of the edge");
  auto it = std::find(forward.begin(), forward.end(), moved);
  if (it == forward.end()) throw InputError("edge is not incident to the transport origin");
  return g.incident(ed.u).at(static_cast<std::size_t>(it - forward.begin()));
}

std::vector<EdgeId> canonical_edge_order(const GKMGraph& g) {
  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](EdgeId e) {
    const Edge& ed = g.edge(e);
    return std::make_tuple(std::min(ed.u, ed.v), std::max(ed.u, ed.v), ed.label, e);
  };
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return key(a) < key(b); });
  return order;
}

ConnectionEnumeration enumerate_unsigned_connections(const GKMGraph& g, SignConvention convention,
                                                     std::size_t max_listed) {
  ConnectionEnumeration out;
  out.count = 1;
  std::vector<std::vector<std::vector<EdgeId>>> per_edge(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for_each_matching(unsigned_candidates(g, e, convention), [&](const std::vector<EdgeId>& m) {
      per_edge[e].push_back(m);
      return true;
    });
    out.count *= static_cast<unsigned long>(per_edge[e].size());
  }
  if (out.count == 0) return out;

  // Mixed-radix walk, last edge fastest.
  std::vector<std::size_t> digit(g.edge_count(), 0);
  while (out.connections.size() < max_listed) {
    std::vector<std::vector<EdgeId>> images(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) images[e] = per_edge[e][digit[e]];
    out.connections.emplace_back(std::move(images));
    bool carry = true;
    for (std::size_t i = g.edge_count(); i > 0 && carry;) {
      --i;
      if (++digit[i] < per_edge[i].size()) {
        carry = false;
      } else {
        digit[i] = 0;
      }
    }
    if (carry) break;
  }
  out.truncated = out.count > out.connections.size();
  return out;
}

SignedConnectionSearch exists_signed_structure_with_connection(const GKMGraph& g) {
  SignedConnectionSearch out;
  const std::size_t m = g.edge_count();
  if (m > 24)
    out.warnings.push_back("search over 2^" + std::to_string(m - 1) +
                           " sign structures may be slow (more than 24 edges)");
  const std::vector<EdgeId> order = canonical_edge_order(g);
  std::vector<std::size_t> position(m);
  for (std::size_t k = 0; k < m; ++k) position[order[k]] = k;

  // An edge's condition depends on the signs of every edge at either end;
  // test it as soon as the last of those is fixed.
  std::vector<std::vector<EdgeId>> ready_at(m);
  for (EdgeId e = 0; e < m; ++e) {
    std::size_t last = position[e];
    for (VertexId x : {g.edge(e).u, g.edge(e).v})
      for (EdgeId f : g.incident(x)) last = std::max(last, position[f]);
    ready_at[last].push_back(e);
  }

  std::vector<int> signs(m, 1);
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == m) {
      ++out.complete_sign_structures;
      SignedStructure s = SignedStructure::from_signs(g, signs);
      std::vector<std::vector<EdgeId>> images(m);
      for (EdgeId e = 0; e < m; ++e) images[e] = *first_matching(signed_candidates(g, s, e));
      out.witness = SignedConnectionWitness{std::move(s), Connection(std::move(images))};
      return true;
    }
    for (int sign : {1, -1}) {
      if (k == 0 && sign == -1) continue;  // quotient by global negation
      signs[order[k]] = sign;
      // Edges whose stars are fully signed must admit a compatible bijection.
      SignedStructure partial = SignedStructure::from_signs(g, signs);
      bool ok = true;
      for (EdgeId e : ready_at[k]) {
        if (!first_matching(signed_candidates(g, partial, e))) {
          ok = false;
          break;
        }
      }
      if (ok && rec(k + 1)) return true;
    }
    signs[order[k]] = 1;
    return false;
  };
  rec(0);
  return out;
}

bool check_connection(const GKMGraph& g, const SignedStructure& s, const Connection& nabla) {
  const auto& images = nabla.images();
  if (images.size() != g.edge_count() || s.edge_count() != g.edge_count())
    throw InputError("connection does not cover every edge");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const auto& tail = g.incident(ed.u);
    const auto& head = g.incident(ed.v);
    if (images[e].size() != tail.size())
      throw InputError("missing star bijection on edge " + std::to_string(e));
    std::vector<EdgeId> sorted_img = images[e];
    std::vector<EdgeId> sorted_head = head;
    std::sort(sorted_img.begin(), sorted_img.end());
    std::sort(sorted_head.begin(), sorted_head.end());
    if (sorted_img != sorted_head)
      throw InputError("transport along edge " + std::to_string(e) + " is not a bijection of stars");
    for (std::size_t k = 0; k < tail.size(); ++k)
      if ((tail[k] == e) != (images[e][k] == e))
        throw InputError("transport along edge " + std::to_string(e) + " does not fix the edge");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const Weight alpha = s.weight_from(g, e, ed.u);
    const auto& tail = g.incident(ed.u);
    for (std::size_t k = 0; k < tail.size(); ++k) {
      const Weight moved = s.weight_from(g, tail[k], ed.u);
      const Weight image = s.weight_from(g, images[e][k], ed.v);
      if (!integer_multiple_of(image - moved, alpha)) return false;
    }
  }
  return true;
}

}  // namespace gkm
