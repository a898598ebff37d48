#include "gkm/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <utility>

#include "gkm/errors.hpp"

namespace gkm {

namespace {

using PairKey = std::pair<VertexId, VertexId>;

PairKey key(VertexId a, VertexId b) { return a < b ? PairKey{a, b} : PairKey{b, a}; }

// Sorted label multisets between vertex pairs and at single vertices.
struct LabelIndex {
  std::map<PairKey, std::vector<Weight>> between;
  std::vector<std::vector<Weight>> at;

  explicit LabelIndex(const GKMGraph& g) : at(g.vertex_count()) {
    for (const Edge& e : g.edges()) {
      between[key(e.u, e.v)].push_back(e.label);
      at[e.u].push_back(e.label);
      if (e.v != e.u) at[e.v].push_back(e.label);
    }
    for (auto& [k, v] : between) std::sort(v.begin(), v.end());
    for (auto& v : at) std::sort(v.begin(), v.end());
  }

  const std::vector<Weight>& labels(VertexId a, VertexId b) const {
    static const std::vector<Weight> kNone;
    auto it = between.find(key(a, b));
    return it == between.end() ? kNone : it->second;
  }
};

std::vector<VertexId> bfs_order(const GKMGraph& g) {
  std::vector<VertexId> order;
  std::vector<bool> seen(g.vertex_count(), false);
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    std::queue<VertexId> q;
    q.push(root);
    seen[root] = true;
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      order.push_back(x);
      for (EdgeId e : g.incident(x)) {
        VertexId y = g.edge(e).other(x);
        if (!seen[y]) {
          seen[y] = true;
          q.push(y);
        }
      }
    }
  }
  return order;
}

class StrictMatcher {
 public:
  StrictMatcher(const GKMGraph& g1, const GKMGraph& g2)
      : g1_(g1), g2_(g2), idx1_(g1), idx2_(g2), order_(bfs_order(g1)),
        map_(g1.vertex_count(), kUnset), used_(g2.vertex_count(), false) {
    for (VertexId x = 0; x < g1.vertex_count(); ++x) {
      std::vector<VertexId> cands;
      if (auto same = g2.find_vertex(g1.vertex_name(x)))
        if (idx2_.at[*same] == idx1_.at[x]) cands.push_back(*same);
      for (VertexId y = 0; y < g2.vertex_count(); ++y)
        if (idx2_.at[y] == idx1_.at[x] && (cands.empty() || cands.front() != y))
          cands.push_back(y);
      candidates_.push_back(std::move(cands));
    }
  }

  std::optional<GraphIsomorphism> run() {
    if (!extend(0)) return std::nullopt;
    GraphIsomorphism iso;
    iso.vertex_map = map_;
    std::vector<bool> edge_used(g2_.edge_count(), false);
    for (const Edge& e : g1_.edges()) {
      const VertexId a = map_[e.u];
      const VertexId b = map_[e.v];
      for (EdgeId f = 0; f < g2_.edge_count(); ++f) {
        const Edge& ef = g2_.edge(f);
        if (!edge_used[f] && key(ef.u, ef.v) == key(a, b) && ef.label == e.label) {
          edge_used[f] = true;
          iso.edge_map.push_back(f);
          break;
        }
      }
    }
    return iso;
  }

 private:
  static constexpr VertexId kUnset = static_cast<VertexId>(-1);

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const VertexId x = order_[depth];
    for (VertexId y : candidates_[x]) {
      if (used_[y]) continue;
      map_[x] = y;
      bool ok = true;
      for (std::size_t k = 0; k <= depth && ok; ++k) {
        const VertexId w = order_[k];
        ok = idx1_.labels(x, w) == idx2_.labels(y, map_[w]);
      }
      if (ok) {
        used_[y] = true;
        if (extend(depth + 1)) return true;
        used_[y] = false;
      }
      map_[x] = kUnset;
    }
    return false;
  }

  const GKMGraph& g1_;
  const GKMGraph& g2_;
  LabelIndex idx1_;
  LabelIndex idx2_;
  std::vector<VertexId> order_;
  std::vector<std::vector<VertexId>> candidates_;
  std::vector<VertexId> map_;
  std::vector<bool> used_;
};

bool same_shape(const GKMGraph& g1, const GKMGraph& g2) {
  return g1.rank() == g2.rank() && g1.valence() == g2.valence() &&
         g1.vertex_count() == g2.vertex_count() && g1.edge_count() == g2.edge_count();
}

IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t a = 0, ra = 0; a < n; ++a) {
        if (a == i) continue;
        for (std::size_t b = 0, cb = 0; b < n; ++b) {
          if (b == j) continue;
          minor(ra, cb++) = m(a, b);
        }
        ++ra;
      }
      Integer c = determinant(minor);
      adj(j, i) = (i + j) % 2 ? Integer(-c) : c;
    }
  return adj;
}

// Greedy maximal independent subset, preserving order.
std::vector<Weight> independent_subset(const std::vector<Weight>& labels, std::size_t r) {
  std::vector<Weight> basis;
  for (const Weight& w : labels) {
    std::vector<Weight> trial = basis;
    trial.push_back(w);
    if (rank(IntMatrix::from_rows(trial, r)) == trial.size()) basis = std::move(trial);
  }
  return basis;
}

}  // namespace

std::optional<GraphIsomorphism> isomorphic_strict(const GKMGraph& g1, const GKMGraph& g2) {
  if (!same_shape(g1, g2)) return std::nullopt;
  return StrictMatcher(g1, g2).run();
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const Integer det = determinant(m);
  if (det != 1 && det != -1) throw InputError("matrix is not unimodular");
  IntMatrix inv = adjugate(m);
  if (det == -1)
    for (std::size_t i = 0; i < inv.rows(); ++i) inv.negate_row(i);
  return inv;
}

GKMGraph transform_labels(const GKMGraph& g, const IntMatrix& m) {
  if (m.rows() != g.rank() || m.cols() != g.rank()) throw InputError("transform size does not match rank");
  GKMGraph out(g.rank(), g.valence());
  for (const std::string& name : g.vertex_names()) out.add_vertex(name);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v, m.apply(e.label));
  return out;
}

GKMGraph permute_vertices(const GKMGraph& g, const std::vector<VertexId>& perm) {
  if (perm.size() != g.vertex_count()) throw InputError("permutation size mismatch");
  std::vector<VertexId> inverse(perm.size());
  for (VertexId v = 0; v < perm.size(); ++v) inverse.at(perm[v]) = v;
  GKMGraph out(g.rank(), g.valence());
  for (VertexId v = 0; v < perm.size(); ++v) out.add_vertex(g.vertex_name(inverse[v]));
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v], e.label);
  return out;
}

std::optional<LatticeIsomorphism> isomorphic_up_to_lattice_aut(const GKMGraph& g1,
                                                               const GKMGraph& g2) {
  if (!same_shape(g1, g2)) return std::nullopt;
  const std::size_t r = g1.rank();
  if (auto iso = isomorphic_strict(g1, g2)) return LatticeIsomorphism{*iso, IntMatrix::identity(r)};

  const std::vector<Weight> labels2 = g2.distinct_labels();
  const std::vector<Weight> basis = independent_subset(g1.distinct_labels(), r);
  const std::size_t k = basis.size();
  if (k == 0 || independent_subset(labels2, r).size() != k) return std::nullopt;

  // P1 * B = [C; 0] with B the r x k matrix of basis columns.
  const HermiteForm h1 = hermite_normal_form(IntMatrix::from_columns(basis, r));
  IntMatrix c(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) c(i, j) = h1.H(i, j);
  const Integer det_c = determinant(c);
  const IntMatrix adj_c = adjugate(c);

  std::set<IntMatrix> tried;
  std::vector<std::size_t> pick(k);
  std::vector<int> signs(k, 1);
  std::vector<bool> taken(labels2.size(), false);

  std::optional<LatticeIsomorphism> found;
  // Ordered choice of k distinct target labels with signs; the sign of the
  // first image is fixed because M and -M act identically on unsigned labels.
  auto attempt = [&]() {
    std::vector<Weight> images;
    for (std::size_t i = 0; i < k; ++i) images.push_back(labels2[pick[i]].scaled(signs[i]));
    const HermiteForm h2 = hermite_normal_form(IntMatrix::from_columns(images, r));
    if (h2.rank != k) return;
    // A = C' * C^{-1} must be an integral unimodular k x k matrix.
    IntMatrix cp(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) cp(i, j) = h2.H(i, j);
    IntMatrix a = cp * adj_c;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        if (a(i, j) % det_c != 0) return;
        a(i, j) /= det_c;
      }
    const Integer det_a = determinant(a);
    if (det_a != 1 && det_a != -1) return;
    IntMatrix n = IntMatrix::identity(r);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) n(i, j) = a(i, j);
    IntMatrix m = unimodular_inverse(h2.U) * n * h1.U;
    if (!tried.insert(m).second) return;
    if (auto iso = isomorphic_strict(transform_labels(g1, m), g2))
      found = LatticeIsomorphism{*iso, m};
  };

  auto choose = [&](auto&& self, std::size_t depth) -> void {
    if (found) return;
    if (depth == k) {
      attempt();
      return;
    }
    for (std::size_t t = 0; t < labels2.size() && !found; ++t) {
      if (taken[t]) continue;
      taken[t] = true;
      pick[depth] = t;
      for (int s : {1, -1}) {
        if (depth == 0 && s == -1) continue;
        signs[depth] = s;
        self(self, depth + 1);
        if (found) break;
      }
      taken[t] = false;
    }
  };
  choose(choose, 0);
  return found;
}

bool is_strict_isomorphism(const GKMGraph& g1, const GKMGraph& g2, const GraphIsomorphism& iso) {
  LatticeIsomorphism l{iso, IntMatrix::identity(g1.rank())};
  return is_lattice_isomorphism(g1, g2, l);
}

bool is_lattice_isomorphism(const GKMGraph& g1, const GKMGraph& g2, const LatticeIsomorphism& iso) {
  if (!same_shape(g1, g2)) return false;
  const auto& vm = iso.map.vertex_map;
  const auto& em = iso.map.edge_map;
  if (vm.size() != g1.vertex_count() || em.size() != g1.edge_count()) return false;
  if (iso.transform.rows() != g1.rank() || iso.transform.cols() != g1.rank()) return false;
  const Integer det = determinant(iso.transform);
  if (det != 1 && det != -1) return false;
  std::vector<bool> vseen(g2.vertex_count(), false);
  for (VertexId v : vm) {
    if (v >= g2.vertex_count() || vseen[v]) return false;
    vseen[v] = true;
  }
  std::vector<bool> eseen(g2.edge_count(), false);
  for (EdgeId e = 0; e < em.size(); ++e) {
    const EdgeId f = em[e];
    if (f >= g2.edge_count() || eseen[f]) return false;
    eseen[f] = true;
    const Edge& a = g1.edge(e);
    const Edge& b = g2.edge(f);
    if (key(vm[a.u], vm[a.v]) != key(b.u, b.v)) return false;
    if (iso.transform.apply(a.label).canonical_sign() != b.label) return false;
  }
  return true;
}

}  // namespace gkm
