#include "gkm/checks/oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "gkm/errors.hpp"

namespace gkm::oracle {

namespace {

IntMatrix minor_matrix(const IntMatrix& a, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) {
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = a(rows[i], cols[j]);
  return m;
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// v = c * w for some integer c (w nonzero).
bool integral_multiple(const Weight& v, const Weight& w) {
  std::size_t i = 0;
  while (w[i] == 0) ++i;
  const Rational c(v[i], w[i]);
  if (c.get_den() != 1) return false;
  for (std::size_t j = 0; j < w.size(); ++j)
    if (v[j] != c.get_num() * w[j]) return false;
  return true;
}

}  // namespace

Integer laplace_determinant(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw InputError("determinant of a non-square matrix");
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer det = 0;
  std::vector<std::size_t> rows(n - 1);
  std::iota(rows.begin(), rows.end(), 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    const Integer sub = laplace_determinant(minor_matrix(a, rows, cols));
    det += (j % 2 == 0 ? 1 : -1) * a(0, j) * sub;
  }
  return det;
}

std::vector<Integer> determinantal_invariants(const IntMatrix& a) {
  const std::size_t k_max = std::min(a.rows(), a.cols());
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= k_max; ++k) {
    Integer g = 0;
    for (const auto& rows : subsets(a.rows(), k))
      for (const auto& cols : subsets(a.cols(), k)) {
        const Integer d = laplace_determinant(minor_matrix(a, rows, cols));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) {
      out.push_back(0);
    } else {
      out.push_back(g / prev);
    }
    prev = g == 0 ? Integer(1) : g;
  }
  return out;
}

bool smith_form_consistent(const IntMatrix& a, const SmithForm& s) {
  if (s.U * a * s.V != s.D) return false;
  if (!s.D.is_diagonal()) return false;
  const std::size_t k = std::min(a.rows(), a.cols());
  if (s.diagonal.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (s.diagonal[i] != s.D(i, i) || s.diagonal[i] < 0) return false;
    if (i + 1 < k) {
      const Integer& x = s.diagonal[i];
      const Integer& y = s.diagonal[i + 1];
      if (x == 0 ? y != 0 : y % x != 0) return false;
    }
  }
  const Integer du = laplace_determinant(s.U), dv = laplace_determinant(s.V);
  if (abs(du) != 1 || abs(dv) != 1) return false;
  return s.V * s.V_inverse == IntMatrix::identity(a.cols());
}

bool character_trivial_on_kernel(const Weight& w, const std::vector<Weight>& s, std::size_t rank) {
  if (s.empty()) return w.is_zero();
  const IntMatrix a = IntMatrix::from_rows(s, rank);
  const SmithForm f = smith_normal_form(a);
  // theta = V phi; the kernel is {phi : d_i phi_i in Z}, phi_i free where
  // no invariant factor constrains it.
  Weight u = Weight::zero(rank);
  for (std::size_t j = 0; j < rank; ++j)
    for (std::size_t i = 0; i < rank; ++i) u[j] += w[i] * f.V(i, j);
  for (std::size_t j = 0; j < rank; ++j) {
    const bool constrained = j < f.diagonal.size() && f.diagonal[j] != 0;
    if (!constrained) {
      if (u[j] != 0) return false;  // nontrivial on a circle factor
    } else if (u[j] % f.diagonal[j] != 0) {
      return false;  // nontrivial on the generator e_j / d_j
    }
  }
  return true;
}

std::size_t rational_rank(const std::vector<std::vector<Rational>>& input) {
  std::vector<std::vector<Rational>> rows = input;
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      const Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

bool divisible_by_linear_form(const Polynomial& p, const Weight& w) {
  // Leading variable: the first with a nonzero coefficient. Repeatedly cancel
  // a term of highest degree in it; the remainder is free of that variable.
  std::size_t k = 0;
  while (w[k] == 0) ++k;
  const Polynomial alpha = Polynomial::linear_form(w);
  Polynomial rest = p;
  while (true) {
    const Exponent* top = nullptr;
    Rational coeff;
    for (const auto& [e, c] : rest.terms())
      if (e[k] > 0 && (!top || e[k] > (*top)[k])) {
        top = &e;
        coeff = c;
      }
    if (!top) break;
    Exponent q = *top;
    q[k] -= 1;
    rest = rest - Polynomial::monomial(q, coeff / Rational(w[k])) * alpha;
  }
  return rest.is_zero();
}

std::size_t graded_rank_by_quotients(const GKMGraph& g, std::size_t d) {
  const std::size_t r = g.rank();
  const std::vector<Exponent> top = monomials_of_degree(r, d);
  const std::vector<Exponent> low = d == 0 ? std::vector<Exponent>{} : monomials_of_degree(r, d - 1);
  const std::size_t f_unknowns = g.vertex_count() * top.size();
  const std::size_t unknowns = f_unknowns + g.edge_count() * low.size();
  std::vector<std::vector<Rational>> rows;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    for (const Exponent& t : top) {
      std::vector<Rational> row(unknowns);
      const std::size_t j = static_cast<std::size_t>(std::find(top.begin(), top.end(), t) - top.begin());
      row[ed.u * top.size() + j] += 1;
      row[ed.v * top.size() + j] -= 1;
      // coefficient of t in label * g_e
      for (std::size_t i = 0; i < r; ++i) {
        if (t[i] == 0 || ed.label[i] == 0) continue;
        Exponent q = t;
        q[i] -= 1;
        const std::size_t l = static_cast<std::size_t>(std::find(low.begin(), low.end(), q) - low.begin());
        row[f_unknowns + e * low.size() + l] -= Rational(ed.label[i]);
      }
      rows.push_back(std::move(row));
    }
  }
  return unknowns - rational_rank(rows);
}

std::vector<Subgraph> strata_components_by_subsets(const GKMGraph& g) {
  const std::vector<Weight> labels = g.distinct_labels();
  if (labels.size() > 12) throw InputError("subset oracle limited to 12 distinct labels");
  std::set<Subgraph> found;
  for (unsigned long mask = 0; mask < (1ul << labels.size()); ++mask) {
    std::vector<Weight> s;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (mask >> i & 1) s.push_back(labels[i]);
    for (const Subgraph& c : fixed_subgraph(g, kernel_of_weights(s, g.rank())).components) found.insert(c);
  }
  for (const Subgraph& c : fixed_subgraph(g, TorusSubgroup::trivial(g.rank())).components) found.insert(c);
  return {found.begin(), found.end()};
}

namespace {

// Number of star bijections along e satisfying `ok(moved, image)`; stops
// after `limit` if nonzero.
template <class Pred>
unsigned long count_star_bijections(const GKMGraph& g, EdgeId e, Pred ok, unsigned long limit = 0) {
  const Edge& ed = g.edge(e);
  const std::vector<EdgeId>& tail = g.incident(ed.u);
  std::vector<EdgeId> head = g.incident(ed.v);
  std::sort(head.begin(), head.end());
  unsigned long count = 0;
  do {
    bool good = true;
    for (std::size_t k = 0; k < tail.size() && good; ++k) {
      if ((tail[k] == e) != (head[k] == e)) good = false;
      else if (tail[k] != e && !ok(tail[k], head[k])) good = false;
    }
    if (good && ++count == limit) return count;
  } while (std::next_permutation(head.begin(), head.end()));
  return count;
}

}  // namespace

Integer count_connections_brute_force(const GKMGraph& g, SignConvention convention) {
  Integer total = 1;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Weight& alpha = g.edge(e).label;
    total *= count_star_bijections(g, e, [&](EdgeId moved, EdgeId image) {
      const Weight& a = g.edge(moved).label;
      const Weight& b = g.edge(image).label;
      if (integral_multiple(b - a, alpha)) return true;
      return convention == SignConvention::PlusOrMinus && integral_multiple(b + a, alpha);
    });
  }
  return total;
}

bool signed_connection_brute_force(const GKMGraph& g) {
  const std::size_t m = g.edge_count();
  if (m == 0) return true;
  for (unsigned long mask = 0; mask < (1ul << (m - 1)); ++mask) {
    std::vector<int> signs(m, 1);
    for (std::size_t e = 1; e < m; ++e)
      if (mask >> (e - 1) & 1) signs[e] = -1;
    const SignedStructure s = SignedStructure::from_signs(g, signs);
    bool all = true;
    for (EdgeId e = 0; e < m && all; ++e) {
      const Edge& ed = g.edge(e);
      const Weight alpha = s.weight_from(g, e, ed.u);
      all = count_star_bijections(
                g, e,
                [&](EdgeId moved, EdgeId image) {
                  return integral_multiple(s.weight_from(g, image, ed.v) - s.weight_from(g, moved, ed.u), alpha);
                },
                1) > 0;
    }
    if (all) return true;
  }
  return false;
}

bool cycles_close(const GKMGraph& g, const SignedStructure& s, const MomentumRealization& m) {
  const std::size_t r = g.rank();
  // Displacement from vertex 0 along a breadth-first spanning tree.
  std::vector<std::optional<Point>> disp(g.vertex_count());
  std::vector<bool> tree(g.edge_count(), false);
  disp[0] = Point(r);
  std::deque<VertexId> queue{0};
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident(x)) {
      const VertexId y = g.edge(e).other(x);
      if (disp[y]) continue;
      const Weight step = s.weight_from(g, e, x);
      Point p = *disp[x];
      for (std::size_t i = 0; i < r; ++i) p[i] += m.lengths[e] * step[i];
      disp[y] = std::move(p);
      tree[e] = true;
      queue.push_back(y);
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (!disp[ed.u] || !disp[ed.v]) return false;
    if (tree[e]) continue;
    // Fundamental cycle: tree path to u, edge u -> v, tree path back from v.
    for (std::size_t i = 0; i < r; ++i)
      if ((*disp[ed.u])[i] + m.lengths[e] * s.oriented(e)[i] - (*disp[ed.v])[i] != 0) return false;
  }
  return true;
}

std::optional<Rational> localization_at_points(const GKMGraph& g, const SignedStructure& s,
                                               const CharClassExpr& expr, std::size_t samples) {
  const std::size_t r = g.rank();
  const std::size_t n = g.valence();
  std::optional<Rational> value;
  std::size_t taken = 0;
  for (long seed = 1; taken < samples && seed < 1000; ++seed) {
    Point x(r);
    for (std::size_t i = 0; i < r; ++i) x[i] = make_rational(seed * 7 + static_cast<long>(i * i * 13 + i * 5) + 3, static_cast<long>(i + 2));
    Rational total = 0;
    bool degenerate = false;
    for (VertexId v = 0; v < g.vertex_count() && !degenerate; ++v) {
      std::vector<Rational> a;
      for (EdgeId e : g.incident(v)) {
        const Weight w = s.weight_from(g, e, v);
        Rational t = 0;
        for (std::size_t i = 0; i < r; ++i) t += Rational(w[i]) * x[i];
        if (t == 0) degenerate = true;
        a.push_back(t);
      }
      if (degenerate) break;
      auto elementary = [&](const std::vector<Rational>& vals, std::size_t k) {
        std::vector<Rational> e(k + 1, 0);
        e[0] = 1;
        for (const Rational& val : vals)
          for (std::size_t j = k; j >= 1; --j) e[j] += e[j - 1] * val;
        return e;
      };
      std::vector<Rational> sq;
      Rational euler = 1;
      for (const Rational& t : a) {
        sq.push_back(t * t);
        euler *= t;
      }
      const std::vector<Rational> c = elementary(a, n), p = elementary(sq, n / 2);
      Rational val = 0;
      for (const auto& [mono, coeff] : expr.terms()) {
        Rational term(coeff);
        for (const auto& [sym, power] : mono) {
          const Rational& base = sym.kind == ClassSymbol::Kind::Chern       ? c[sym.index]
                                 : sym.kind == ClassSymbol::Kind::Pontryagin ? p[sym.index]
                                                                              : euler;
          for (unsigned k = 0; k < power; ++k) term *= base;
        }
        val += term;
      }
      total += val / euler;
    }
    if (degenerate) continue;
    ++taken;
    if (value && *value != total) return std::nullopt;
    value = total;
  }
  return value;
}

}  // namespace gkm::oracle
