#include "gkm/moment.hpp"

#include <algorithm>
#include <functional>

#include "gkm/connection.hpp"
#include "gkm/errors.hpp"

namespace gkm {

namespace {

std::size_t position_var(std::size_t r, VertexId v, std::size_t i) { return (v - 1) * r + i; }

}  // namespace

lp::LinearSystem realization_system(const GKMGraph& g, const SignedStructure& s,
                                    const std::vector<LengthConstraint>& extra) {
  if (g.vertex_count() == 0) throw InputError("empty graph");
  if (s.edge_count() != g.edge_count()) throw InputError("signed structure does not match the graph");
  const std::size_t r = g.rank();
  const std::size_t offset = (g.vertex_count() - 1) * r;
  lp::LinearSystem sys;
  sys.variables = offset + g.edge_count();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const Weight& alpha = s.oriented(e);
    for (std::size_t i = 0; i < r; ++i) {
      lp::Row row{std::vector<Rational>(sys.variables), 0};
      if (ed.v != 0) row.a[position_var(r, ed.v, i)] += 1;
      if (ed.u != 0) row.a[position_var(r, ed.u, i)] -= 1;
      row.a[offset + e] = -Rational(alpha[i]);
      sys.equalities.push_back(std::move(row));
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    lp::Row row{std::vector<Rational>(sys.variables), 1};
    row.a[offset + e] = 1;
    sys.inequalities.push_back(std::move(row));
  }
  for (const LengthConstraint& c : extra) {
    if (c.coefficients.size() != g.edge_count())
      throw InputError("length constraint needs one coefficient per edge");
    lp::Row row{std::vector<Rational>(sys.variables), c.bound};
    for (EdgeId e = 0; e < g.edge_count(); ++e) row.a[offset + e] = c.coefficients[e];
    sys.inequalities.push_back(std::move(row));
  }
  return sys;
}

RealizationResult realize(const GKMGraph& g, const SignedStructure& s,
                          const std::vector<LengthConstraint>& extra) {
  const lp::LinearSystem sys = realization_system(g, s, extra);
  const lp::Result res = lp::solve(sys);
  const std::size_t r = g.rank();
  const std::size_t offset = (g.vertex_count() - 1) * r;
  RealizationResult out;
  if (res.feasible) {
    MomentumRealization m;
    m.positions.assign(g.vertex_count(), Point(r));
    for (VertexId v = 1; v < g.vertex_count(); ++v)
      for (std::size_t i = 0; i < r; ++i) m.positions[v][i] = res.point[position_var(r, v, i)];
    for (EdgeId e = 0; e < g.edge_count(); ++e) m.lengths.push_back(res.point[offset + e]);
    out.realization = std::move(m);
    return out;
  }
  const lp::Certificate& c = *res.certificate;
  InfeasibilityCertificate cert;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Point y(r);
    for (std::size_t i = 0; i < r; ++i) y[i] = c.equality_multipliers[e * r + i];
    cert.flow.push_back(std::move(y));
    cert.length_multipliers.push_back(c.inequality_multipliers[e]);
  }
  for (std::size_t k = 0; k < extra.size(); ++k)
    cert.extra_multipliers.push_back(c.inequality_multipliers[g.edge_count() + k]);
  out.certificate = std::move(cert);
  return out;
}

std::string InfeasibilityCertificate::describe(const GKMGraph& g) const {
  std::string out = "no positive edge lengths close up along the weighted cycle:";
  for (EdgeId e = 0; e < flow.size(); ++e) {
    bool used = length_multipliers[e] != 0;
    for (const Rational& x : flow[e]) used = used || x != 0;
    if (!used) continue;
    const Edge& ed = g.edge(e);
    out += "\n  edge " + std::to_string(e) + " " + g.vertex_name(ed.u) + "-" + g.vertex_name(ed.v) +
           " " + ed.label.to_string() + ": multiplier (";
    for (std::size_t i = 0; i < flow[e].size(); ++i) out += (i ? "," : "") + flow[e][i].get_str();
    out += "), length weight " + length_multipliers[e].get_str();
  }
  return out;
}

bool is_valid_realization(const GKMGraph& g, const SignedStructure& s, const MomentumRealization& m) {
  if (m.positions.size() != g.vertex_count() || m.lengths.size() != g.edge_count()) return false;
  for (const Point& p : m.positions)
    if (p.size() != g.rank()) return false;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (m.lengths[e] <= 0) return false;
    const Edge& ed = g.edge(e);
    for (std::size_t i = 0; i < g.rank(); ++i)
      if (m.positions[ed.v][i] - m.positions[ed.u][i] != m.lengths[e] * s.oriented(e)[i]) return false;
  }
  return true;
}

MomentumRealization normalized(const MomentumRealization& m) {
  if (m.lengths.empty()) return m;
  const Rational shortest = *std::min_element(m.lengths.begin(), m.lengths.end());
  if (shortest <= 0) throw InputError("realization has a non-positive edge length");
  MomentumRealization out = m;
  const Point& base = m.positions.front();
  for (Point& p : out.positions)
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = base[i] + (p[i] - base[i]) / shortest;
  for (Rational& l : out.lengths) l /= shortest;
  return out;
}

namespace {

SignSearch search_signs(const GKMGraph& g, bool exhaustive) {
  SignSearch out;
  const std::size_t m = g.edge_count();
  if (m > 24)
    out.warnings.push_back("search over 2^" + std::to_string(m - 1) +
                           " sign structures may be slow (more than 24 edges)");
  if (m == 0) return out;
  // Signed lengths lambda_e = sign_e * l_e: the lambdas for which positions
  // exist form a linear space, parametrized by its free coordinates.
  const std::size_t r = g.rank();
  const std::size_t offset = (g.vertex_count() - 1) * r;
  std::vector<lp::Row> eqs;
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    for (std::size_t i = 0; i < r; ++i) {
      lp::Row row{std::vector<Rational>(offset + m), 0};
      if (ed.v != 0) row.a[position_var(r, ed.v, i)] += 1;
      if (ed.u != 0) row.a[position_var(r, ed.u, i)] -= 1;
      row.a[offset + e] = -Rational(ed.label[i]);
      eqs.push_back(std::move(row));
    }
  }
  const lp::AffineSpace space = *solve_equalities(offset + m, eqs);
  const std::size_t d = space.directions.size();
  auto lambda_row = [&](EdgeId e) {
    std::vector<Rational> a(d);
    for (std::size_t k = 0; k < d; ++k) a[k] = space.directions[k][offset + e];
    return a;
  };

  const std::vector<EdgeId> order = canonical_edge_order(g);
  std::vector<int> signs(m, 1);
  lp::LinearSystem probe;
  probe.variables = d;
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == m) {
      out.feasible_signs.push_back(signs);
      if (!out.first) {
        SignedStructure s = SignedStructure::from_signs(g, signs);
        RealizationResult res = realize(g, s);
        if (!res.feasible())
          throw InconsistentDataError("internal error: sign class passed the search but is infeasible");
        out.first = SignedRealization{std::move(s), std::move(*res.realization)};
      }
      return !exhaustive;
    }
    const EdgeId e = order[k];
    for (int sign : {1, -1}) {
      if (k == 0 && sign == -1) continue;  // quotient by global negation
      signs[e] = sign;
      std::vector<Rational> a = lambda_row(e);
      for (Rational& x : a) x *= sign;
      probe.inequalities.push_back(lp::Row{std::move(a), 1});
      const bool ok = lp::solve(probe).feasible;
      bool done = ok && rec(k + 1);
      probe.inequalities.pop_back();
      if (done) return true;
    }
    signs[e] = 1;
    return false;
  };
  rec(0);
  return out;
}

}  // namespace

SignSearch realize_any_signs(const GKMGraph& g) { return search_signs(g, false); }

SignSearch feasible_sign_classes(const GKMGraph& g) { return search_signs(g, true); }

XRay xray(const GKMGraph& g, const SignedStructure& s, const MomentumRealization& m) {
  if (!is_valid_realization(g, s, m)) throw InputError("invalid realization for this signed graph");
  XRay x;
  x.poset = orbit_poset(g);
  for (const StratElement& el : x.poset.elements) {
    std::vector<Point> pts;
    for (VertexId v : el.component.vertices) pts.push_back(m.positions[v]);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    x.polytopes.push_back(std::move(pts));
  }
  return x;
}

XRay normalize_xray(const XRay& x) {
  std::vector<Point> all;
  for (const auto& poly : x.polytopes) all.insert(all.end(), poly.begin(), poly.end());
  if (all.empty()) return x;
  const Point base = *std::min_element(all.begin(), all.end());
  Integer num_gcd = 0, den_lcm = 1;
  for (const Point& p : all)
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Rational t = p[i] - base[i];
      if (t == 0) continue;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.get_den_mpz_t());
    }
  const Rational scale = num_gcd == 0 ? Rational(1) : Rational(den_lcm) / Rational(num_gcd);
  XRay out = x;
  for (auto& poly : out.polytopes) {
    for (Point& p : poly)
      for (std::size_t i = 0; i < p.size(); ++i) p[i] = (p[i] - base[i]) * scale;
    std::sort(poly.begin(), poly.end());
  }
  return out;
}

bool xray_equal(const XRay& x1, const XRay& x2, XRayComparison mode) {
  const XRay a = mode == XRayComparison::Exact ? x1 : normalize_xray(x1);
  const XRay b = mode == XRayComparison::Exact ? x2 : normalize_xray(x2);
  return find_order_isomorphism(a.poset.leq, b.poset.leq, [&](std::size_t i, std::size_t j) {
           return a.polytopes[i] == b.polytopes[j];
         }).has_value();
}

}  // namespace gkm
