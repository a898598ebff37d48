#include "gkm/linear_feasibility.hpp"

#include <map>

#include "gkm/errors.hpp"

namespace gkm::lp {

namespace {

using Vec = std::vector<Rational>;

// A derived constraint together with the multipliers producing it from
// the original system.
struct Tracked {
  Vec a;
  Rational b;
  Vec y;
  Vec z;
};

void axpy(Vec& dst, const Rational& f, const Vec& src) {
  if (f == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += f * src[i];
}

Tracked combine(const Tracked& p, const Rational& fp, const Tracked& q, const Rational& fq) {
  Tracked t{Vec(p.a.size()), fp * p.b + fq * q.b, Vec(p.y.size()), Vec(p.z.size())};
  axpy(t.a, fp, p.a);
  axpy(t.a, fq, q.a);
  axpy(t.y, fp, p.y);
  axpy(t.y, fq, q.y);
  axpy(t.z, fp, p.z);
  axpy(t.z, fq, q.z);
  return t;
}

bool all_zero(const Vec& v) {
  for (const Rational& x : v)
    if (x != 0) return false;
  return true;
}

void check_shape(const LinearSystem& s) {
  for (const Row& r : s.equalities)
    if (r.a.size() != s.variables) throw InputError("equality row has the wrong length");
  for (const Row& r : s.inequalities)
    if (r.a.size() != s.variables) throw InputError("inequality row has the wrong length");
}

struct Reduced {
  std::vector<Tracked> rows;        // reduced row echelon form, nonzero rows
  std::vector<std::size_t> pivots;  // pivot column per row
  std::vector<std::size_t> free;
  std::optional<Certificate> inconsistent;
};

Reduced reduce(std::size_t n, const std::vector<Row>& eqs, std::size_t inequality_count) {
  const std::size_t m = eqs.size();
  std::vector<Tracked> rows;
  for (std::size_t i = 0; i < m; ++i) {
    Tracked t{eqs[i].a, eqs[i].b, Vec(m), Vec(inequality_count)};
    t.y[i] = 1;
    rows.push_back(std::move(t));
  }
  Reduced out;
  std::size_t cur = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t r = cur;
    while (r < rows.size() && rows[r].a[col] == 0) ++r;
    if (r == rows.size()) {
      out.free.push_back(col);
      continue;
    }
    std::swap(rows[cur], rows[r]);
    const Rational inv = 1 / rows[cur].a[col];
    rows[cur] = combine(rows[cur], inv, rows[cur], 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != cur && rows[i].a[col] != 0) rows[i] = combine(rows[i], 1, rows[cur], -rows[i].a[col]);
    out.pivots.push_back(col);
    ++cur;
  }
  for (std::size_t i = cur; i < rows.size(); ++i) {
    if (rows[i].b != 0) {
      const Rational f = 1 / rows[i].b;
      Certificate c{Vec(m), Vec(inequality_count)};
      axpy(c.equality_multipliers, f, rows[i].y);
      out.inconsistent = std::move(c);
      return out;
    }
  }
  rows.resize(cur);
  out.rows = std::move(rows);
  return out;
}

// Scale so the first nonzero coefficient has absolute value 1 (a positive
// multiple, so the inequality is unchanged).
void normalize(Tracked& t) {
  for (const Rational& x : t.a) {
    if (x == 0) continue;
    const Rational f = 1 / abs(x);
    if (f != 1) t = combine(t, f, t, 0);
    return;
  }
}

// Removes trivially true rows and keeps the tightest row per direction.
// Returns an infeasible row (0 >= b > 0) if one appears.
std::optional<Tracked> prune(std::vector<Tracked>& rows) {
  std::map<Vec, Tracked> best;
  for (Tracked& t : rows) {
    if (all_zero(t.a)) {
      if (t.b > 0) return t;
      continue;
    }
    normalize(t);
    auto it = best.find(t.a);
    if (it == best.end()) {
      best.emplace(t.a, std::move(t));
    } else if (t.b > it->second.b) {
      it->second = std::move(t);
    }
  }
  rows.clear();
  for (auto& [key, t] : best) rows.push_back(std::move(t));
  return std::nullopt;
}

Certificate to_certificate(const Tracked& t) {
  const Rational f = 1 / t.b;
  Certificate c{Vec(t.y.size()), Vec(t.z.size())};
  axpy(c.equality_multipliers, f, t.y);
  axpy(c.inequality_multipliers, f, t.z);
  return c;
}

}  // namespace

std::optional<AffineSpace> solve_equalities(std::size_t variables, const std::vector<Row>& equalities) {
  for (const Row& r : equalities)
    if (r.a.size() != variables) throw InputError("equality row has the wrong length");
  Reduced red = reduce(variables, equalities, 0);
  if (red.inconsistent) return std::nullopt;
  AffineSpace out;
  out.particular.assign(variables, 0);
  out.free_variables = red.free;
  for (std::size_t i = 0; i < red.rows.size(); ++i) out.particular[red.pivots[i]] = red.rows[i].b;
  for (std::size_t f : red.free) {
    Vec d(variables);
    d[f] = 1;
    for (std::size_t i = 0; i < red.rows.size(); ++i) d[red.pivots[i]] = -red.rows[i].a[f];
    out.directions.push_back(std::move(d));
  }
  return out;
}

Result solve(const LinearSystem& system) {
  check_shape(system);
  const std::size_t n = system.variables;
  const std::size_t k = system.inequalities.size();
  Result result;

  Reduced red = reduce(n, system.equalities, k);
  if (red.inconsistent) {
    result.certificate = red.inconsistent;
    return result;
  }
  const std::size_t m = red.free.size();

  // Inequalities in the free variables only.
  std::vector<Tracked> level;
  for (std::size_t j = 0; j < k; ++j) {
    const Row& row = system.inequalities[j];
    Tracked t{Vec(m), row.b, Vec(system.equalities.size()), Vec(k)};
    t.z[j] = 1;
    for (std::size_t f = 0; f < m; ++f) t.a[f] = row.a[red.free[f]];
    for (std::size_t p = 0; p < red.rows.size(); ++p) {
      const Rational& coeff = row.a[red.pivots[p]];
      if (coeff == 0) continue;
      for (std::size_t f = 0; f < m; ++f) t.a[f] -= coeff * red.rows[p].a[red.free[f]];
      t.b -= coeff * red.rows[p].b;
      axpy(t.y, -coeff, red.rows[p].y);
    }
    level.push_back(std::move(t));
  }

  // systems[i] involves free variables 0..i-1 only.
  std::vector<std::vector<Tracked>> systems(m + 1);
  if (auto bad = prune(level)) {
    result.certificate = to_certificate(*bad);
    return result;
  }
  systems[m] = level;
  for (std::size_t var = m; var-- > 0;) {
    std::vector<Tracked> next, pos, neg;
    for (const Tracked& t : systems[var + 1]) {
      if (t.a[var] > 0) {
        pos.push_back(t);
      } else if (t.a[var] < 0) {
        neg.push_back(t);
      } else {
        next.push_back(t);
      }
    }
    for (const Tracked& p : pos)
      for (const Tracked& q : neg) next.push_back(combine(p, -q.a[var], q, p.a[var]));
    if (auto bad = prune(next)) {
      result.certificate = to_certificate(*bad);
      return result;
    }
    systems[var] = std::move(next);
  }

  // Back-substitution: smallest admissible value of each free variable.
  Vec free_value(m);
  for (std::size_t var = 0; var < m; ++var) {
    std::optional<Rational> lower, upper;
    for (const Tracked& t : systems[var + 1]) {
      if (t.a[var] == 0) continue;
      Rational rest = t.b;
      for (std::size_t i = 0; i < var; ++i) rest -= t.a[i] * free_value[i];
      const Rational bound = rest / t.a[var];
      if (t.a[var] > 0) {
        if (!lower || bound > *lower) lower = bound;
      } else if (!upper || bound < *upper) {
        upper = bound;
      }
    }
    if (lower) {
      free_value[var] = *lower;
    } else if (upper && *upper < 0) {
      free_value[var] = *upper;
    } else {
      free_value[var] = 0;
    }
  }

  result.point.assign(n, 0);
  for (std::size_t f = 0; f < m; ++f) result.point[red.free[f]] = free_value[f];
  for (std::size_t p = 0; p < red.rows.size(); ++p) {
    Rational x = red.rows[p].b;
    for (std::size_t f = 0; f < m; ++f) x -= red.rows[p].a[red.free[f]] * free_value[f];
    result.point[red.pivots[p]] = x;
  }
  if (!satisfies(system, result.point))
    throw InconsistentDataError("internal error: eliminated system produced an infeasible point");
  result.feasible = true;
  return result;
}

bool satisfies(const LinearSystem& system, const std::vector<Rational>& x) {
  if (x.size() != system.variables) return false;
  auto value = [&](const Row& r) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += r.a[i] * x[i];
    return s;
  };
  for (const Row& r : system.equalities)
    if (value(r) != r.b) return false;
  for (const Row& r : system.inequalities)
    if (value(r) < r.b) return false;
  return true;
}

bool certifies_infeasibility(const LinearSystem& system, const Certificate& c) {
  if (c.equality_multipliers.size() != system.equalities.size() ||
      c.inequality_multipliers.size() != system.inequalities.size())
    return false;
  Vec a(system.variables);
  Rational b = 0;
  for (std::size_t i = 0; i < system.equalities.size(); ++i) {
    axpy(a, c.equality_multipliers[i], system.equalities[i].a);
    b += c.equality_multipliers[i] * system.equalities[i].b;
  }
  for (std::size_t j = 0; j < system.inequalities.size(); ++j) {
    if (c.inequality_multipliers[j] < 0) return false;
    axpy(a, c.inequality_multipliers[j], system.inequalities[j].a);
    b += c.inequality_multipliers[j] * system.inequalities[j].b;
  }
  return all_zero(a) && b > 0;
}

}  // namespace gkm::lp
