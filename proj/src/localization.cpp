#include "gkm/localization.hpp"

#include <numeric>

#include "gkm/errors.hpp"

namespace gkm {

std::size_t ClassSymbol::weighted_degree(std::size_t n) const {
  switch (kind) {
    case Kind::Chern:
      return index;
    case Kind::Pontryagin:
      return 2 * index;
    case Kind::Euler:
      return n;
  }
  return 0;
}

std::string ClassSymbol::to_string() const {
  switch (kind) {
    case Kind::Chern:
      return "c" + std::to_string(index);
    case Kind::Pontryagin:
      return "p" + std::to_string(index);
    case Kind::Euler:
      return "eu";
  }
  return "?";
}

CharClassExpr::CharClassExpr(std::size_t n, const std::vector<std::pair<Integer, ClassMonomial>>& terms)
    : n_(n) {
  for (const auto& [coeff, mono] : terms) {
    ClassMonomial clean;
    for (const auto& [sym, power] : mono) {
      if (sym.kind == ClassSymbol::Kind::Chern && (sym.index < 1 || sym.index > n))
        throw InputError("c" + std::to_string(sym.index) + " is out of range for valence " +
                         std::to_string(n));
      if (sym.kind == ClassSymbol::Kind::Pontryagin && (sym.index < 1 || 2 * sym.index > n))
        throw InputError("p" + std::to_string(sym.index) + " is out of range for valence " +
                         std::to_string(n));
      if (power > 0) clean[sym] += power;
    }
    Integer& c = terms_[clean];
    c += coeff;
    if (c == 0) terms_.erase(clean);
  }
  std::vector<std::size_t> degrees;
  for (const auto& [mono, coeff] : terms_) {
    std::size_t d = 0;
    for (const auto& [sym, power] : mono) d += power * sym.weighted_degree(n);
    degrees.push_back(d);
  }
  if (!degrees.empty()) degree_ = degrees.front();
  for (std::size_t d : degrees) {
    if (d == degree_) continue;
    std::string list;
    for (std::size_t x : degrees) list += (list.empty() ? "" : ", ") + std::to_string(x);
    throw InputError("inhomogeneous expression: monomial degrees " + list);
  }
}

CharClassExpr CharClassExpr::symbol(std::size_t n, ClassSymbol s) {
  return CharClassExpr(n, {{Integer(1), ClassMonomial{{s, 1u}}}});
}

bool CharClassExpr::only_pontryagin_and_euler() const {
  for (const auto& [mono, coeff] : terms_)
    for (const auto& [sym, power] : mono)
      if (sym.kind == ClassSymbol::Kind::Chern) return false;
  return true;
}

std::string CharClassExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, coeff] : terms_) {
    if (out.empty()) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    Integer mag = abs(coeff);
    std::string factors;
    for (const auto& [sym, power] : mono) {
      if (!factors.empty()) factors += "*";
      factors += sym.to_string();
      if (power > 1) factors += "^" + std::to_string(power);
    }
    if (factors.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += factors;
    } else {
      out += mag.get_str() + "*" + factors;
    }
  }
  return out;
}

std::vector<Polynomial> elementary_symmetric(const std::vector<Polynomial>& forms, std::size_t k) {
  const std::size_t vars = forms.empty() ? 0 : forms.front().variables();
  std::vector<Polynomial> e(k + 1, Polynomial(vars));
  e[0] = Polynomial::constant(vars, 1);
  for (const Polynomial& f : forms)
    for (std::size_t j = k; j >= 1; --j) e[j] = e[j] + e[j - 1] * f;
  return e;
}

namespace {

// Weights at one fixed point and the sign relating eu(v) to their product.
struct VertexData {
  std::vector<Weight> weights;
  int sign = 1;
};

Polynomial evaluate(const CharClassExpr& expr, const VertexData& v, std::size_t rank) {
  const std::size_t n = expr.valence();
  std::vector<Polynomial> forms, squares;
  for (const Weight& w : v.weights) {
    forms.push_back(Polynomial::linear_form(w));
    squares.push_back(forms.back() * forms.back());
  }
  const std::vector<Polynomial> c = elementary_symmetric(forms, n);
  const std::vector<Polynomial> p = elementary_symmetric(squares, n / 2);
  Polynomial eu = Polynomial::constant(rank, v.sign);
  for (const Polynomial& f : forms) eu = eu * f;

  Polynomial out(rank);
  for (const auto& [mono, coeff] : expr.terms()) {
    Polynomial term = Polynomial::constant(rank, Rational(coeff));
    for (const auto& [sym, power] : mono) {
      const Polynomial& base = sym.kind == ClassSymbol::Kind::Chern       ? c[sym.index]
                               : sym.kind == ClassSymbol::Kind::Pontryagin ? p[sym.index]
                                                                            : eu;
      term = term * base.pow(power);
    }
    out = out + term;
  }
  return out;
}

// w = sign * content * f with f primitive and lexicographically positive.
struct Factored {
  Integer scalar;
  Weight primitive;
};

Factored factor(const Weight& w) {
  Integer content = 0;
  for (const Integer& x : w.entries()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  std::vector<Integer> p;
  for (const Integer& x : w.entries()) p.push_back(x / content);
  Weight prim(std::move(p));
  if (!prim.is_lex_positive()) return {Integer(-content), -prim};
  return {content, prim};
}

Rational localize(const GKMGraph& g, const std::vector<VertexData>& data, const CharClassExpr& expr) {
  const std::size_t n = g.valence();
  if (expr.valence() != n)
    throw InputError("expression is for valence " + std::to_string(expr.valence()) +
                     ", graph has valence " + std::to_string(n));
  if (expr.weighted_degree() > n)
    throw InputError("expression degree " + std::to_string(expr.weighted_degree()) +
                     " exceeds the valence " + std::to_string(n));
  const std::size_t r = g.rank();

  // Common denominator: every primitive form to its largest multiplicity.
  std::vector<std::map<Weight, unsigned>> mult(data.size());
  std::vector<Integer> scalar(data.size(), 1);
  std::map<Weight, unsigned> top;
  for (std::size_t v = 0; v < data.size(); ++v) {
    scalar[v] = data[v].sign;
    for (const Weight& w : data[v].weights) {
      if (w.is_zero()) throw InputError("zero weight at vertex " + g.vertex_name(v));
      Factored f = factor(w);
      scalar[v] *= f.scalar;
      unsigned m = ++mult[v][f.primitive];
      top[f.primitive] = std::max(top[f.primitive], m);
    }
  }
  Polynomial common = Polynomial::constant(r, 1);
  for (const auto& [f, m] : top) common = common * Polynomial::linear_form(f).pow(m);

  Polynomial numerator(r);
  for (std::size_t v = 0; v < data.size(); ++v) {
    Polynomial cofactor = Polynomial::constant(r, Rational(1) / Rational(scalar[v]));
    for (const auto& [f, m] : top) {
      auto it = mult[v].find(f);
      const unsigned have = it == mult[v].end() ? 0 : it->second;
      cofactor = cofactor * Polynomial::linear_form(f).pow(m - have);
    }
    numerator = numerator + evaluate(expr, data[v], r) * cofactor;
  }

  if (numerator.is_zero()) return 0;
  if (expr.weighted_degree() < n)
    throw InconsistentDataError("localization sum of a degree " + std::to_string(expr.weighted_degree()) +
                                " expression is the nonzero rational function (" +
                                numerator.to_string() + ") / (" + common.to_string() + ")");
  // Both sides have the same degree; compare against the leading term.
  const auto& [lead, lead_coeff] = *common.terms().rbegin();
  const Rational value = numerator.coefficient(lead) / lead_coeff;
  if (numerator != common.scaled(value))
    throw InconsistentDataError("localization sum is not constant: (" + numerator.to_string() +
                                ") / (" + common.to_string() + ")");
  return value;
}

}  // namespace

Rational integrate(const GKMGraph& g, const SignedStructure& s, const CharClassExpr& expr) {
  if (s.edge_count() != g.edge_count()) throw InputError("signed structure does not match the graph");
  std::vector<VertexData> data(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (EdgeId e : g.incident(v)) data[v].weights.push_back(s.weight_from(g, e, v));
  return localize(g, data, expr);
}

std::vector<int> orientation_from_signs(const GKMGraph& g, const SignedStructure& s) {
  std::vector<int> o(g.vertex_count(), 1);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (EdgeId e : g.incident(v))
      if (s.weight_from(g, e, v) != g.edge(e).label) o[v] = -o[v];
  return o;
}

Rational integrate_oriented(const GKMGraph& g, const std::vector<int>& orientation,
                            const CharClassExpr& expr) {
  if (orientation.size() != g.vertex_count())
    throw InputError("orientation must assign a sign to every vertex");
  if (!expr.only_pontryagin_and_euler())
    throw InputError("Chern classes need a signed structure, not only an orientation");
  std::vector<VertexData> data(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (orientation[v] != 1 && orientation[v] != -1)
      throw InputError("orientation values must be +1 or -1");
    data[v].sign = orientation[v];
    for (EdgeId e : g.incident(v)) data[v].weights.push_back(g.edge(e).label);
  }
  return localize(g, data, expr);
}

PontryaginNumber pontryagin_number(const GKMGraph& g, const std::vector<int>& orientation,
                                   const std::vector<unsigned>& partition) {
  const unsigned total = std::accumulate(partition.begin(), partition.end(), 0u);
  if (2 * total != g.valence())
    throw InputError("partition has degree " + std::to_string(2 * total) + ", valence is " +
                     std::to_string(g.valence()));
  ClassMonomial mono;
  for (unsigned i : partition) mono[ClassSymbol::pontryagin(i)] += 1;
  PontryaginNumber out;
  out.value = integrate_oriented(g, orientation, CharClassExpr(g.valence(), {{Integer(1), mono}}));
  out.integral = is_integral(out.value);
  return out;
}

}  // namespace gkm
