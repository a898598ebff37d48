#include "gkm/polynomial.hpp"

#include <numeric>

#include "gkm/errors.hpp"

namespace gkm {

Polynomial Polynomial::constant(std::size_t variables, const Rational& c) {
  Polynomial p(variables);
  p.add_term(Exponent(variables, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t i) {
  Exponent e(variables, 0);
  e.at(i) = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::linear_form(const Weight& w) {
  Polynomial p(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Exponent e(w.size(), 0);
    e[i] = 1;
    p.add_term(e, Rational(w[i]));
  }
  return p;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != vars_) throw InputError("exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::size_t Polynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max<std::size_t>(d, std::accumulate(e.begin(), e.end(), 0u));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0u);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0u) != d) return false;
  return true;
}

bool Polynomial::is_constant() const { return degree() == 0; }

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (other.vars_ != vars_) throw InputError("polynomials in different rings");
  Polynomial p = *this;
  for (const auto& [e, c] : other.terms_) p.add_term(e, c);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (other.vars_ != vars_) throw InputError("polynomials in different rings");
  Polynomial p(vars_);
  Exponent e(vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial p(vars_);
  if (c == 0) return p;
  p.terms_ = terms_;
  for (auto& [e, x] : p.terms_) x *= c;
  return p;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(vars_, 1);
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

Polynomial Polynomial::substitute_linear(const std::vector<Weight>& basis) const {
  const std::size_t k = basis.size();
  std::vector<Polynomial> images;
  images.reserve(vars_);
  for (std::size_t i = 0; i < vars_; ++i) {
    Polynomial li(k);
    for (std::size_t j = 0; j < k; ++j) {
      if (basis[j].size() != vars_) throw InputError("substitution basis has the wrong length");
      Exponent e(k, 0);
      e[j] = 1;
      li.add_term(e, Rational(basis[j][i]));
    }
    images.push_back(std::move(li));
  }
  std::vector<std::vector<Polynomial>> powers(vars_);
  Polynomial out(k);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(k, c);
    for (std::size_t i = 0; i < vars_; ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(k, 1));
      while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
      term = term * pw[e[i]];
    }
    out = out + term;
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  // Highest monomials first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    bool has_var = false;
    std::string vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (has_var) vars += "*";
      vars += "x" + std::to_string(i);
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
      has_var = true;
    }
    if (!has_var) {
      s += mag.get_str();
    } else if (mag != 1) {
      s += mag.get_str() + "*" + vars;
    } else {
      s += vars;
    }
  }
  return s;
}

std::vector<Exponent> monomials_of_degree(std::size_t variables, std::size_t d) {
  std::vector<Exponent> out;
  if (variables == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent e(variables, 0);
  // Distribute d among the variables, most weight on x0 first.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == variables) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned a = left + 1; a-- > 0;) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, static_cast<unsigned>(d));
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

std::vector<Weight> integer_kernel_basis(const Weight& w) {
  if (w.is_zero()) throw InputError("kernel of the zero form is not a hyperplane");
  SmithForm s = smith_normal_form(IntMatrix::from_rows({w}, w.size()));
  std::vector<Weight> basis;
  for (std::size_t j = 1; j < w.size(); ++j) basis.push_back(s.V.column(j));
  return basis;
}

bool vanishes_on_hyperplane(const Polynomial& p, const Weight& w) {
  if (p.variables() != w.size()) throw InputError("polynomial and linear form in different rings");
  return p.substitute_linear(integer_kernel_basis(w)).is_zero();
}

}  // namespace gkm
