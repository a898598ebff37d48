#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gkm/lattice.hpp"
#include "gkm/numeric.hpp"

namespace gkm {

using Exponent = std::vector<unsigned>;

/// Sparse polynomial with rational coefficients in a fixed number of
/// variables x0 .. x{n-1}. Zero coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(std::size_t variables = 0) : vars_(variables) {}

  static Polynomial constant(std::size_t variables, const Rational& c);
  static Polynomial variable(std::size_t variables, std::size_t i);
  static Polynomial monomial(const Exponent& e, const Rational& c = 1);
  // The linear form w . x.
  static Polynomial linear_form(const Weight& w);

  std::size_t variables() const { return vars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  // Total degree; 0 for the zero polynomial.
  std::size_t degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned k) const;

  // Substitutes x_i = sum_j t_j * basis[j][i]; the result lives in
  // basis.size() variables.
  Polynomial substitute_linear(const std::vector<Weight>& basis) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  std::size_t vars_;
  std::map<Exponent, Rational> terms_;
};

// All exponent vectors in `variables` variables of total degree d, in
// lexicographically decreasing order (x0^d first).
std::vector<Exponent> monomials_of_degree(std::size_t variables, std::size_t d);

// Binomial coefficient as an unsigned integer.
Integer binomial(unsigned long n, unsigned long k);

// A Z-basis of {x in Z^r : w . x = 0} for nonzero w.
std::vector<Weight> integer_kernel_basis(const Weight& w);

// True iff p vanishes on the hyperplane {w = 0}, i.e. the linear form w
// divides p over Q.
bool vanishes_on_hyperplane(const Polynomial& p, const Weight& w);

}  // namespace gkm
