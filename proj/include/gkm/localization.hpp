#pragma once

// Characteristic numbers by fixed-point localization:
//   int expr = sum_v expr(alpha_v) / prod alpha_v
// where alpha_v are the weights at v. Evaluation rule at a vertex with
// weights a_1..a_n: c_k = e_k(a), p_k = e_k(a^2), eu = prod a.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gkm/graph.hpp"
#include "gkm/polynomial.hpp"

namespace gkm {

struct ClassSymbol {
  enum class Kind { Chern, Pontryagin, Euler };
  Kind kind = Kind::Chern;
  unsigned index = 0;  // unused for Euler

  static ClassSymbol chern(unsigned i) { return {Kind::Chern, i}; }
  static ClassSymbol pontryagin(unsigned i) { return {Kind::Pontryagin, i}; }
  static ClassSymbol euler() { return {Kind::Euler, 0}; }

  // Degree in H^2-units: c_i -> i, p_i -> 2i, eu -> n.
  std::size_t weighted_degree(std::size_t n) const;
  std::string to_string() const;

  friend auto operator<=>(const ClassSymbol&, const ClassSymbol&) = default;
};

using ClassMonomial = std::map<ClassSymbol, unsigned>;

/// Integer polynomial in characteristic-class symbols for a manifold of
/// complex dimension n. Construction checks index ranges and homogeneity.
class CharClassExpr {
 public:
  CharClassExpr(std::size_t n, const std::vector<std::pair<Integer, ClassMonomial>>& terms);

  static CharClassExpr symbol(std::size_t n, ClassSymbol s);

  std::size_t valence() const { return n_; }
  const std::map<ClassMonomial, Integer>& terms() const { return terms_; }
  std::size_t weighted_degree() const { return degree_; }
  bool only_pontryagin_and_euler() const;

  // "3*c1^2 + p1"; parses back to an equal expression.
  std::string to_string() const;

  friend bool operator==(const CharClassExpr& a, const CharClassExpr& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t n_;
  std::map<ClassMonomial, Integer> terms_;
  std::size_t degree_ = 0;
};

// Elementary symmetric polynomials e_0..e_k of the given linear forms.
std::vector<Polynomial> elementary_symmetric(const std::vector<Polynomial>& forms, std::size_t k);

// Localization with a signed structure. Throws InputError when the degree
// exceeds n and InconsistentDataError when the sum is not a constant.
Rational integrate(const GKMGraph& g, const SignedStructure& s, const CharClassExpr& expr);

// o(v) = sign relating the signed weight product at v to the product of
// canonical labels at v.
std::vector<int> orientation_from_signs(const GKMGraph& g, const SignedStructure& s);

// Localization using only an orientation of each fixed point: weights are
// the canonical labels, denominators o(v) * prod label. Only p_k and eu are
// allowed, since c_k depends on signs.
Rational integrate_oriented(const GKMGraph& g, const std::vector<int>& orientation,
                            const CharClassExpr& expr);

struct PontryaginNumber {
  Rational value;
  bool integral = false;
};

// p_{i_1} ... p_{i_k}[M] for the partition (i_1..i_k); 2 * sum = n required.
PontryaginNumber pontryagin_number(const GKMGraph& g, const std::vector<int>& orientation,
                                   const std::vector<unsigned>& partition);

}  // namespace gkm
