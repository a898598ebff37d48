#include "gkm/cohomology.hpp"

#include <map>

#include "gkm/errors.hpp"

namespace gkm {

bool is_class(const GKMGraph& g, const EquivariantClass& c) {
  if (c.values.size() != g.vertex_count())
    throw InputError("class has " + std::to_string(c.values.size()) + " values for " +
                     std::to_string(g.vertex_count()) + " vertices");
  for (const Polynomial& p : c.values) {
    if (p.variables() != g.rank()) throw InputError("class value in the wrong number of variables");
    if (!p.is_homogeneous() || (!p.is_zero() && p.degree() != c.degree))
      throw InputError("class value " + p.to_string() + " is not homogeneous of degree " +
                       std::to_string(c.degree));
  }
  for (const Edge& e : g.edges())
    if (!vanishes_on_hyperplane(c.values[e.u] - c.values[e.v], e.label)) return false;
  return true;
}

namespace {

using SparseRow = std::map<std::size_t, Integer>;

// Rank over Q by online echelon reduction of sparse integer rows. Each new
// row is reduced against the pivots by integer cross-multiplication and
// divided by its content, so entries stay integral and small.
class SparseEchelon {
 public:
  void insert(SparseRow row) {
    while (!row.empty()) {
      auto lead = row.begin();
      auto it = pivots_.find(lead->first);
      if (it == pivots_.end()) {
        pivots_.emplace(lead->first, std::move(row));
        return;
      }
      const SparseRow& piv = it->second;
      const Integer a = piv.begin()->second;
      const Integer b = lead->second;
      // row = a * row - b * piv
      for (auto& [col, x] : row) x *= a;
      for (const auto& [col, y] : piv) {
        Integer& x = row[col];
        x -= b * y;
        if (x == 0) row.erase(col);
      }
      Integer g = 0;
      for (const auto& [col, x] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g > 1)
        for (auto& [col, x] : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace

std::size_t graded_rank(const GKMGraph& g, std::size_t d) {
  const std::vector<Exponent> basis = monomials_of_degree(g.rank(), d);
  const std::size_t m = basis.size();
  const std::size_t unknowns = g.vertex_count() * m;

  // Unknown (v, j) is the coefficient of basis[j] in the value at v. Each
  // edge contributes the coefficients of (f(u) - f(v)) restricted to ker(label).
  SparseEchelon echelon;
  for (const Edge& e : g.edges()) {
    const std::vector<Weight> kernel = integer_kernel_basis(e.label);
    std::map<Exponent, SparseRow> equations;
    for (std::size_t j = 0; j < m; ++j) {
      const Polynomial image = Polynomial::monomial(basis[j]).substitute_linear(kernel);
      for (const auto& [t, coeff] : image.terms()) {
        SparseRow& row = equations[t];
        // Coefficients are integers: integral kernel basis, unit monomials.
        row[e.u * m + j] += coeff.get_num();
        row[e.v * m + j] -= coeff.get_num();
      }
    }
    for (auto& [t, row] : equations) {
      std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
      echelon.insert(std::move(row));
    }
  }
  return unknowns - echelon.rank();
}

BettiNumbers betti_numbers(const GKMGraph& g) {
  BettiNumbers out;
  const std::size_t n = g.valence();
  const unsigned long r = g.rank();
  for (std::size_t k = 0; k <= n; ++k) {
    out.graded_ranks.push_back(graded_rank(g, k));
    // Free module over Q[x_1..x_r]: rank_k = sum_j b_2j * dim S_{k-j}.
    Integer b = static_cast<unsigned long>(out.graded_ranks.back());
    for (std::size_t j = 0; j < k; ++j) b -= out.betti[j] * binomial(k - j + r - 1, r - 1);
    if (b < 0)
      throw InconsistentDataError("negative Betti number b_" + std::to_string(2 * k) +
                                  " = " + b.get_str() + "; graph is not GKM-consistent");
    out.betti.push_back(b.get_si());
  }
  long total = 0;
  for (long b : out.betti) total += b;
  out.sums_to_vertex_count = total == static_cast<long>(g.vertex_count());
  out.palindromic = true;
  for (std::size_t k = 0; k <= n; ++k)
    if (out.betti[k] != out.betti[n - k]) out.palindromic = false;
  return out;
}

EquivariantClass multiply(const EquivariantClass& a, const EquivariantClass& b) {
  if (a.values.size() != b.values.size()) throw InputError("classes live on different graphs");
  EquivariantClass c;
  c.degree = a.degree + b.degree;
  c.values.reserve(a.values.size());
  for (std::size_t v = 0; v < a.values.size(); ++v) {
    if (a.values[v].variables() != b.values[v].variables())
      throw InputError("classes live on different graphs");
    c.values.push_back(a.values[v] * b.values[v]);
  }
  return c;
}

EquivariantClass constant_class(const GKMGraph& g, const Rational& k) {
  EquivariantClass c;
  c.degree = 0;
  c.values.assign(g.vertex_count(), Polynomial::constant(g.rank(), k));
  return c;
}

}  // namespace gkm
