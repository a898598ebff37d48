#pragma once

// Exact rational linear feasibility by Fourier-Motzkin elimination, with
// Farkas certificates on failure.

#include <cstddef>
#include <optional>
#include <vector>

#include "gkm/numeric.hpp"

namespace gkm::lp {

// a . x (= or >=) b
struct Row {
  std::vector<Rational> a;
  Rational b;
};

struct LinearSystem {
  std::size_t variables = 0;
  std::vector<Row> equalities;
  std::vector<Row> inequalities;
};

// Multipliers y (free, one per equality) and z >= 0 (one per inequality)
// with sum y_i a_i + sum z_j a_j = 0 and sum y_i b_i + sum z_j b_j > 0.
struct Certificate {
  std::vector<Rational> equality_multipliers;
  std::vector<Rational> inequality_multipliers;
};

struct Result {
  bool feasible = false;
  // Lexicographically minimal over the free variables of the equality
  // system (ascending index), when those are bounded below.
  std::vector<Rational> point;
  std::optional<Certificate> certificate;
};

Result solve(const LinearSystem& system);

bool satisfies(const LinearSystem& system, const std::vector<Rational>& x);
bool certifies_infeasibility(const LinearSystem& system, const Certificate& c);

// x = particular + sum_k t_k * directions[k] parametrizes {x : equalities},
// with one direction per free variable (listed in `free_variables`).
// nullopt when the equalities are inconsistent.
struct AffineSpace {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> directions;
  std::vector<std::size_t> free_variables;
};

std::optional<AffineSpace> solve_equalities(std::size_t variables, const std::vector<Row>& equalities);

}  // namespace gkm::lp
