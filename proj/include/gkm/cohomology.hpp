#pragma once

// Rational equivariant cohomology of a GKM graph: tuples of polynomials, one
// per fixed point, whose differences across every edge are divisible by the
// edge label.

#include <cstddef>
#include <string>
#include <vector>

#include "gkm/graph.hpp"
#include "gkm/polynomial.hpp"

namespace gkm {

struct EquivariantClass {
  std::size_t degree = 0;           // polynomial degree; cohomological degree 2d
  std::vector<Polynomial> values;   // indexed by vertex
};

// Divisibility across every edge. Throws InputError when a value is not
// homogeneous of the declared degree or the vertex count is wrong.
bool is_class(const GKMGraph& g, const EquivariantClass& c);

// dim_Q of the degree-d classes.
std::size_t graded_rank(const GKMGraph& g, std::size_t d);

struct BettiNumbers {
  std::vector<long> betti;             // b_0, b_2, ..., b_2n
  std::vector<std::size_t> graded_ranks;  // graded_rank(d) for d = 0..n
  bool sums_to_vertex_count = false;
  bool palindromic = false;

  bool consistent() const { return sums_to_vertex_count && palindromic; }
};

// Even Betti numbers from the graded ranks, assuming the equivariant
// cohomology is free over H(BT). Throws InconsistentDataError if some
// reconstructed Betti number is negative.
BettiNumbers betti_numbers(const GKMGraph& g);

// Vertexwise product; throws InputError for classes on different graphs.
EquivariantClass multiply(const EquivariantClass& a, const EquivariantClass& b);

// The constant class k on every vertex.
EquivariantClass constant_class(const GKMGraph& g, const Rational& k);

}  // namespace gkm
