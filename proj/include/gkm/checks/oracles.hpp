#pragma once

// Independent reference computations used to cross-check the main
// algorithms. Each one takes a different route to the same answer and is
// only meant for small inputs.

#include <cstddef>
#include <optional>
#include <vector>

#include "gkm/connection.hpp"
#include "gkm/graph.hpp"
#include "gkm/lattice.hpp"
#include "gkm/localization.hpp"
#include "gkm/moment.hpp"
#include "gkm/polynomial.hpp"
#include "gkm/strata.hpp"

namespace gkm::oracle {

// Determinant by cofactor expansion.
Integer laplace_determinant(const IntMatrix& a);

// Invariant factors d_k = g_k / g_{k-1}, g_k the gcd of all k x k minors.
std::vector<Integer> determinantal_invariants(const IntMatrix& a);

// U * A * V == D, D diagonal with the divisibility chain, det U and det V
// equal to +-1, V * V^{-1} == I.
bool smith_form_consistent(const IntMatrix& a, const SmithForm& s);

// chi_w is trivial on ker(S): write the kernel as V * (generators of
// {phi : D phi integral}) and evaluate chi_w on each generator.
bool character_trivial_on_kernel(const Weight& w, const std::vector<Weight>& s, std::size_t rank);

// Rank over Q by dense Gaussian elimination with rational pivots.
std::size_t rational_rank(const std::vector<std::vector<Rational>>& rows);

// Divisibility of p by the linear form w via multivariate long division.
bool divisible_by_linear_form(const Polynomial& p, const Weight& w);

// dim of degree-d classes, from the system f(u) - f(v) = label * g_e in the
// unknown coefficients of all f(v) and g_e.
std::size_t graded_rank_by_quotients(const GKMGraph& g, std::size_t d);

// Components of Gamma^{ker S} over every subset S of distinct labels, plus
// the whole graph. Exponential; intended for at most 12 labels.
std::vector<Subgraph> strata_components_by_subsets(const GKMGraph& g);

// Number of connections found by trying every bijection of every edge star.
Integer count_connections_brute_force(const GKMGraph& g, SignConvention convention);

// True iff some sign vector (first edge fixed) admits a connection; all
// sign vectors and all star bijections are tried.
bool signed_connection_brute_force(const GKMGraph& g);

// Sum of l_e * alpha(e) along each fundamental cycle of a spanning tree is 0.
bool cycles_close(const GKMGraph& g, const SignedStructure& s, const MomentumRealization& m);

// Localization sum evaluated at sample integer points where no weight
// vanishes; returns the common value if every sample agrees, else nullopt.
std::optional<Rational> localization_at_points(const GKMGraph& g, const SignedStructure& s,
                                               const CharClassExpr& expr, std::size_t samples = 4);

}  // namespace gkm::oracle
