#pragma once

// Momentum graph realizations: positions mu(v) in Q^r and edge lengths
// l_e >= 1 with mu(q) - mu(p) = l_e * alpha(p -> q) on every edge; x-rays
// (strata together with the images of their fixed points).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gkm/graph.hpp"
#include "gkm/linear_feasibility.hpp"
#include "gkm/strata.hpp"

namespace gkm {

using Point = std::vector<Rational>;

struct MomentumRealization {
  std::vector<Point> positions;  // per vertex
  std::vector<Rational> lengths;  // per edge
};

// Extra constraint coeffs . lengths >= bound, used to probe rigidity.
struct LengthConstraint {
  std::vector<Rational> coefficients;  // per edge
  Rational bound;
};

// Farkas data for an infeasible realization problem. flow[e] is the
// multiplier vector of the r equations of edge e; the flow is conserved at
// every vertex, <flow[e], alpha(e)> = length_multipliers[e] >= 0, and the
// length multipliers are not all zero, so the edge equations and l >= 1
// cannot hold together.
struct InfeasibilityCertificate {
  std::vector<Point> flow;
  std::vector<Rational> length_multipliers;
  std::vector<Rational> extra_multipliers;  // one per LengthConstraint

  std::string describe(const GKMGraph& g) const;
};

struct RealizationResult {
  std::optional<MomentumRealization> realization;
  std::optional<InfeasibilityCertificate> certificate;
  bool feasible() const { return realization.has_value(); }
};

// The linear system in (positions of vertices 1.., lengths): vertex 0 is
// pinned at the origin.
lp::LinearSystem realization_system(const GKMGraph& g, const SignedStructure& s,
                                    const std::vector<LengthConstraint>& extra = {});

RealizationResult realize(const GKMGraph& g, const SignedStructure& s,
                          const std::vector<LengthConstraint>& extra = {});

// Edge equations hold exactly and every length is positive.
bool is_valid_realization(const GKMGraph& g, const SignedStructure& s, const MomentumRealization& m);

// Scale so that the shortest edge has length 1 (vertex 0 stays fixed).
MomentumRealization normalized(const MomentumRealization& m);

struct SignedRealization {
  SignedStructure signs;
  MomentumRealization realization;
};

struct SignSearch {
  std::optional<SignedRealization> first;
  // Every sign vector (first edge in canonical order fixed to +1) that
  // admits a realization, in search order. Filled by the exhaustive variant.
  std::vector<std::vector<int>> feasible_signs;
  std::vector<std::string> warnings;
};

// First sign structure (canonical edge order, + before -, modulo global
// negation) admitting a realization.
SignSearch realize_any_signs(const GKMGraph& g);
// All sign classes admitting a realization.
SignSearch feasible_sign_classes(const GKMGraph& g);

struct XRay {
  StratPoset poset;
  std::vector<std::vector<Point>> polytopes;  // sorted, duplicate-free, per element
};

XRay xray(const GKMGraph& g, const SignedStructure& s, const MomentumRealization& m);

enum class XRayComparison { Exact, UpToTranslationAndScaling };

// Order isomorphism of the posets matching polytope vertex sets.
bool xray_equal(const XRay& x1, const XRay& x2, XRayComparison mode);

// Translates the lexicographically smallest vertex image to the origin and
// divides by the rational content of all coordinates.
XRay normalize_xray(const XRay& x);

}  // namespace gkm
