#include "gkm/checks/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "gkm/checks/oracles.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/connection.hpp"
#include "gkm/errors.hpp"
#include "gkm/isomorphism.hpp"
#include "gkm/localization.hpp"
#include "gkm/moment.hpp"
#include "gkm/parse.hpp"
#include "gkm/strata.hpp"

namespace gkm::checks {

namespace {

std::string join(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Accumulates sub-checks of one criterion.
struct Tally {
  std::vector<std::string> notes;
  bool ok = true;

  void check(bool cond, const std::string& note) {
    notes.push_back(note + (cond ? "" : " [FAIL]"));
    ok = ok && cond;
  }
  std::string text() const {
    std::string s;
    for (const std::string& n : notes) s += (s.empty() ? "" : "; ") + n;
    return s;
  }
};

CriterionResult graph_identity(const CatalogProvider& cat) {
  CriterionResult r{1, "graph identity", "strict isomorphism example8 ~ product_s2s6", "", false, 0};
  const GKMGraph x = cat("example8").graph;
  const GKMGraph y = cat("product_s2s6").graph;
  const auto iso = isomorphic_strict(x, y);
  Tally t;
  t.check(iso.has_value(), iso ? "isomorphism found" : "no isomorphism");
  if (iso) t.check(is_strict_isomorphism(x, y, *iso), "witness verified");
  r.computed = t.text();
  r.passed = t.ok;
  return r;
}

CriterionResult connection_obstruction(const CatalogProvider& cat) {
  CriterionResult r{2, "connection obstruction",
                    "example8: no signed connection, >= 1 unsigned; cp3, cp1xcp3: signed connection; < 5 s",
                    "", false, 0};
  const auto t0 = std::chrono::steady_clock::now();
  Tally t;
  const GKMGraph x = cat("example8").graph;
  const SignedConnectionSearch s = exists_signed_structure_with_connection(x);
  t.check(!s.witness, s.witness ? "example8 signed: found" : "example8 signed: none");
  const ConnectionEnumeration u = enumerate_unsigned_connections(x);
  t.check(u.count >= 1, "example8 unsigned count " + u.count.get_str());
  for (const char* name : {"cp3", "cp1xcp3"}) {
    const GKMGraph g = cat(name).graph;
    const SignedConnectionSearch w = exists_signed_structure_with_connection(g);
    const bool ok = w.witness && check_connection(g, w.witness->signs, w.witness->connection);
    t.check(ok, std::string(name) + (ok ? " signed: found, verified" : " signed: none"));
  }
  const double secs = seconds_since(t0);
  std::ostringstream time;
  time.precision(3);
  time << "time " << secs << " s";
  t.check(secs < 5.0, time.str());
  r.computed = t.text();
  r.passed = t.ok;
  return r;
}

CriterionResult betti_vectors(const CatalogProvider& cat) {
  CriterionResult r{3, "Betti vectors",
                    "example8 (1,1,0,1,1); cp3 (1,1,1,1); cp1xcp3 (1,2,2,2,1); sum = |V|, palindromic", "",
                    false, 0};
  Tally t;
  const std::vector<std::pair<const char*, std::vector<long>>> want = {
      {"example8", {1, 1, 0, 1, 1}}, {"cp3", {1, 1, 1, 1}}, {"cp1xcp3", {1, 2, 2, 2, 1}}};
  for (const auto& [name, expected] : want) {
    try {
      const BettiNumbers b = betti_numbers(cat(name).graph);
      t.check(b.betti == expected && b.consistent(), std::string(name) + " " + join(b.betti));
    } catch (const InconsistentDataError& e) {
      t.check(false, std::string(name) + " inconsistent: " + e.what());
    }
  }
  r.computed = t.text();
  r.passed = t.ok;
  return r;
}

CriterionResult localization_identities(const CatalogProvider& cat) {
  CriterionResult r{4, "localization identities",
                    "int 1 = 0, int eu = |V| on signed builtins; cp2 c1^2 = 9, p1 = 3; cp3 c1^3 = 64; "
                    "cp1xcp3 p1^2 = 0, p2 = 0",
                    "", false, 0};
  Tally t;
  std::size_t checked = 0;
  bool identities = true;
  for (const std::string& name : catalog_names()) {
    const CatalogEntry e = cat(name);
    if (!e.signs) continue;
    const std::size_t n = e.graph.valence();
    try {
      identities = identities && integrate(e.graph, *e.signs, parse_expr("1", n)) == 0 &&
                   integrate(e.graph, *e.signs, parse_expr("eu", n)) == Rational(e.graph.vertex_count());
    } catch (const std::exception&) {
      identities = false;
    }
    ++checked;
  }
  t.check(identities, "int 1 and int eu on " + std::to_string(checked) + " signed builtins");
  auto value = [&](const char* name, const char* expr) {
    const CatalogEntry e = cat(name);
    return integrate(e.graph, *e.signs, parse_expr(expr, e.graph.valence()));
  };
  auto report = [&](const char* name, const char* expr, const Rational& got, long want) {
    t.check(got == want, std::string(name) + " " + expr + " = " + got.get_str());
  };
  try {
    report("cp2", "c1^2", value("cp2", "c1^2"), 9);
    report("cp2", "p1", value("cp2", "p1"), 3);
    report("cp3", "c1^3", value("cp3", "c1^3"), 64);
    const CatalogEntry p = cat("cp1xcp3");
    const std::vector<int> o = orientation_from_signs(p.graph, *p.signs);
    report("cp1xcp3", "p1^2", pontryagin_number(p.graph, o, {1, 1}).value, 0);
    report("cp1xcp3", "p2", pontryagin_number(p.graph, o, {2}).value, 0);
  } catch (const std::exception& e) {
    t.check(false, std::string("error: ") + e.what());
  }
  r.computed = t.text();
  r.passed = t.ok;
  return r;
}

CriterionResult stratification(const CatalogProvider& cat) {
  CriterionResult r{5, "stratification",
                    "labelled orbit posets of example8 and product_s2s6 isomorphic; principal isotropy "
                    "vertex-independent on all builtins",
                    "", false, 0};
  Tally t;
  const StratPoset a = orbit_poset(cat("example8").graph);
  const StratPoset b = orbit_poset(cat("product_s2s6").graph);
  t.check(poset_isomorphic_with_labels(a, b).has_value(),
          "posets of sizes " + std::to_string(a.elements.size()) + " and " + std::to_string(b.elements.size()));
  std::size_t independent = 0;
  const std::vector<std::string> names = catalog_names();
  for (const std::string& name : names)
    if (orbit_poset(cat(name).graph).all_isotropy_vertex_independent()) ++independent;
  t.check(independent == names.size(), "vertex-independent on " + std::to_string(independent) + "/" +
                                           std::to_string(names.size()) + " builtins");
  r.computed = t.text();
  r.passed = t.ok;
  return r;
}

CriterionResult momentum_realization(const CatalogProvider& cat) {
  CriterionResult r{6, "momentum realization",
                    "example8 infeasible for every sign class (< 1 s); cp1xcp3 feasible; vertical lengths "
                    "forced equal",
                    "", false, 0};
  Tally t;
  const auto t0 = std::chrono::steady_clock::now();
  const GKMGraph x = cat("example8").graph;
  const std::size_t m = x.edge_count();
  std::size_t infeasible = 0, certified = 0, classes = 0;
  for (unsigned long mask = 0; mask < (1ul << (m - 1)); ++mask) {
    std::vector<int> signs(m, 1);
    for (std::size_t e = 1; e < m; ++e)
      if (mask >> (e - 1) & 1) signs[e] = -1;
    const SignedStructure s = SignedStructure::from_signs(x, signs);
    ++classes;
    const RealizationResult res = realize(x, s);
    if (res.feasible()) continue;
    ++infeasible;
    const lp::LinearSystem sys = realization_system(x, s);
    lp::Certificate c;
    for (std::size_t e = 0; e < m; ++e) {
      c.equality_multipliers.insert(c.equality_multipliers.end(), res.certificate->flow[e].begin(),
                                    res.certificate->flow[e].end());
      c.inequality_multipliers.push_back(res.certificate->length_multipliers[e]);
    }
    if (lp::certifies_infeasibility(sys, c)) ++certified;
  }
  const double secs = seconds_since(t0);
  std::ostringstream time;
  time.precision(3);
  time << secs;
  t.check(infeasible == classes && certified == classes,
          "example8 infeasible " + std::to_string(infeasible) + "/" + std::to_string(classes) +
              " sign classes, certificates verified " + std::to_string(certified));
  t.check(secs < 1.0, "example8 time " + time.str() + " s");

  const GKMGraph p = cat("cp1xcp3").graph;
  const SignSearch classes_found = feasible_sign_classes(p);
  t.check(!classes_found.feasible_signs.empty(),
          "cp1xcp3 feasible sign classes " + std::to_string(classes_found.feasible_signs.size()));
  const Weight vertical{1, -1, -1};
  std::vector<EdgeId> verticals;
  for (EdgeId e = 0; e < p.edge_count(); ++e)
    if (p.edge(e).label == vertical) verticals.push_back(e);
  std::size_t runs = 0, forced = 0;
  for (const std::vector<int>& signs : classes_found.feasible_signs) {
    const SignedStructure s = SignedStructure::from_signs(p, signs);
    for (EdgeId e1 : verticals)
      for (EdgeId e2 : verticals) {
        if (e1 == e2) continue;
        LengthConstraint c{std::vector<Rational>(p.edge_count()), 1};
        c.coefficients[e1] = 1;
        c.coefficients[e2] = -1;
        ++runs;
        if (!realize(p, s, {c}).feasible()) ++forced;
      }
  }
  t.check(verticals.size() == 4 && runs > 0 && forced == runs,
          std::to_string(verticals.size()) + " vertical edges, l_e1 >= l_e2 + 1 infeasible in " +
              std::to_string(forced) + "/" + std::to_string(runs) + " runs");
  r.computed = t.text();
  r.passed = t.ok;
  return r;
}

CriterionResult xray_coincidence(const CatalogProvider& cat) {
  CriterionResult r{7, "x-ray coincidence",
                    "normalized x-rays of cp1xcp3 and hamiltonian_y equal; 4 vertical strata are segments "
                    "of slope (1,-1,-1)",
                    "", false, 0};
  Tally t;
  std::vector<XRay> rays;
  for (const char* name : {"cp1xcp3", "hamiltonian_y"}) {
    const CatalogEntry e = cat(name);
    const RealizationResult res = realize(e.graph, *e.signs);
    if (!res.feasible()) {
      t.check(false, std::string(name) + " not realizable");
      continue;
    }
    rays.push_back(xray(e.graph, *e.signs, *res.realization));
    const XRay& x = rays.back();
    std::size_t vertical = 0;
    for (std::size_t i = 0; i < x.poset.elements.size(); ++i) {
      const Subgraph& c = x.poset.elements[i].component;
      if (c.edges.size() != 1 || e.graph.edge(c.edges[0]).label != Weight{1, -1, -1}) continue;
      const auto& pts = x.polytopes[i];
      if (pts.size() != 2) continue;
      // The difference must be a positive multiple of +-(1,-1,-1).
      const Rational d0 = pts[1][0] - pts[0][0];
      if (d0 != 0 && pts[1][1] - pts[0][1] == -d0 && pts[1][2] - pts[0][2] == -d0) ++vertical;
    }
    t.check(vertical == 4, std::string(name) + ": " + std::to_string(vertical) + " vertical segments");
  }
  if (rays.size() == 2)
    t.check(xray_equal(rays[0], rays[1], XRayComparison::UpToTranslationAndScaling),
            "normalized comparison equal");
  r.computed = t.text();
  r.passed = t.ok;
  return r;
}

CriterionResult property_suites(const CatalogProvider& cat) {
  CriterionResult r{8, "property suites",
                    "0 failures: SNF x500, annihilator x200, divisibility x200, cycle closure on feasible "
                    "realizations",
                    "", false, 0};
  Tally t;
  const PropertyCounts snf = smith_form_property(500, 1);
  const PropertyCounts ann = annihilator_property(200, 2);
  const PropertyCounts div = divisibility_property(200, 3);
  const PropertyCounts cyc = cycle_closure_property(cat);
  auto add = [&](const char* name, const PropertyCounts& c) {
    t.check(c.failures == 0 && c.samples > 0,
            std::string(name) + " " + std::to_string(c.failures) + "/" + std::to_string(c.samples) + " failed");
  };
  add("SNF", snf);
  add("annihilator", ann);
  add("divisibility", div);
  add("cycle closure", cyc);
  r.computed = t.text();
  r.passed = t.ok;
  return r;
}

}  // namespace

PropertyCounts smith_form_property(std::size_t samples, unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, 4), entry(-9, 9);
  PropertyCounts c;
  for (std::size_t k = 0; k < samples; ++k) {
    IntMatrix a(static_cast<std::size_t>(size(rng)), static_cast<std::size_t>(size(rng)));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    const SmithForm s = smith_normal_form(a);
    ++c.samples;
    if (!oracle::smith_form_consistent(a, s) || s.diagonal != oracle::determinantal_invariants(a)) ++c.failures;
  }
  return c;
}

PropertyCounts annihilator_property(std::size_t samples, unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> rank(1, 3), count(0, 3), entry(-3, 3);
  PropertyCounts c;
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t r = static_cast<std::size_t>(rank(rng));
    std::vector<Weight> s(static_cast<std::size_t>(count(rng)));
    for (Weight& w : s) {
      std::vector<Integer> e(r);
      for (Integer& x : e) x = entry(rng);
      w = Weight(std::move(e));
    }
    const TorusSubgroup h = kernel_of_weights(s, r);
    bool ok = true;
    // Every w in [-3,3]^r.
    std::vector<Integer> w(r, -3);
    while (ok) {
      const Weight wt(w);
      const bool fast = vanishes_on(wt, h);
      ok = fast == oracle::character_trivial_on_kernel(wt, s, r);
      if (ok && fast) {
        std::vector<Weight> grown = s;
        grown.push_back(wt);
        ok = kernel_of_weights(grown, r) == h;
      }
      std::size_t i = 0;
      while (i < r && w[i] == 3) w[i++] = -3;
      if (i == r) break;
      w[i] += 1;
    }
    ++c.samples;
    if (!ok) ++c.failures;
  }
  return c;
}

PropertyCounts divisibility_property(std::size_t samples, unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> rank(1, 3), degree(0, 2), entry(-3, 3), coeff(-5, 5);
  PropertyCounts c;
  auto random_poly = [&](std::size_t r, std::size_t d) {
    Polynomial p(r);
    for (const Exponent& e : monomials_of_degree(r, d)) p.add_term(e, coeff(rng));
    return p;
  };
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t r = static_cast<std::size_t>(rank(rng));
    std::vector<Integer> e(r);
    do {
      for (Integer& x : e) x = entry(rng);
    } while (std::all_of(e.begin(), e.end(), [](const Integer& x) { return x == 0; }));
    const Weight alpha(e);
    const std::size_t d = static_cast<std::size_t>(degree(rng));
    const Polynomial multiple = random_poly(r, d) * Polynomial::linear_form(alpha);
    const Polynomial perturbed = multiple + random_poly(r, d + 1);
    const bool ok = vanishes_on_hyperplane(multiple, alpha) && oracle::divisible_by_linear_form(multiple, alpha) &&
                    vanishes_on_hyperplane(perturbed, alpha) == oracle::divisible_by_linear_form(perturbed, alpha);
    ++c.samples;
    if (!ok) ++c.failures;
  }
  return c;
}

PropertyCounts cycle_closure_property(const CatalogProvider& cat) {
  PropertyCounts c;
  for (const std::string& name : catalog_names()) {
    const CatalogEntry e = cat(name);
    if (e.graph.edge_count() > 24) continue;
    auto check = [&](const SignedStructure& s) {
      const RealizationResult res = realize(e.graph, s);
      if (!res.feasible()) return;
      ++c.samples;
      if (!is_valid_realization(e.graph, s, *res.realization) ||
          !oracle::cycles_close(e.graph, s, *res.realization))
        ++c.failures;
    };
    if (e.signs) check(*e.signs);
    for (const std::vector<int>& signs : feasible_sign_classes(e.graph).feasible_signs)
      check(SignedStructure::from_signs(e.graph, signs));
  }
  return c;
}

std::vector<CriterionResult> run_acceptance(const CatalogProvider& provider) {
  using Fn = CriterionResult (*)(const CatalogProvider&);
  const std::vector<std::pair<int, Fn>> criteria = {
      {1, graph_identity},         {2, connection_obstruction}, {3, betti_vectors},
      {4, localization_identities}, {5, stratification},        {6, momentum_realization},
      {7, xray_coincidence},       {8, property_suites}};
  const std::vector<const char*> names = {"graph identity",  "connection obstruction", "Betti vectors",
                                          "localization identities", "stratification",
                                          "momentum realization", "x-ray coincidence", "property suites"};
  std::vector<CriterionResult> rows;
  for (const auto& [id, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult row;
    try {
      row = fn(provider);
    } catch (const std::exception& e) {
      row = CriterionResult{id, names[static_cast<std::size_t>(id - 1)], "", std::string("error: ") + e.what(),
                            false, 0};
    }
    row.seconds = seconds_since(t0);
    rows.push_back(std::move(row));
  }
  return rows;
}

bool all_passed(const std::vector<CriterionResult>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const CriterionResult& r) { return r.passed; });
}

}  // namespace gkm::checks
