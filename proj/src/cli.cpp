#include "gkm/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "gkm/catalog.hpp"
#include "gkm/checks/acceptance.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/connection.hpp"
#include "gkm/errors.hpp"
#include "gkm/isomorphism.hpp"
#include "gkm/localization.hpp"
#include "gkm/moment.hpp"
#include "gkm/parse.hpp"
#include "gkm/strata.hpp"

namespace gkm::cli {

using json = nlohmann::ordered_json;

std::string digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

struct Outcome {
  int code = kOk;
  json results = json::object();
  std::vector<std::string> text;
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
};

// A graph file, or "builtin:NAME" for a catalog entry.
ParsedGraph load(const std::string& path) {
  if (path.rfind("builtin:", 0) == 0) {
    CatalogEntry e = catalog(path.substr(8));
    return ParsedGraph{std::move(e.graph), std::move(e.signs)};
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json subgroup_json(const TorusSubgroup& h) {
  json rows = json::array();
  for (const Weight& w : h.char_matrix()) rows.push_back(w.to_string());
  json torsion = json::array();
  for (const Integer& t : h.torsion_invariants()) torsion.push_back(t.get_str());
  return json{{"char_matrix", rows}, {"dim_identity_component", h.dim_identity_component()}, {"torsion", torsion}};
}

json point_json(const Point& p) {
  json a = json::array();
  for (const Rational& x : p) a.push_back(x.get_str());
  return a;
}

std::string point_text(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].get_str();
  return s + ")";
}

std::string edge_text(const GKMGraph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  return "e" + std::to_string(e) + " " + g.vertex_name(ed.u) + "-" + g.vertex_name(ed.v) + " " +
         ed.label.to_string();
}

json connection_json(const GKMGraph& g, const Connection& c) {
  json out = json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    json pairs = json::array();
    const auto& tail = g.incident(g.edge(e).u);
    for (std::size_t k = 0; k < tail.size(); ++k) pairs.push_back(json::array({tail[k], c.images()[e][k]}));
    out.push_back(json{{"edge", e}, {"from", g.vertex_name(g.edge(e).u)}, {"to", g.vertex_name(g.edge(e).v)},
                       {"map", pairs}});
  }
  return out;
}

json signs_json(const GKMGraph& g, const SignedStructure& s) {
  json out = json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    out.push_back(json{{"edge", e},
                       {"from", g.vertex_name(g.edge(e).u)},
                       {"to", g.vertex_name(g.edge(e).v)},
                       {"weight", s.oriented(e).to_string()}});
  return out;
}

json realization_json(const GKMGraph& g, const MomentumRealization& m) {
  json pos = json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) pos[g.vertex_name(v)] = point_json(m.positions[v]);
  json len = json::array();
  for (const Rational& l : m.lengths) len.push_back(l.get_str());
  return json{{"positions", pos}, {"lengths", len}};
}

void add_validation(Outcome& o, const GKMGraph& g) {
  const ValidationReport rep = validate(g);
  for (const Violation& v : rep.violations) o.violations.push_back(std::string(axiom_name(v.axiom)) + ": " + v.message);
  o.warnings.insert(o.warnings.end(), rep.warnings.begin(), rep.warnings.end());
}

// ---------------------------------------------------------------------------
// Subcommands

Outcome cmd_validate(const ParsedGraph& p) {
  Outcome o;
  add_validation(o, p.graph);
  o.results["valid"] = o.violations.empty();
  o.text.push_back(o.violations.empty() ? "valid GKM graph" : "not a valid GKM graph");
  for (const std::string& v : o.violations) o.text.push_back("  " + v);
  if (!o.violations.empty()) o.code = kNegative;
  return o;
}

Outcome cmd_info(const ParsedGraph& p) {
  Outcome o;
  const GKMGraph& g = p.graph;
  add_validation(o, g);
  o.results = json{{"vertices", g.vertex_count()},
                   {"edges", g.edge_count()},
                   {"rank", g.rank()},
                   {"valence", g.valence()},
                   {"euler_characteristic", euler_characteristic(g)},
                   {"complexity", complexity(g)},
                   {"label_rank", label_rank(g)},
                   {"signed", p.signs.has_value()}};
  o.text = {"vertices " + std::to_string(g.vertex_count()), "edges " + std::to_string(g.edge_count()),
            "rank " + std::to_string(g.rank()), "valence " + std::to_string(g.valence()),
            "euler characteristic " + std::to_string(euler_characteristic(g)),
            "complexity " + std::to_string(complexity(g)), "label rank " + std::to_string(label_rank(g)),
            std::string("signed ") + (p.signs ? "yes" : "no")};
  return o;
}

Outcome cmd_betti(const ParsedGraph& p) {
  Outcome o;
  const BettiNumbers b = betti_numbers(p.graph);
  o.results = json{{"graded_ranks", b.graded_ranks},
                   {"betti", b.betti},
                   {"sums_to_vertex_count", b.sums_to_vertex_count},
                   {"palindromic", b.palindromic}};
  std::string line = "betti";
  for (long x : b.betti) line += " " + std::to_string(x);
  std::string ranks = "graded ranks";
  for (std::size_t x : b.graded_ranks) ranks += " " + std::to_string(x);
  o.text = {line, ranks};
  if (!b.consistent()) {
    o.text.push_back("graph not equivariantly formal / not GKM-consistent");
    o.violations.push_back("Betti numbers fail the vertex-count or palindrome check");
    o.code = kInconsistent;
  }
  return o;
}

Outcome cmd_connections(const ParsedGraph& p, bool signed_search, bool sigma_plus) {
  Outcome o;
  const GKMGraph& g = p.graph;
  if (signed_search) {
    const SignedConnectionSearch s = exists_signed_structure_with_connection(g);
    o.warnings = s.warnings;
    o.results["exists"] = s.witness.has_value();
    if (!s.witness) {
      o.text.push_back("no signed structure admits a connection");
      o.code = kNegative;
      return o;
    }
    o.results["signs"] = signs_json(g, s.witness->signs);
    o.results["connection"] = connection_json(g, s.witness->connection);
    o.text.push_back("signed structure with a connection found");
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      o.text.push_back("  " + edge_text(g, e) + " weight " + s.witness->signs.oriented(e).to_string());
    return o;
  }
  const ConnectionEnumeration c =
      enumerate_unsigned_connections(g, sigma_plus ? SignConvention::PlusOnly : SignConvention::PlusOrMinus);
  o.results["convention"] = sigma_plus ? "plus" : "plus_or_minus";
  o.results["count"] = c.count.get_str();
  json list = json::array();
  for (const Connection& con : c.connections) list.push_back(connection_json(g, con));
  o.results["connections"] = list;
  o.results["truncated"] = c.truncated;
  o.text.push_back("connections " + c.count.get_str());
  if (c.count == 0) o.code = kNegative;
  return o;
}

Outcome cmd_strata(const ParsedGraph& p) {
  Outcome o;
  const GKMGraph& g = p.graph;
  const StratPoset poset = orbit_poset(g);
  json elements = json::array();
  for (std::size_t i = 0; i < poset.elements.size(); ++i) {
    const StratElement& el = poset.elements[i];
    json names = json::array();
    for (VertexId v : el.component.vertices) names.push_back(g.vertex_name(v));
    elements.push_back(json{{"index", i},
                            {"vertices", names},
                            {"edges", el.component.edges},
                            {"generating_subgroup", subgroup_json(el.generating_subgroup)},
                            {"principal_isotropy", subgroup_json(el.principal_isotropy)},
                            {"isotropy_vertex_independent", el.isotropy_vertex_independent}});
    std::string line = "[" + std::to_string(i) + "] {";
    for (std::size_t k = 0; k < el.component.vertices.size(); ++k)
      line += (k ? "," : "") + g.vertex_name(el.component.vertices[k]);
    line += "} edges " + std::to_string(el.component.edges.size()) + " isotropy " + el.principal_isotropy.to_string();
    if (!el.isotropy_vertex_independent) line += " (depends on vertex)";
    o.text.push_back(line);
  }
  // Cover relations of the containment order.
  json covers = json::array();
  const std::size_t n = poset.elements.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !poset.leq[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && poset.leq[i][k] && poset.leq[k][j]) cover = false;
      if (cover) covers.push_back(json::array({i, j}));
    }
  o.results = json{{"elements", elements}, {"covers", covers}};
  if (!poset.all_isotropy_vertex_independent())
    o.warnings.push_back("principal isotropy depends on the chosen vertex for some element");
  o.text.insert(o.text.begin(), "strata " + std::to_string(n));
  return o;
}

Outcome cmd_iso(const ParsedGraph& a, const ParsedGraph& b, bool lattice) {
  Outcome o;
  std::optional<GraphIsomorphism> map;
  std::optional<IntMatrix> transform;
  if (lattice) {
    if (a.graph.rank() == b.graph.rank() && a.graph.valence() == b.graph.valence())
      if (auto l = isomorphic_up_to_lattice_aut(a.graph, b.graph)) {
        map = l->map;
        transform = l->transform;
      }
  } else {
    map = isomorphic_strict(a.graph, b.graph);
  }
  o.results["isomorphic"] = map.has_value();
  if (!map) {
    o.text.push_back("not isomorphic");
    o.code = kNegative;
    return o;
  }
  json vertices = json::object();
  o.text.push_back("isomorphic");
  for (VertexId v = 0; v < a.graph.vertex_count(); ++v) {
    vertices[a.graph.vertex_name(v)] = b.graph.vertex_name(map->vertex_map[v]);
    o.text.push_back("  " + a.graph.vertex_name(v) + " -> " + b.graph.vertex_name(map->vertex_map[v]));
  }
  o.results["vertex_map"] = vertices;
  o.results["edge_map"] = map->edge_map;
  if (transform) {
    json rows = json::array();
    for (std::size_t i = 0; i < transform->rows(); ++i) rows.push_back(transform->row(i).to_string());
    o.results["transform"] = rows;
    o.text.push_back("  transform " + transform->to_string());
  }
  return o;
}

// The signed structure of the file, or the first realizable one.
struct Realized {
  std::optional<SignedStructure> signs;
  RealizationResult result;
};

Realized realize_input(const ParsedGraph& p, bool any_signs, Outcome& o) {
  if (p.signs && !any_signs) return Realized{p.signs, realize(p.graph, *p.signs)};
  if (!any_signs) throw InputError("graph has no signed edges; pass --any-signs to search sign structures");
  SignSearch s = realize_any_signs(p.graph);
  o.warnings.insert(o.warnings.end(), s.warnings.begin(), s.warnings.end());
  if (!s.first) return Realized{std::nullopt, {}};
  RealizationResult r;
  r.realization = s.first->realization;
  return Realized{s.first->signs, std::move(r)};
}

Outcome cmd_realize(const ParsedGraph& p, bool any_signs) {
  Outcome o;
  const GKMGraph& g = p.graph;
  Realized r = realize_input(p, any_signs, o);
  o.results["feasible"] = r.result.feasible();
  if (!r.result.feasible()) {
    o.code = kNegative;
    if (r.result.certificate) {
      json flow = json::array();
      for (EdgeId e = 0; e < g.edge_count(); ++e)
        flow.push_back(json{{"edge", e},
                            {"multiplier", point_json(r.result.certificate->flow[e])},
                            {"length_weight", r.result.certificate->length_multipliers[e].get_str()}});
      o.results["certificate"] = flow;
      o.text.push_back("infeasible");
      o.text.push_back(r.result.certificate->describe(g));
    } else {
      o.text.push_back("infeasible for every sign structure");
    }
    return o;
  }
  o.results["signs"] = signs_json(g, *r.signs);
  o.results["realization"] = realization_json(g, *r.result.realization);
  o.text.push_back("feasible");
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    o.text.push_back("  mu(" + g.vertex_name(v) + ") = " + point_text(r.result.realization->positions[v]));
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    o.text.push_back("  length " + edge_text(g, e) + " = " + r.result.realization->lengths[e].get_str());
  return o;
}

std::optional<XRay> xray_of(const ParsedGraph& p, Outcome& o) {
  Realized r = realize_input(p, !p.signs.has_value(), o);
  if (!r.result.feasible()) return std::nullopt;
  return xray(p.graph, *r.signs, *r.result.realization);
}

json xray_json(const GKMGraph& g, const XRay& x) {
  json out = json::array();
  for (std::size_t i = 0; i < x.poset.elements.size(); ++i) {
    json names = json::array();
    for (VertexId v : x.poset.elements[i].component.vertices) names.push_back(g.vertex_name(v));
    json pts = json::array();
    for (const Point& pt : x.polytopes[i]) pts.push_back(point_json(pt));
    out.push_back(json{{"index", i}, {"vertices", names}, {"polytope", pts}});
  }
  return out;
}

Outcome cmd_xray(const ParsedGraph& p, const std::optional<ParsedGraph>& other, bool normalized) {
  Outcome o;
  const std::optional<XRay> x = xray_of(p, o);
  if (!x) {
    o.code = kNegative;
    o.results["realizable"] = false;
    o.text.push_back("no momentum realization");
    return o;
  }
  const XRay shown = normalized ? normalize_xray(*x) : *x;
  if (!other) {
    o.results["mode"] = normalized ? "normalized" : "exact";
    o.results["elements"] = xray_json(p.graph, shown);
    for (std::size_t i = 0; i < shown.polytopes.size(); ++i) {
      std::string line = "[" + std::to_string(i) + "]";
      for (const Point& pt : shown.polytopes[i]) line += " " + point_text(pt);
      o.text.push_back(line);
    }
    return o;
  }
  const std::optional<XRay> y = xray_of(*other, o);
  if (!y) {
    o.code = kNegative;
    o.results["realizable"] = false;
    o.text.push_back("second graph has no momentum realization");
    return o;
  }
  const bool equal = xray_equal(*x, *y, normalized ? XRayComparison::UpToTranslationAndScaling : XRayComparison::Exact);
  o.results["mode"] = normalized ? "normalized" : "exact";
  o.results["equal"] = equal;
  o.text.push_back(equal ? "x-rays coincide" : "x-rays differ");
  if (!equal) o.code = kNegative;
  return o;
}

Outcome cmd_integrate(const ParsedGraph& p, const std::string& text, const std::string& orientation_file) {
  Outcome o;
  const CharClassExpr expr = parse_expr(text, p.graph.valence());
  Rational value;
  if (!orientation_file.empty()) {
    const std::vector<int> orient = parse_orientation(read_file(orientation_file), p.graph);
    value = integrate_oriented(p.graph, orient, expr);
  } else if (p.signs) {
    value = integrate(p.graph, *p.signs, expr);
  } else {
    throw InputError("graph has no signed edges; pass --orientation for Pontryagin and Euler expressions");
  }
  o.results = json{{"expression", expr.to_string()}, {"value", value.get_str()}, {"integral", is_integral(value)}};
  o.text.push_back(expr.to_string() + " = " + value.get_str());
  if (!is_integral(value)) o.warnings.push_back("characteristic number is not an integer");
  return o;
}

Outcome cmd_catalog(const std::string& name, bool emit, const std::string& dir) {
  Outcome o;
  const std::vector<std::string> names = name.empty() ? catalog_names() : std::vector<std::string>{name};
  json entries = json::array();
  for (const std::string& n : names) {
    const CatalogEntry e = catalog(n);
    const std::string text = serialize_graph(e.graph, e.signs);
    json entry{{"name", e.name}, {"description", e.description}};
    if (emit) {
      const std::filesystem::path path = std::filesystem::path(dir) / (e.name + ".gkm");
      std::ofstream f(path);
      if (!f) throw InputError("cannot write '" + path.string() + "'");
      f << "# " << e.description << "\n" << text;
      entry["file"] = path.string();
      o.text.push_back("wrote " + path.string());
    } else if (!name.empty()) {
      entry["graph"] = text;
      o.text.push_back("# " + e.description);
      o.text.push_back(text.substr(0, text.size() - 1));
    } else {
      o.text.push_back(e.name + "  " + e.description);
    }
    entries.push_back(entry);
  }
  o.results["entries"] = entries;
  return o;
}

Outcome cmd_paper_check() {
  Outcome o;
  const std::vector<checks::CriterionResult> rows = checks::run_acceptance();
  json table = json::array();
  for (const checks::CriterionResult& r : rows) {
    table.push_back(json{{"id", r.id},
                         {"name", r.name},
                         {"expected", r.expected},
                         {"computed", r.computed},
                         {"passed", r.passed}});
    o.text.push_back(std::string(r.passed ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + "  " + r.name);
    o.text.push_back("      expected: " + r.expected);
    o.text.push_back("      computed: " + r.computed);
  }
  o.results["criteria"] = table;
  o.results["all_passed"] = checks::all_passed(rows);
  if (!checks::all_passed(rows)) o.code = kNegative;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on GKM graphs", "gkm-lab"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a JSON report");

  std::string file, file2, expr, orientation, name, dir = ".";
  bool signed_search = false, sigma_plus = false, lattice = false, any_signs = false, normalized = false,
       emit = false;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "Print a JSON report"); };
  auto* validate_cmd = app.add_subcommand("validate", "Check the GKM axioms");
  validate_cmd->add_option("file", file, "Graph file or builtin:NAME")->required();
  auto* info_cmd = app.add_subcommand("info", "Euler characteristic, complexity, valence, rank");
  info_cmd->add_option("file", file)->required();
  auto* betti_cmd = app.add_subcommand("betti", "Graded ranks and Betti numbers");
  betti_cmd->add_option("file", file)->required();
  auto* conn_cmd = app.add_subcommand("connections", "Connections on the graph");
  conn_cmd->add_option("file", file)->required();
  conn_cmd->add_flag("--signed", signed_search, "Search signed structures admitting a connection");
  conn_cmd->add_flag("--sigma-plus", sigma_plus, "Unsigned condition with sigma = +1 only");
  auto* strata_cmd = app.add_subcommand("strata", "Orbit-type stratification poset");
  strata_cmd->add_option("file", file)->required();
  auto* iso_cmd = app.add_subcommand("iso", "Graph isomorphism");
  iso_cmd->add_option("file1", file)->required();
  iso_cmd->add_option("file2", file2)->required();
  iso_cmd->add_flag("--lattice-aut", lattice, "Allow a change of basis of the weight lattice");
  auto* realize_cmd = app.add_subcommand("realize", "Momentum graph realization");
  realize_cmd->add_option("file", file)->required();
  realize_cmd->add_flag("--any-signs", any_signs, "Search over sign structures");
  auto* xray_cmd = app.add_subcommand("xray", "X-ray of a realization");
  xray_cmd->add_option("file", file)->required();
  xray_cmd->add_option("--compare", file2, "Second graph to compare with");
  xray_cmd->add_flag("--normalized", normalized, "Compare up to translation and scaling");
  auto* int_cmd = app.add_subcommand("integrate", "Characteristic number by localization");
  int_cmd->add_option("file", file)->required();
  int_cmd->add_option("--expr", expr, "Expression such as 'c1^2' or 'p1 + 3*c1*c1'")->required();
  int_cmd->add_option("--orientation", orientation, "File of 'VERTEX +1|-1' lines");
  auto* cat_cmd = app.add_subcommand("catalog", "Builtin graphs");
  cat_cmd->add_option("name", name);
  cat_cmd->add_flag("--emit", emit, "Write NAME.gkm files");
  cat_cmd->add_option("--dir", dir, "Directory for --emit");
  auto* check_cmd = app.add_subcommand("paper-check", "Run the reproduction suite");
  for (CLI::App* sub : app.get_subcommands({})) add_json(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  CLI::App* sub = app.get_subcommands().front();
  Outcome o;
  std::string input;
  try {
    if (sub == check_cmd) {
      o = cmd_paper_check();
    } else if (sub == cat_cmd) {
      o = cmd_catalog(name, emit, dir);
    } else {
      const ParsedGraph p = load(file);
      input = serialize_graph(p.graph, p.signs);
      std::optional<ParsedGraph> q;
      if (!file2.empty()) {
        q = load(file2);
        input += "--\n" + serialize_graph(q->graph, q->signs);
      }
      if (sub == validate_cmd) o = cmd_validate(p);
      else if (sub == info_cmd) o = cmd_info(p);
      else if (sub == betti_cmd) o = cmd_betti(p);
      else if (sub == conn_cmd) o = cmd_connections(p, signed_search, sigma_plus);
      else if (sub == strata_cmd) o = cmd_strata(p);
      else if (sub == iso_cmd) o = cmd_iso(p, *q, lattice);
      else if (sub == realize_cmd) o = cmd_realize(p, any_signs);
      else if (sub == xray_cmd) o = cmd_xray(p, q, normalized);
      else if (sub == int_cmd) o = cmd_integrate(p, expr, orientation);
    }
  } catch (const InconsistentDataError& e) {
    err << "inconsistent: " << e.what() << "\n";
    return kInconsistent;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (as_json) {
    json report{{"command", sub->get_name()},
                {"input_digest", input.empty() ? "" : digest(input)},
                {"exit_code", o.code},
                {"results", o.results},
                {"violations", o.violations},
                {"warnings", o.warnings}};
    out << report.dump(2) << "\n";
  } else {
    for (const std::string& line : o.text) out << line << "\n";
    for (const std::string& w : o.warnings) err << "warning: " << w << "\n";
  }
  return o.code;
}

}  // namespace gkm::cli
