#pragma once

// Text formats: characteristic-class expressions and graph files.
//
// Expressions:  expr   := ['-'] term (('+' | '-') term)*
//               term   := integer ['*' factor ('*' factor)*] | factor ('*' factor)*
//               factor := symbol ['^' integer]
//               symbol := c1..c9 | p1..p4 | eu
//
// Graph files (one statement per line, '#' starts a comment):
//   rank R
//   valence N                  (optional; inferred from the first vertex)
//   vertex NAME
//   edge NAME1 NAME2 (a,b,...)
//   signed edge NAME1 NAME2 (a,b,...)   weight on NAME1 -> NAME2

#include <optional>
#include <string>
#include <string_view>

#include "gkm/graph.hpp"
#include "gkm/localization.hpp"

namespace gkm {

// Throws ParseError (with column) for syntax errors and InputError for
// inhomogeneous expressions or symbols out of range for the valence.
CharClassExpr parse_expr(std::string_view text, std::size_t valence);

struct ParsedGraph {
  GKMGraph graph;
  std::optional<SignedStructure> signs;
};

// Throws ParseError with line and column.
ParsedGraph parse_graph(std::string_view text);

// Canonical text; parse_graph(serialize_graph(g, s)) reproduces g and s.
std::string serialize_graph(const GKMGraph& g, const std::optional<SignedStructure>& signs = std::nullopt);

// Vertex orientations, one "NAME +1" or "NAME -1" per line.
std::vector<int> parse_orientation(std::string_view text, const GKMGraph& g);

}  // namespace gkm
