#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gkm/graph.hpp"

namespace gkm {

struct CatalogEntry {
  std::string name;
  std::string description;
  GKMGraph graph;
  std::optional<SignedStructure> signs;
};

// example8, product_s2s6, cp1 .. cp6, cp1xcp3, hamiltonian_y
std::vector<std::string> catalog_names();

// Accepts the names above and "cp(n)" as an alias of "cpn".
// Throws InputError for unknown names.
CatalogEntry catalog(std::string_view name);

// Complex projective space CP^n with the standard T^n action.
CatalogEntry complex_projective_space(std::size_t n);

}  // namespace gkm
