#include "gkm/catalog.hpp"

#include <charconv>

#include "gkm/errors.hpp"

namespace gkm {

namespace {

// Standard basis of Z^rank for i < rank, and 0 for i == rank.
Weight epsilon(std::size_t rank, std::size_t i) {
  return i < rank ? Weight::unit(rank, i) : Weight::zero(rank);
}

const Weight kVertical{1, -1, -1};

// Four fixed points; S^6 meridians carry the coordinate weights, S^2 the
// weight (1,-1,-1).
CatalogEntry sphere_bundle_graph(std::string name, std::string description, bool product_order) {
  GKMGraph g(3, 4);
  const VertexId a = g.add_vertex("a");
  const VertexId b = g.add_vertex("b");
  const VertexId c = g.add_vertex("c");
  const VertexId d = g.add_vertex("d");
  auto horizontals = [&] {
    for (VertexId x : {a, c}) {
      const VertexId y = x == a ? b : d;
      for (std::size_t i = 0; i < 3; ++i) g.add_edge(x, y, Weight::unit(3, i));
    }
  };
  if (product_order) {
    g.add_edge(a, c, kVertical);
    g.add_edge(b, d, kVertical);
    horizontals();
  } else {
    horizontals();
    g.add_edge(a, c, kVertical);
    g.add_edge(b, d, kVertical);
  }
  return {std::move(name), std::move(description), std::move(g), std::nullopt};
}

// Two copies of CP^3 joined by vertical edges of weight (1,-1,-1).
// `interleaved` lists the same data in a different vertex and edge order,
// with vertical edges stored in the opposite direction.
CatalogEntry cp1_bundle_graph(std::string name, std::string description, bool interleaved) {
  GKMGraph g(3, 4);
  std::vector<Weight> oriented;
  VertexId lower[4];
  VertexId upper[4];
  auto horizontal_copy = [&](const VertexId* copy, bool reverse) {
    if (!reverse) {
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
          g.add_edge(copy[i], copy[j], epsilon(3, i) - epsilon(3, j));
          oriented.push_back(epsilon(3, j) - epsilon(3, i));
        }
    } else {
      for (std::size_t i = 4; i-- > 0;)
        for (std::size_t j = 4; j-- > i + 1;) {
          g.add_edge(copy[j], copy[i], epsilon(3, i) - epsilon(3, j));
          oriented.push_back(epsilon(3, i) - epsilon(3, j));
        }
    }
  };
  if (!interleaved) {
    for (std::size_t i = 0; i < 4; ++i) lower[i] = g.add_vertex("a" + std::to_string(i));
    for (std::size_t i = 0; i < 4; ++i) upper[i] = g.add_vertex("b" + std::to_string(i));
    horizontal_copy(lower, false);
    horizontal_copy(upper, false);
    for (std::size_t i = 0; i < 4; ++i) {
      g.add_edge(lower[i], upper[i], kVertical);
      oriented.push_back(kVertical);
    }
  } else {
    for (std::size_t i = 0; i < 4; ++i) {
      lower[i] = g.add_vertex("p" + std::to_string(i));
      upper[i] = g.add_vertex("q" + std::to_string(i));
    }
    for (std::size_t i = 0; i < 4; ++i) {
      g.add_edge(upper[i], lower[i], kVertical);
      oriented.push_back(-kVertical);
    }
    horizontal_copy(upper, true);
    horizontal_copy(lower, false);
  }
  SignedStructure s = SignedStructure::from_weights(g, oriented);
  return {std::move(name), std::move(description), std::move(g), std::move(s)};
}

}  // namespace

CatalogEntry complex_projective_space(std::size_t n) {
  if (n == 0) throw InputError("cp(n) needs n >= 1");
  GKMGraph g(n, n);
  for (std::size_t i = 0; i <= n; ++i) g.add_vertex("v" + std::to_string(i));
  std::vector<Weight> oriented;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      g.add_edge(i, j, epsilon(n, i) - epsilon(n, j));
      // Tangent weight at the fixed point v_i.
      oriented.push_back(epsilon(n, j) - epsilon(n, i));
    }
  SignedStructure s = SignedStructure::from_weights(g, oriented);
  return {"cp" + std::to_string(n), "CP^" + std::to_string(n) + " with the standard T^" +
                                        std::to_string(n) + "-action",
          std::move(g), std::move(s)};
}

std::vector<std::string> catalog_names() {
  return {"example8", "product_s2s6", "cp1", "cp2", "cp3", "cp4", "cp5", "cp6", "cp1xcp3",
          "hamiltonian_y"};
}

CatalogEntry catalog(std::string_view name) {
  if (name == "example8")
    return sphere_bundle_graph("example8",
                               "T^3-action on the nontrivial S^2-bundle over S^6 (X-graph)", false);
  if (name == "product_s2s6")
    return sphere_bundle_graph("product_s2s6", "product T^3-action on S^2 x S^6", true);
  if (name == "cp1xcp3")
    return cp1_bundle_graph("cp1xcp3", "product T^3-action on CP^1 x CP^3", false);
  if (name == "hamiltonian_y")
    return cp1_bundle_graph("hamiltonian_y",
                            "Hamiltonian T^3-action on the nontrivial CP^1-bundle Y over CP^3",
                            true);

  std::string_view digits;
  if (name.size() == 3 && name.substr(0, 2) == "cp") {
    digits = name.substr(2);
  } else if (name.size() == 5 && name.substr(0, 3) == "cp(" && name.back() == ')') {
    digits = name.substr(3, 1);
  }
  std::size_t n = 0;
  if (!digits.empty()) {
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1 && n <= 6)
      return complex_projective_space(n);
  }
  throw InputError("unknown catalog graph '" + std::string(name) + "'");
}

}  // namespace gkm
