#include <doctest.h>

#include <random>

#include "gkm/checks/acceptance.hpp"
#include "gkm/checks/oracles.hpp"
#include "gkm/lattice.hpp"

using namespace gkm;

TEST_SUITE("lattice") {

TEST_CASE("smith form of small matrices") {
  const SmithForm s = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  CHECK(s.diagonal == std::vector<Integer>{2, 4});
  CHECK(oracle::smith_form_consistent(IntMatrix{{2, 4}, {6, 8}}, s));

  CHECK(smith_normal_form(IntMatrix{{1}}).diagonal == std::vector<Integer>{1});

  const IntMatrix zero(2, 3);
  const SmithForm z = smith_normal_form(zero);
  CHECK(z.diagonal == std::vector<Integer>{0, 0});
  CHECK(oracle::smith_form_consistent(zero, z));
}

TEST_CASE("smith diagonal matches determinantal divisors") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> entry(-6, 6), dim(1, 4);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = dim(rng), c = dim(rng);
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = entry(rng);
    const SmithForm s = smith_normal_form(a);
    REQUIRE(oracle::smith_form_consistent(a, s));
    CHECK(s.diagonal == oracle::determinantal_invariants(a));
    if (r == c) CHECK(abs(determinant(a)) == abs(oracle::laplace_determinant(a)));
  }
}

TEST_CASE("kernel of weights") {
  // ker (2,0) has two components, identity component ker (1,0).
  const TorusSubgroup h = kernel_of_weights({Weight{2, 0}}, 2);
  CHECK(h.dim_identity_component() == 1);
  CHECK(h.torsion_invariants() == std::vector<Integer>{2});
  CHECK(vanishes_on(Weight{2, 0}, h));
  CHECK_FALSE(vanishes_on(Weight{1, 0}, h));
  CHECK(vanishes_on(Weight{4, 0}, h));
  CHECK(identity_component(h) == kernel_of_weights({Weight{1, 0}}, 2));

  const TorusSubgroup k = kernel_of_weights({Weight{1, -1, -1}}, 3);
  CHECK(vanishes_on(Weight{-2, 2, 2}, k));
  CHECK_FALSE(vanishes_on(Weight{1, 0, 0}, k));
}

TEST_CASE("intersection and containment") {
  const TorusSubgroup a = kernel_of_weights({Weight{1, 0, 0}}, 3);
  const TorusSubgroup b = kernel_of_weights({Weight{0, 1, 0}}, 3);
  const TorusSubgroup ab = intersect(a, b);
  CHECK(ab == kernel_of_weights({Weight{1, 0, 0}, Weight{0, 1, 0}}, 3));
  CHECK(ab.dim_identity_component() == 1);
  CHECK(subgroup_contains(a, ab));
  CHECK(subgroup_contains(b, ab));
  CHECK_FALSE(subgroup_contains(ab, a));
  CHECK(subgroup_contains(TorusSubgroup::full(3), a));
  CHECK(TorusSubgroup::trivial(3).dim_identity_component() == 0);
}

TEST_CASE("same subgroup from different generators") {
  const TorusSubgroup a = kernel_of_weights({Weight{1, 1}, Weight{1, -1}}, 2);
  const TorusSubgroup b = kernel_of_weights({Weight{2, 0}, Weight{1, 1}}, 2);
  CHECK(a == b);
  CHECK(a.torsion_invariants() == std::vector<Integer>{2});
}

TEST_CASE("vanishing agrees with kernel evaluation") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int t = 0; t < 100; ++t) {
    std::vector<Weight> s;
    for (int k = 0; k < 2; ++k) s.push_back(Weight{entry(rng), entry(rng), entry(rng)});
    const TorusSubgroup h = kernel_of_weights(s, 3);
    const Weight w{entry(rng), entry(rng), entry(rng)};
    CHECK(vanishes_on(w, h) == oracle::character_trivial_on_kernel(w, s, 3));
  }
}

TEST_CASE("random property suites") {
  CHECK(checks::smith_form_property(100, 5).failures == 0);
  CHECK(checks::annihilator_property(50, 6).failures == 0);
}

}
