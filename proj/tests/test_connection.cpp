#include <doctest.h>

#include "gkm/catalog.hpp"
#include "gkm/checks/oracles.hpp"
#include "gkm/connection.hpp"

using namespace gkm;

TEST_SUITE("connection") {

TEST_CASE("connection counts") {
  CHECK(enumerate_unsigned_connections(catalog("cp1").graph).count == 1);
  CHECK(enumerate_unsigned_connections(catalog("cp2").graph).count >= 1);
  CHECK(enumerate_unsigned_connections(catalog("example8").graph).count == 1);
}

TEST_CASE("counts agree with brute force") {
  for (const char* name : {"cp1", "cp2", "cp3", "example8", "product_s2s6"}) {
    CAPTURE(name);
    const GKMGraph g = catalog(name).graph;
    for (SignConvention c : {SignConvention::PlusOrMinus, SignConvention::PlusOnly})
      CHECK(enumerate_unsigned_connections(g, c).count == oracle::count_connections_brute_force(g, c));
  }
}

TEST_CASE("signed search agrees with brute force") {
  for (const char* name : {"cp1", "cp2", "example8", "product_s2s6"}) {
    CAPTURE(name);
    const GKMGraph g = catalog(name).graph;
    const SignedConnectionSearch s = exists_signed_structure_with_connection(g);
    CHECK(s.witness.has_value() == oracle::signed_connection_brute_force(g));
    if (s.witness) CHECK(check_connection(g, s.witness->signs, s.witness->connection));
  }
}

TEST_CASE("example8 has no signed connection") {
  CHECK_FALSE(exists_signed_structure_with_connection(catalog("example8").graph).witness);
}

TEST_CASE("incomplete connection is rejected") {
  const CatalogEntry e = catalog("cp2");
  CHECK_THROWS(check_connection(e.graph, *e.signs, Connection(std::vector<std::vector<EdgeId>>{})));
}

}
