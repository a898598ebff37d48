#pragma once

// Connections in the sense of Guillemin-Zara: for every oriented edge
// e: p -> q a bijection from the edges at p to the edges at q sending e to
// itself (seen from q), compatible with the labels modulo label(e).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gkm/graph.hpp"

namespace gkm {

class Connection {
 public:
  Connection() = default;
  // images[e][k] is the edge at edge(e).v assigned to incident(edge(e).u)[k].
  explicit Connection(std::vector<std::vector<EdgeId>> images) : images_(std::move(images)) {}

  const std::vector<std::vector<EdgeId>>& images() const { return images_; }

  // Transport of `moved` (an edge at `from`) along `along`, with `from` one
  // endpoint of `along`. Reverse transport is the inverse bijection.
  EdgeId transport(const GKMGraph& g, EdgeId along, VertexId from, EdgeId moved) const;

  friend bool operator==(const Connection&, const Connection&) = default;
  friend bool operator<(const Connection& a, const Connection& b) { return a.images_ < b.images_; }

 private:
  std::vector<std::vector<EdgeId>> images_;
};

enum class SignConvention {
  // label(nabla e') = +-label(e') + c label(e)
  PlusOrMinus,
  // label(nabla e') = label(e') + c label(e), with canonical representatives
  PlusOnly,
};

struct ConnectionEnumeration {
  Integer count;                        // total number of connections
  std::vector<Connection> connections;  // first `max_listed`, in canonical order
  bool truncated = false;
};

ConnectionEnumeration enumerate_unsigned_connections(const GKMGraph& g,
                                                     SignConvention convention = SignConvention::PlusOrMinus,
                                                     std::size_t max_listed = 64);

struct SignedConnectionWitness {
  SignedStructure signs;
  Connection connection;
};

struct SignedConnectionSearch {
  std::optional<SignedConnectionWitness> witness;
  std::uint64_t complete_sign_structures = 0;  // leaves reached by the search
  std::vector<std::string> warnings;
};

// Searches every sign structure (modulo global negation) for one that admits
// a connection with label(nabla e') = label(e') + c label(e), c in Z.
SignedConnectionSearch exists_signed_structure_with_connection(const GKMGraph& g);

// True iff every transport satisfies the signed compatibility condition.
// Throws InputError when the connection is not a complete family of
// bijections on g.
bool check_connection(const GKMGraph& g, const SignedStructure& s, const Connection& nabla);

// Edge ids sorted by (endpoints, label, id); the canonical enumeration order.
std::vector<EdgeId> canonical_edge_order(const GKMGraph& g);

}  // namespace gkm
