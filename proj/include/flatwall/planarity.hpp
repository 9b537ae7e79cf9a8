#pragma once
// Planarity testing and combinatorial embeddings, on simplified graphs.
// Parallel edges never change planarity, so callers that care about them
// (rendition construction) reinsert parallels after embedding.

#include <map>
#include <optional>

#include "flatwall/multigraph.hpp"

namespace flatwall {

// simple version of g: same vertices, one edge per adjacent pair
Multigraph simplify(const Multigraph& g);

bool is_planar(const Multigraph& g);

// Rotation system of a planar embedding: for each vertex, the cyclic order
// of its neighbors around it (consistent orientation across the graph).
struct Embedding {
  std::map<VertexId, std::vector<VertexId>> rotation;
};

// Embedding of simplify(g); nullopt when non-planar.
std::optional<Embedding> planar_embedding(const Multigraph& g);

}  // namespace flatwall
