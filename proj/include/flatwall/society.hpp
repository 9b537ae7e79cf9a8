#pragma once
// A society is a graph with a cyclically ordered list of boundary vertices.
// It is rural when it can be drawn in a disk with the boundary on the rim in
// order; the witness is a rendition.  A cross — two vertex-disjoint paths
// whose endpoints interleave along the boundary — certifies the opposite.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "flatwall/multigraph.hpp"
#include "flatwall/rendition.hpp"

namespace flatwall {

struct Society {
  Multigraph g;
  std::vector<VertexId> boundary;  // cyclic order, distinct vertices of g
};

// violations as human-readable lines; empty iff well-formed
std::vector<std::string> society_ok(const Society& s);

struct Cross {
  VertexPath path1;  // boundary[i] -> boundary[k]
  VertexPath path2;  // boundary[j] -> boundary[l], i < j < k < l
};

// decides rurality by testing planarity of the graph augmented with a
// boundary cycle and a hub vertex adjacent to the whole boundary; on success
// returns a validating rendition built from the augmented embedding
std::optional<Rendition> is_rural(const Society& s);

// exhaustive search over interleaved endpoint quadruples; requires a
// boundary of at least four vertices
std::optional<Cross> find_cross(const Society& s);

// two vertex-disjoint paths s1->t1, s2->t2 (all four endpoints distinct),
// found by exhaustive first-path enumeration; none if impossible
std::optional<std::pair<VertexPath, VertexPath>> two_disjoint_paths(
    const Multigraph& g, VertexId s1, VertexId t1, VertexId s2, VertexId t2);

nlohmann::ordered_json society_to_json(const Society& s);
Society society_from_json(const nlohmann::json& j);

}  // namespace flatwall
