#pragma once
// Combinatorial model of disk renditions of a society (G, C): the graph is
// carved into flaps, one per cell; each internal cell has at most three
// boundary nodes; cells are closed disks meeting only at nodes.  The point-set
// topology is replaced by its combinatorial shadow: every cell of degree k
// contributes k boundary arcs (one loop arc when k = 1), and a rotation
// system over the arc ends at each node fixes the drawing.  Faces of that
// skeleton are either cell interiors or free space; the external cell's
// interior is the outer face.
//
// Orientation conventions, used throughout and enforced by validate():
//  - rotations are counterclockwise; traced face walks keep their face on
//    the left;
//  - internal cell boundary tuples are stored clockwise (interior on the
//    right), so a cell's interior walk traverses its arcs reversed;
//  - the external cell's tuple is C in society order, which equals the
//    direction of its interior walk;
//  - skeleton components not attached to the external cell float, by
//    convention, in the free-space face just inside the external cell's
//    first arc — so they sit outside every grounded cycle.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "flatwall/multigraph.hpp"
#include "flatwall/planarity.hpp"

namespace flatwall {

using CellId = std::size_t;

struct RCell {
  std::vector<VertexId> boundary;    // cyclic node tuple; see conventions
  std::vector<VertexId> flap_verts;  // sorted
  std::vector<EdgeId> flap_edges;    // sorted
  int degree() const { return static_cast<int>(boundary.size()); }
  bool empty_flap() const { return flap_edges.empty(); }
};

// arc idx of a degree-k cell joins boundary[idx] to boundary[(idx+1) % k];
// degree-1 cells have the single loop arc idx 0, degree-2 cells two
// parallel arcs
struct ArcId {
  CellId cell = 0;
  int idx = 0;
  auto operator<=>(const ArcId&) const = default;
};

struct Slot {
  ArcId arc;
  int end = 0;  // 0 = at the arc's source node, 1 = at its target
  auto operator<=>(const Slot&) const = default;
};

// a directed traversal of one arc: dir 0 runs source -> target
struct ArcSide {
  ArcId arc;
  int dir = 0;
  auto operator<=>(const ArcSide&) const = default;
};

struct PlaneStructure {
  std::map<VertexId, std::vector<Slot>> rotation;  // counterclockwise per node
};

struct Rendition {
  static constexpr CellId external = 0;
  std::vector<VertexId> nodes;  // sorted
  std::vector<RCell> cells;     // cells[0] is the external cell
  std::vector<int> tau;         // degree-2 cells: track arc choice 0/1; else -1
  PlaneStructure plane;

  std::pair<VertexId, VertexId> arc_ends(ArcId a) const;
  bool is_node(VertexId v) const { return set_contains(nodes, v); }
};

// every axiom violation as a human-readable line; empty iff valid
std::vector<std::string> validate(const Multigraph& g,
                                  const std::vector<VertexId>& boundary,
                                  const Rendition& rho);

// every vertex a node, every edge its own degree-2 cell; the embedding must
// have a face whose walk visits the boundary in order (throws otherwise)
Rendition trivial_rendition(const Multigraph& g,
                            const std::vector<VertexId>& boundary,
                            const Embedding& emb);

// sum of internal cell degrees
int degree(const Rendition& rho);

// the unique cell whose flap holds each edge
std::map<EdgeId, CellId> edge_homes(const Rendition& rho);

// --- face machinery (exposed for the track/partition layer and tests) ---

// orbits of the face-tracing successor over all directed arc sides,
// deterministic order
std::vector<std::vector<ArcSide>> face_walks(const Rendition& rho);

// walk index tracing each cell's own interior, keyed by cell id
std::map<CellId, std::size_t> interior_walks(const Rendition& rho,
                                             const std::vector<std::vector<ArcSide>>& walks);

nlohmann::ordered_json rendition_to_json(const Rendition& rho);
Rendition rendition_from_json(const nlohmann::json& j);
std::string rendition_to_dot(const Rendition& rho, const Multigraph& g);

}  // namespace flatwall
