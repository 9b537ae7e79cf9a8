#pragma once
// The curve a grounded path or cycle traces through the disk.  A grounded
// path (both ends nodes) or cycle (edges in at least two cells) splits at
// its nodes into atomic factors, each confined to one cell; between two
// consecutive nodes the curve follows a node-free boundary arc of the
// factor's home cell.  Degree-3 homes admit only one such arc; degree-2
// homes keep a per-cell choice recorded in the rendition's tau.
//
// A closed track is a Jordan loop in the disk, so it classifies the
// internal cells: inside, outside, or border (an outside cell that is home
// to a factor).  A cycle is proper when every border cell has degree 3
// with exactly two of its nodes on the cycle.  reroute_cycle performs the
// three local surgeries that grow the inside region: flipping a degree-2
// border cell's arc choice, bypassing the middle node of a fully-covered
// degree-3 border cell through its flap, and absorbing the edge of a
// trivial outside cell that joins two cycle nodes.
//
// Cycles here may be digons (two vertices joined by parallel edges); those
// fail VertexPath::ok on vertex count alone, so this module carries its own
// structural check.

#include <vector>

#include "flatwall/rendition.hpp"

namespace flatwall {

struct AtomicFactor {
  VertexPath path;  // directed subpath; ends are nodes, interior is node-free
  CellId home = 0;  // the one cell holding every edge of the factor
};

struct Track {
  bool closed = false;
  std::vector<VertexId> nodes;  // in traversal order
  std::vector<ArcId> arcs;      // arcs[i] joins nodes[i] to nodes[i+1 (mod)]
};

// inside / outside / border are pairwise disjoint and cover the internal
// cells; border cells are the outside-region cells that own a track arc
struct DiskPartition {
  std::vector<CellId> inside, outside, border;  // each sorted
};

enum class RerouteMove {
  flip_arc,     // switch a degree-2 border cell to its other boundary arc
  bypass_node,  // reroute around the middle node of a full border cell
  absorb_edge,  // pull a trivial outside cell's edge into the cycle
};

struct Reroute {
  VertexPath cycle;  // clockwise
  Rendition rho;
};

// paths: both ends are nodes; cycles: edges in at least two distinct cells
bool is_grounded(const Multigraph& g, const VertexPath& x, const Rendition& rho);

// split x at its nodes; concatenating the factors reproduces x (cycles are
// rotated to start at their first listed node)
std::vector<AtomicFactor> atomic_decomposition(const Multigraph& g, const VertexPath& x,
                                               const Rendition& rho);

// the traced curve; independent of direction as a node/arc set
Track track(const Multigraph& g, const VertexPath& x, const Rendition& rho);

// requires t.closed; region-grows faces from the external cell's interior
DiskPartition disk_partition(const Track& t, const Rendition& rho);

// true when the listed direction keeps the track's enclosed region on the
// right, i.e. the cycle is written clockwise
bool is_clockwise(const Multigraph& g, const VertexPath& cycle, const Rendition& rho);

// every border cell has degree 3 with exactly two nodes on the cycle
bool is_proper(const Multigraph& g, const VertexPath& d, const Rendition& rho);

// apply one move at the given cell; the returned cycle is clockwise, its
// nodes are a subset of e's in the same circular order, and the inside cell
// set grows (strictly for bypass_node/absorb_edge, by exactly the flipped
// cell for flip_arc)
Reroute reroute_cycle(const Multigraph& g, const VertexPath& e, const Rendition& rho,
                      RerouteMove move, CellId cell);

}  // namespace flatwall
