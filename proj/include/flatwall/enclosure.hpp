// Cycle enclosure: given a society whose graph draws in a disk, a connected
// subgraph W, a cycle D inside W and four access paths tying D to the society
// boundary, reroute D outward across the disk until the resulting cycle is
// proper.  The rerouted cycle fences off a separation of the graph: everything
// it encloses (side B) meets the rest (side A) only on vertices of D, and the
// enclosed part itself draws in a disk with the interface on its rim.

#pragma once

#include <array>
#include <vector>

#include "flatwall/multigraph.hpp"
#include "flatwall/rendition.hpp"
#include "flatwall/separation.hpp"
#include "flatwall/society.hpp"

namespace flatwall {

struct EnclosureResult {
  Rendition rho;           // tightened disk rendition of the ambient society
  VertexPath d_clockwise;  // the input cycle, normalized to clockwise order
  VertexPath cycle;        // final proper grounded cycle E, clockwise
  Separation sep;          // (A, B); B = the part enclosed by `cycle`
  std::vector<VertexId> omega;      // interface vertices, in cycle order
  std::vector<VertexId> off_cycle;  // omega members not visited by `cycle`
  Rendition witness;       // disk rendition of (induced(g, B), omega)
};

// Requirements, checked on entry (std::invalid_argument names the violated
// clause):
//   - s is a valid society with at least 4 boundary vertices, and its graph
//     draws in a disk with the boundary on the rim;
//   - d is a closed simple cycle inside w, and w minus the vertices of d is
//     non-empty and connected;
//   - each access path runs from a boundary vertex of s to a vertex of
//     w - V(d), is simple, and meets d in a non-empty subpath; the four paths
//     share no vertex except possibly a common final vertex.
//
// Guarantees, machine-checked before returning (invariant_error otherwise):
//   - cycle is proper and grounded in rho, runs clockwise, visits a subset of
//     d's junction vertices in the same circular order, and agrees with d on
//     every stretch joining two junctions consecutive on both cycles;
//   - the region enclosed by cycle contains the region enclosed by d;
//   - sep is a separation of s.g with interface inside V(d), V(w) inside
//     sep.b, and omega inside the interface;
//   - witness is a valid disk rendition of (induced(s.g, sep.b), omega).
EnclosureResult enclose_cycle(const Society& s, const SubgraphRef& w,
                              const VertexPath& d,
                              const std::array<VertexPath, 4>& access);

}  // namespace flatwall
