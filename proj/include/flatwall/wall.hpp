#pragma once
// Brick walls on an integer lattice.  A wall is a rows×cols grid of bricks
// (bricks are 6-cycles two lattice units wide, one tall) with alternating row
// offsets.  Realized graphs may subdivide lattice edges arbitrarily, and may
// live inside a larger host graph; all structural queries run on the lattice
// frame and lift through the subdivision map.

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "flatwall/multigraph.hpp"

namespace flatwall {

struct Coord {
  int x = 0, y = 0;
  auto operator<=>(const Coord&) const = default;
};
using ElemEdge = std::pair<Coord, Coord>;  // canonical form: first < second

ElemEdge elem_edge(Coord a, Coord b);

enum class BrickKind {
  Interior,
  Top,
  Bottom,
  BulgingLeftSide,
  BulgingRightSide,
  RecessedSide,
  BulgingCornerBL,
  BulgingCornerTL,
  BulgingCornerTR,
  BulgingCornerBR,
  RecessedCornerBL,
  RecessedCornerTL,
  RecessedCornerTR,
  RecessedCornerBR,
};
std::string to_string(BrickKind k);
bool kind_has_interval(BrickKind k);
bool kind_is_corner(BrickKind k);

struct Wall {
  int rows = 0, cols = 0;
  int x0 = 0, y0 = 0;   // lattice position of brick (0,0)'s bottom-left area
  int parity = 0;       // brick row i is shifted right by (i + parity) % 2
  Multigraph g;         // realized (possibly subdivided) wall graph
  std::map<Coord, VertexId> at;               // lattice vertex -> realized id
  std::map<VertexId, Coord> lattice_of;       // inverse of `at`
  std::map<ElemEdge, std::vector<VertexId>> stretch;  // realized path, ends included

  int offset(int brick_row) const { return (brick_row + parity) & 1; }
  // covered x span [lo, hi] of lattice line y; nullopt when line absent
  std::optional<std::pair<int, int>> line_span(int y) const;
  bool in_frame(Coord c) const;
  bool frame_adjacent(Coord a, Coord b) const;  // lattice edge present
  std::vector<Coord> frame_vertices() const;    // sorted
  std::vector<ElemEdge> frame_edges() const;    // sorted
  int frame_degree(Coord c) const;
  std::array<Coord, 6> brick_cycle(int row, int col) const;  // ccw from bottom-left
  VertexId vertex(Coord c) const;               // realized id, throws if absent
  // realized path along one lattice edge, oriented a -> b
  std::vector<VertexId> stretch_path(Coord a, Coord b) const;
};

struct PegInterval {
  VertexPath path;              // realized subpath of D, clockwise orientation
  std::vector<Coord> elem_run;  // the lattice vertices under it, same order
  int brick_row = 0, brick_col = 0;
  BrickKind kind = BrickKind::Interior;
  VertexId alpha = 0, beta = 0;  // realized ends; alpha is clockwise-first
  VertexId terminus = 0;         // attachment peg m; defaults to the middle
  std::vector<VertexId> interior() const;  // realized pegs, alpha side first
};

Wall make_wall(int rows, int cols);
Wall elementary_wall(int r);
// plan: lattice edge -> number of inner vertices to insert
Wall subdivide(const Wall& w, const std::map<ElemEdge, int>& plan);
bool wall_ok(const Wall& w);  // realized graph is exactly a frame subdivision

// clockwise boundary cycle (interior on the right in lattice drawing)
std::vector<Coord> boundary_elementary(const Wall& w);
VertexPath boundary(const Wall& w);

BrickKind classify_brick(const Wall& w, int row, int col);
std::vector<PegInterval> peg_intervals(const Wall& w);
// both paths from I.terminus, one through alpha, one through beta, meeting at
// a common vertex off the boundary
std::pair<VertexPath, VertexPath> pegging_paths(const Wall& w, const PegInterval& I);

Wall subwall(const Wall& w, int anchor_row, int anchor_col, int height);

struct AccessPaths {
  std::vector<PegInterval> intervals;    // inner's intervals, termini updated
  std::vector<VertexPath> paths;         // R_I per interval, ends at terminus
  std::array<std::size_t, 4> corner_intervals{};  // indices of the 4 corner-brick intervals
};
// inner must sit strictly inside outer; paths live in outer.g and reach
// outer's boundary
AccessPaths corner_access_paths(const Wall& outer, const Wall& inner);

// Lattice-level routing primitives (also used to build access paths for
// subwalls of an already enclosed wall).
//
// wave_coords: vertical square-wave between columns x and x+1, from
// (x, y_from) to the lattice line y_to; the first move is vertical.
// line_coords: walk from `from` along its lattice line to the line's end in
// direction dir (+1 right, -1 left), `from` included.
// realize_run: the realized open path along consecutive lattice coords.
std::vector<Coord> wave_coords(const Wall& w, int x, int y_from, int y_to);
std::vector<Coord> line_coords(const Wall& w, Coord from, int dir);
VertexPath realize_run(const Wall& w, const std::vector<Coord>& coords);

nlohmann::ordered_json wall_to_json(const Wall& w);
Wall wall_from_json(const nlohmann::json& j);
std::string wall_to_dot(const Wall& w);

}  // namespace flatwall
