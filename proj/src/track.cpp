#include "flatwall/track.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "flatwall/check.hpp"

namespace flatwall {

namespace {

// VertexPath::ok rejects two-vertex cycles, but a digon bounded by parallel
// edges is a perfectly good grounded cycle in a multigraph
bool cycle_shape_ok(const Multigraph& g, const VertexPath& x) {
  if (!x.closed || x.verts.size() < 2) return false;
  if (x.edges.size() != x.verts.size()) return false;
  for (std::size_t i = 0; i < x.edges.size(); ++i) {
    const Edge e = g.edge(x.edges[i]);
    const VertexId a = x.verts[i], b = x.verts[(i + 1) % x.verts.size()];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return false;
  }
  if (sorted_unique(x.verts).size() != x.verts.size()) return false;
  return sorted_unique(x.edges).size() == x.edges.size();
}

void check_input(const Multigraph& g, const VertexPath& x) {
  FW_CHECK(x.closed ? cycle_shape_ok(g, x) : x.ok(g), "path or cycle is well-formed");
}

// ---- face bookkeeping shared by partition, direction and surgery ----

struct FaceData {
  std::vector<std::vector<ArcSide>> walks;
  std::map<ArcSide, std::size_t> face_of;
  std::map<CellId, std::size_t> interior;
  std::size_t star = 0;  // the external cell's interior, i.e. the outer face
};

FaceData faces_of(const Rendition& rho) {
  FaceData fd;
  fd.walks = face_walks(rho);
  for (std::size_t i = 0; i < fd.walks.size(); ++i)
    for (const ArcSide& s : fd.walks[i]) fd.face_of[s] = i;
  fd.interior = interior_walks(rho, fd.walks);
  fd.star = fd.interior.at(Rendition::external);
  return fd;
}

// union-find over nodes: a cell's arcs connect its boundary nodes in a cycle,
// so two nodes share a skeleton component iff a chain of cells links them
struct SkeletonParts {
  std::map<VertexId, VertexId> parent;
  VertexId find(VertexId v) {
    while (parent.at(v) != v) v = parent[v] = parent.at(parent.at(v));
    return v;
  }
};

SkeletonParts skeleton_parts(const Rendition& rho) {
  SkeletonParts sp;
  for (VertexId n : rho.nodes) sp.parent[n] = n;
  for (const RCell& cell : rho.cells) {
    for (std::size_t i = 1; i < cell.boundary.size(); ++i)
      sp.parent[sp.find(cell.boundary[0])] = sp.find(cell.boundary[i]);
  }
  return sp;
}

// the drawing only pins down nesting for the skeleton part attached to the
// external cell; parts that float are outside every grounded cycle, so a
// track must stay in the attached part for its disk to be meaningful
VertexId attached_root(const Rendition& rho, SkeletonParts& sp) {
  const auto& ext = rho.cells[Rendition::external].boundary;
  FW_CHECK(!ext.empty(), "the external cell has boundary nodes");
  return sp.find(ext.front());
}

void check_track_attached(const Rendition& rho, SkeletonParts& sp,
                          const std::vector<ArcId>& arcs) {
  const VertexId root = attached_root(rho, sp);
  for (const ArcId& a : arcs)
    FW_CHECK(sp.find(rho.cells[a.cell].boundary.front()) == root,
             "the track lies in the skeleton part attached to the external cell");
}

// faces reachable from the outer face without crossing a cut arc
std::vector<char> outer_region(const FaceData& fd, const std::vector<ArcId>& cut_arcs) {
  const std::set<ArcId> cut(cut_arcs.begin(), cut_arcs.end());
  std::vector<char> out(fd.walks.size(), 0);
  std::vector<std::size_t> queue{fd.star};
  out[fd.star] = 1;
  while (!queue.empty()) {
    const std::size_t f = queue.back();
    queue.pop_back();
    for (const ArcSide& s : fd.walks[f]) {
      if (cut.count(s.arc)) continue;
      const std::size_t o = fd.face_of.at(ArcSide{s.arc, 1 - s.dir});
      if (!out[o]) {
        out[o] = 1;
        queue.push_back(o);
      }
    }
  }
  return out;
}

// ---- cycle plumbing ----

VertexPath reverse_cycle(const VertexPath& x) {
  VertexPath r = x;
  const std::size_t n = x.verts.size();
  for (std::size_t i = 1; i < n; ++i) r.verts[i] = x.verts[n - i];
  for (std::size_t i = 0; i < n; ++i) r.edges[i] = x.edges[n - 1 - i];
  return r;
}

VertexPath rotate_to(const VertexPath& x, VertexId start) {
  const auto it = std::find(x.verts.begin(), x.verts.end(), start);
  FW_CHECK(it != x.verts.end(), "rotation start lies on the cycle");
  const std::size_t k = static_cast<std::size_t>(it - x.verts.begin());
  const std::size_t n = x.verts.size();
  VertexPath r = x;
  for (std::size_t i = 0; i < n; ++i) {
    r.verts[i] = x.verts[(k + i) % n];
    r.edges[i] = x.edges[(k + i) % n];
  }
  return r;
}

// replace the segment of cyc running from repl.front to repl.back (in cyc's
// listed direction) with repl itself
VertexPath splice_segment(const VertexPath& cyc, const VertexPath& repl) {
  const VertexPath rot = rotate_to(cyc, repl.verts.front());
  const auto it = std::find(rot.verts.begin(), rot.verts.end(), repl.verts.back());
  FW_CHECK(it != rot.verts.end(), "replacement ends lie on the cycle");
  const std::size_t kp = static_cast<std::size_t>(it - rot.verts.begin());
  VertexPath out;
  out.closed = true;
  out.verts = repl.verts;
  out.edges = repl.edges;
  for (std::size_t i = kp + 1; i < rot.verts.size(); ++i) out.verts.push_back(rot.verts[i]);
  for (std::size_t i = kp; i < rot.edges.size(); ++i) out.edges.push_back(rot.edges[i]);
  return out;
}

// shortest route between two boundary nodes through a cell's flap, skipping
// one forbidden vertex; deterministic via sorted adjacency
std::optional<VertexPath> flap_route(const Multigraph& g, const RCell& cell, VertexId from,
                                     VertexId to, VertexId avoid) {
  std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>> adj;
  for (EdgeId e : cell.flap_edges) {
    const Edge ed = g.edge(e);
    adj[ed.u].push_back({ed.v, e});
    adj[ed.v].push_back({ed.u, e});
  }
  for (auto& [v, around] : adj) std::sort(around.begin(), around.end());
  std::map<VertexId, std::pair<VertexId, EdgeId>> parent;
  std::vector<VertexId> queue{from};
  parent[from] = {from, 0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    if (v == to) break;
    for (const auto& [w, e] : adj[v]) {
      if (w == avoid || parent.count(w)) continue;
      parent[w] = {v, e};
      queue.push_back(w);
    }
  }
  if (!parent.count(to)) return std::nullopt;
  std::vector<VertexId> rv{to};
  std::vector<EdgeId> re;
  for (VertexId cur = to; cur != from;) {
    const auto [pv, pe] = parent.at(cur);
    re.push_back(pe);
    rv.push_back(pv);
    cur = pv;
  }
  VertexPath p;
  p.verts.assign(rv.rbegin(), rv.rend());
  p.edges.assign(re.rbegin(), re.rend());
  return p;
}

bool cyclic_equal(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t off = 0; off < b.size(); ++off) {
    bool same = true;
    for (std::size_t i = 0; i < a.size() && same; ++i) same = a[i] == b[(off + i) % b.size()];
    if (same) return true;
  }
  return false;
}

// the surviving nodes keep their circular order across the reroute
bool node_order_agrees(const Rendition& rho, const VertexPath& before, const VertexPath& after) {
  std::vector<VertexId> a, b;
  for (VertexId v : before.verts)
    if (rho.is_node(v) && after.contains_vertex(v)) a.push_back(v);
  for (VertexId v : after.verts)
    if (rho.is_node(v)) b.push_back(v);
  return cyclic_equal(a, b);
}

bool strictly_grows(const std::vector<CellId>& from, const std::vector<CellId>& to) {
  return from.size() < to.size() &&
         std::includes(to.begin(), to.end(), from.begin(), from.end());
}

}  // namespace

bool is_grounded(const Multigraph& g, const VertexPath& x, const Rendition& rho) {
  check_input(g, x);
  if (!x.closed) return rho.is_node(x.verts.front()) && rho.is_node(x.verts.back());
  const auto homes = edge_homes(rho);
  std::set<CellId> seen;
  for (EdgeId e : x.edges) seen.insert(homes.at(e));
  return seen.size() >= 2;
}

std::vector<AtomicFactor> atomic_decomposition(const Multigraph& g, const VertexPath& x,
                                               const Rendition& rho) {
  FW_CHECK(is_grounded(g, x, rho), "decomposition applies to grounded paths and cycles");
  const auto homes = edge_homes(rho);
  const std::size_t n = x.verts.size();
  std::vector<AtomicFactor> out;

  const auto emit = [&](const std::vector<std::size_t>& positions, std::size_t lo,
                        std::size_t hi) {
    AtomicFactor f;
    for (std::size_t j = lo; j <= hi; ++j) f.path.verts.push_back(x.verts[positions[j] % n]);
    for (std::size_t j = lo; j < hi; ++j) f.path.edges.push_back(x.edges[positions[j] % n]);
    f.home = homes.at(f.path.edges.front());
    for (EdgeId e : f.path.edges)
      FW_CHECK(homes.at(e) == f.home, "a factor keeps all its edges in one cell");
    out.push_back(std::move(f));
  };

  if (!x.closed) {
    std::vector<std::size_t> positions(n);
    for (std::size_t i = 0; i < n; ++i) positions[i] = i;
    std::size_t start = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (!rho.is_node(x.verts[i])) continue;
      emit(positions, start, i);
      start = i;
    }
    return out;
  }

  // cycles: walk once around, starting from the first listed node
  std::size_t first = 0;
  while (!rho.is_node(x.verts[first])) ++first;
  std::vector<std::size_t> positions(n + 1);
  for (std::size_t j = 0; j <= n; ++j) positions[j] = first + j;
  std::size_t start = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    if (j < n && !rho.is_node(x.verts[(first + j) % n])) continue;
    emit(positions, start, j);
    start = j;
  }
  FW_CHECK(out.size() >= 2, "a grounded cycle passes through at least two nodes");
  return out;
}

Track track(const Multigraph& g, const VertexPath& x, const Rendition& rho) {
  const auto factors = atomic_decomposition(g, x, rho);
  Track t;
  t.closed = x.closed;
  for (const auto& f : factors) t.nodes.push_back(f.path.verts.front());
  if (!x.closed) {
    if (factors.empty()) {  // a single-node path traces just that node
      t.nodes.push_back(x.verts.front());
      return t;
    }
    t.nodes.push_back(factors.back().path.verts.back());
  }
  for (const auto& f : factors) {
    const VertexId a = f.path.verts.front(), b = f.path.verts.back();
    const RCell& cell = rho.cells[f.home];
    std::optional<ArcId> pick;
    if (cell.degree() == 2) {
      FW_CHECK(rho.tau[f.home] == 0 || rho.tau[f.home] == 1,
               "degree-2 home carries an arc choice");
      pick = ArcId{f.home, rho.tau[f.home]};
    } else {
      FW_CHECK(cell.degree() == 3, "a factor home has two or three nodes");
      for (int j = 0; j < 3; ++j) {
        const VertexId u = cell.boundary[j], v = cell.boundary[(j + 1) % 3];
        if ((u == a && v == b) || (u == b && v == a)) {
          pick = ArcId{f.home, j};
          break;
        }
      }
    }
    FW_CHECK(pick.has_value(), "the home cell has an arc joining the factor ends");
    const auto ends = rho.arc_ends(*pick);
    FW_CHECK((ends.first == a && ends.second == b) || (ends.first == b && ends.second == a),
             "the chosen arc joins the factor ends");
    t.arcs.push_back(*pick);
  }
  return t;
}

DiskPartition disk_partition(const Track& t, const Rendition& rho) {
  FW_CHECK(t.closed, "disk partition applies to closed tracks");
  const std::set<ArcId> arcset(t.arcs.begin(), t.arcs.end());
  FW_CHECK(arcset.size() == t.arcs.size(), "a closed track uses each arc once");
  SkeletonParts sp = skeleton_parts(rho);
  check_track_attached(rho, sp, t.arcs);
  const VertexId root = attached_root(rho, sp);
  const FaceData fd = faces_of(rho);
  const auto out = outer_region(fd, t.arcs);
  DiskPartition dp;
  for (CellId c = 1; c < rho.cells.size(); ++c) {
    const auto& bd = rho.cells[c].boundary;
    const bool floats = bd.empty() || sp.find(bd.front()) != root;
    const bool outside = floats || out[fd.interior.at(c)] != 0;
    bool owns = false;
    for (const ArcId& a : t.arcs)
      if (a.cell == c) owns = true;
    if (!outside)
      dp.inside.push_back(c);
    else if (owns)
      dp.border.push_back(c);
    else
      dp.outside.push_back(c);
  }
  return dp;
}

bool is_clockwise(const Multigraph& g, const VertexPath& cycle, const Rendition& rho) {
  const Track t = track(g, cycle, rho);
  FW_CHECK(t.closed, "direction is defined for cycles");
  SkeletonParts sp = skeleton_parts(rho);
  check_track_attached(rho, sp, t.arcs);
  const FaceData fd = faces_of(rho);
  const auto out = outer_region(fd, t.arcs);
  std::optional<bool> cw;
  for (std::size_t i = 0; i < t.arcs.size(); ++i) {
    const auto ends = rho.arc_ends(t.arcs[i]);
    const int dir = ends.first == t.nodes[i] ? 0 : 1;
    // the walk with the face on its left runs opposite to our traversal, so
    // the face to our right is the one traced by the opposite side
    const std::size_t right = fd.face_of.at(ArcSide{t.arcs[i], 1 - dir});
    const bool enclosed_right = out[right] == 0;
    FW_CHECK(!cw.has_value() || *cw == enclosed_right,
             "every track arc agrees on the cycle direction");
    cw = enclosed_right;
  }
  return *cw;
}

bool is_proper(const Multigraph& g, const VertexPath& d, const Rendition& rho) {
  const Track t = track(g, d, rho);
  FW_CHECK(t.closed, "properness is defined for cycles");
  const DiskPartition dp = disk_partition(t, rho);
  const std::vector<VertexId> on = sorted_unique(t.nodes);
  for (CellId c : dp.border) {
    const RCell& cell = rho.cells[c];
    if (cell.degree() != 3) return false;
    int hits = 0;
    for (VertexId v : cell.boundary) hits += set_contains(on, v) ? 1 : 0;
    if (hits != 2) return false;
  }
  return true;
}

Reroute reroute_cycle(const Multigraph& g, const VertexPath& e0, const Rendition& rho,
                      RerouteMove move, CellId cell) {
  FW_CHECK(cell != Rendition::external && cell < rho.cells.size(),
           "reroute targets an internal cell");
  VertexPath e = e0;
  FW_CHECK(e.closed, "reroute applies to cycles");
  if (!is_clockwise(g, e, rho)) e = reverse_cycle(e);
  const DiskPartition before = disk_partition(track(g, e, rho), rho);
  const RCell& target = rho.cells[cell];
  const auto in_list = [](const std::vector<CellId>& v, CellId c) {
    return std::binary_search(v.begin(), v.end(), c);
  };

  if (move == RerouteMove::flip_arc) {
    FW_CHECK(target.degree() == 2, "arc flip applies to degree-2 cells");
    FW_CHECK(in_list(before.border, cell), "arc flip applies to border cells");
    Reroute r{e, rho};
    r.rho.tau[cell] ^= 1;
    const DiskPartition after = disk_partition(track(g, r.cycle, r.rho), r.rho);
    std::vector<CellId> want = before.inside;
    want.insert(std::lower_bound(want.begin(), want.end(), cell), cell);
    FW_CHECK(after.inside == want, "the flip pulls exactly the flipped cell inside");
    return r;
  }

  if (move == RerouteMove::bypass_node) {
    FW_CHECK(target.degree() == 3, "node bypass applies to degree-3 cells");
    FW_CHECK(in_list(before.border, cell), "node bypass applies to border cells");
    for (VertexId v : target.boundary)
      FW_CHECK(e.contains_vertex(v), "node bypass needs all three cell nodes on the cycle");
    std::vector<VertexId> trio;  // the cell's nodes in cycle order
    for (VertexId v : e.verts)
      if (set_contains(sorted_unique(target.boundary), v)) trio.push_back(v);
    FW_CHECK(trio.size() == 3, "the cell's nodes appear once each on the cycle");
    for (int take = 0; take < 3; ++take) {
      const VertexId m = trio[take], n = trio[(take + 1) % 3], p = trio[(take + 2) % 3];
      const auto route = flap_route(g, target, m, p, n);
      if (!route) continue;
      const VertexPath cand = splice_segment(e, *route);
      if (!cycle_shape_ok(g, cand)) continue;
      if (!is_grounded(g, cand, rho) || !is_clockwise(g, cand, rho)) continue;
      if (!node_order_agrees(rho, e, cand)) continue;
      const DiskPartition after = disk_partition(track(g, cand, rho), rho);
      if (!strictly_grows(before.inside, after.inside)) continue;
      if (!in_list(after.inside, cell)) continue;
      return {cand, rho};
    }
    FW_CHECK(false, "some labeling of the cell nodes admits a growing bypass");
  }

  FW_CHECK(move == RerouteMove::absorb_edge, "reroute move is one of the three surgeries");
  FW_CHECK(target.degree() == 2, "edge absorb applies to degree-2 cells");
  FW_CHECK(in_list(before.outside, cell), "edge absorb applies to outside non-border cells");
  FW_CHECK(target.flap_edges.size() == 1, "edge absorb applies to single-edge cells");
  const EdgeId chord = target.flap_edges[0];
  const Edge ed = g.edge(chord);
  FW_CHECK(sorted_unique({ed.u, ed.v}) == sorted_unique(target.boundary),
           "the cell's edge joins its two nodes");
  FW_CHECK(e.contains_vertex(ed.u) && e.contains_vertex(ed.v),
           "both ends of the absorbed edge lie on the cycle");
  for (const auto& [s, q] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
    for (int choice : {0, 1}) {
      VertexPath repl;
      repl.verts = {s, q};
      repl.edges = {chord};
      const VertexPath cand = splice_segment(e, repl);
      if (!cycle_shape_ok(g, cand)) continue;
      Rendition r2 = rho;
      r2.tau[cell] = choice;
      if (!is_grounded(g, cand, r2) || !is_clockwise(g, cand, r2)) continue;
      if (!node_order_agrees(r2, e, cand)) continue;
      const DiskPartition after = disk_partition(track(g, cand, r2), r2);
      if (!strictly_grows(before.inside, after.inside)) continue;
      if (!in_list(after.inside, cell)) continue;
      return {cand, std::move(r2)};
    }
  }
  FW_CHECK(false, "some orientation of the absorbed edge admits a growing reroute");
  return {};  // unreachable
}

}  // namespace flatwall
