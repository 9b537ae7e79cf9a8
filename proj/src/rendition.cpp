#include "flatwall/rendition.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "flatwall/check.hpp"

namespace flatwall {

namespace {

struct ArcInfo {
  ArcId id;
  VertexId a = 0, b = 0;
};

// every arc of every cell; a degree-1 cell has one loop arc
std::vector<ArcInfo> all_arcs(const Rendition& rho) {
  std::vector<ArcInfo> out;
  for (CellId c = 0; c < rho.cells.size(); ++c) {
    const auto& bd = rho.cells[c].boundary;
    const int k = static_cast<int>(bd.size());
    if (k == 1) {
      out.push_back({{c, 0}, bd[0], bd[0]});
    } else {
      for (int i = 0; i < k; ++i) out.push_back({{c, i}, bd[i], bd[(i + 1) % k]});
    }
  }
  return out;
}

VertexId side_head(const Rendition& rho, ArcSide s) {
  auto [a, b] = rho.arc_ends(s.arc);
  return s.dir == 0 ? b : a;
}

}  // namespace

std::pair<VertexId, VertexId> Rendition::arc_ends(ArcId a) const {
  const auto& bd = cells[a.cell].boundary;
  const int k = static_cast<int>(bd.size());
  if (k == 1) return {bd[0], bd[0]};
  return {bd[a.idx], bd[(a.idx + 1) % k]};
}

int degree(const Rendition& rho) {
  int total = 0;
  for (CellId c = 1; c < rho.cells.size(); ++c) total += rho.cells[c].degree();
  return total;
}

std::map<EdgeId, CellId> edge_homes(const Rendition& rho) {
  std::map<EdgeId, CellId> out;
  for (CellId c = 0; c < rho.cells.size(); ++c)
    for (EdgeId e : rho.cells[c].flap_edges) out[e] = c;
  return out;
}

// Faces are orbits of the successor map over directed arc sides: arriving at
// a node, the walk departs along the counterclockwise predecessor of the
// arrival slot, keeping its face on the left.
std::vector<std::vector<ArcSide>> face_walks(const Rendition& rho) {
  std::map<Slot, std::pair<VertexId, std::size_t>> where;
  for (const auto& [v, slots] : rho.plane.rotation)
    for (std::size_t i = 0; i < slots.size(); ++i) where[slots[i]] = {v, i};

  auto next = [&](ArcSide s) -> ArcSide {
    const Slot arrive{s.arc, s.dir == 0 ? 1 : 0};
    auto it = where.find(arrive);
    FW_CHECK(it != where.end(), "arc end present in some rotation");
    const auto& rot = rho.plane.rotation.at(it->second.first);
    const Slot dep = rot[(it->second.second + rot.size() - 1) % rot.size()];
    return {dep.arc, dep.end == 0 ? 0 : 1};
  };

  std::vector<ArcSide> sides;
  for (const ArcInfo& a : all_arcs(rho)) {
    sides.push_back({a.id, 0});
    sides.push_back({a.id, 1});
  }
  std::sort(sides.begin(), sides.end());

  std::set<ArcSide> seen;
  std::vector<std::vector<ArcSide>> walks;
  for (ArcSide start : sides) {
    if (seen.count(start)) continue;
    std::vector<ArcSide> walk;
    ArcSide cur = start;
    do {
      FW_CHECK(!seen.count(cur), "face orbits are disjoint");
      seen.insert(cur);
      walk.push_back(cur);
      cur = next(cur);
    } while (!(cur == start));
    walks.push_back(std::move(walk));
  }
  return walks;
}

std::map<CellId, std::size_t> interior_walks(
    const Rendition& rho, const std::vector<std::vector<ArcSide>>& walks) {
  std::map<ArcSide, std::size_t> walk_of;
  for (std::size_t i = 0; i < walks.size(); ++i)
    for (ArcSide s : walks[i]) walk_of[s] = i;

  std::map<CellId, std::size_t> out;
  for (CellId c = 0; c < rho.cells.size(); ++c) {
    if (rho.cells[c].boundary.empty()) continue;
    // internal cell tuples are clockwise, so the interior is traced along
    // the reversed sides; the external tuple runs with its interior walk
    const ArcSide probe{{c, 0}, c == Rendition::external ? 0 : 1};
    auto it = walk_of.find(probe);
    if (it != walk_of.end()) out[c] = it->second;
  }
  return out;
}

std::vector<std::string> validate(const Multigraph& g,
                                  const std::vector<VertexId>& boundary,
                                  const Rendition& rho) {
  std::vector<std::string> bad;
  auto complain = [&](const std::string& s) { bad.push_back(s); };

  // -- nodes --
  if (!std::is_sorted(rho.nodes.begin(), rho.nodes.end()) ||
      std::adjacent_find(rho.nodes.begin(), rho.nodes.end()) != rho.nodes.end())
    complain("node list not sorted and distinct");
  for (VertexId n : rho.nodes)
    if (!g.has_vertex(n)) complain("node " + std::to_string(n) + " not in the graph");

  if (rho.cells.empty()) {
    complain("no external cell");
    return bad;
  }

  // -- external cell: boundary tuple is a rotation of the society order --
  {
    const auto& ext = rho.cells[Rendition::external];
    bool rot_ok = ext.boundary.size() == boundary.size();
    if (rot_ok && !boundary.empty()) {
      rot_ok = false;
      for (std::size_t s = 0; s < boundary.size() && !rot_ok; ++s) {
        bool all = true;
        for (std::size_t i = 0; i < boundary.size() && all; ++i)
          all = ext.boundary[(s + i) % boundary.size()] == boundary[i];
        rot_ok = all;
      }
    }
    if (!rot_ok) complain("external cell boundary is not the society boundary");
    if (!ext.flap_edges.empty()) complain("external cell flap has edges");
    if (ext.flap_verts != sorted_unique(std::vector<VertexId>(boundary.begin(), boundary.end())))
      complain("external cell flap is not the boundary vertex set");
  }

  // -- per-cell axioms --
  std::map<VertexId, std::vector<CellId>> flap_cells;
  std::map<EdgeId, int> edge_seen;
  for (CellId c = 0; c < rho.cells.size(); ++c) {
    const auto& cell = rho.cells[c];
    const std::string tag = "cell " + std::to_string(c);
    if (c != Rendition::external && cell.degree() > 3)
      complain(tag + " has more than three boundary nodes");
    if (c != Rendition::external && cell.degree() == 0)
      complain(tag + " has no boundary nodes");
    std::vector<VertexId> bset(cell.boundary.begin(), cell.boundary.end());
    std::sort(bset.begin(), bset.end());
    if (std::adjacent_find(bset.begin(), bset.end()) != bset.end())
      complain(tag + " repeats a boundary node");
    for (VertexId n : cell.boundary)
      if (!rho.is_node(n)) complain(tag + " boundary vertex " + std::to_string(n) + " is not a node");
    if (!std::is_sorted(cell.flap_verts.begin(), cell.flap_verts.end()))
      complain(tag + " flap vertices not sorted");
    for (VertexId v : cell.flap_verts) {
      if (!g.has_vertex(v)) complain(tag + " flap vertex " + std::to_string(v) + " not in the graph");
      flap_cells[v].push_back(c);
    }
    if (set_intersect(cell.flap_verts, rho.nodes) != bset)
      complain(tag + " flap meets the nodes in something other than its boundary");
    for (EdgeId e : cell.flap_edges) {
      if (e >= g.edge_count()) {
        complain(tag + " flap edge " + std::to_string(e) + " out of range");
        continue;
      }
      ++edge_seen[e];
      if (!set_contains(cell.flap_verts, g.edge(e).u) || !set_contains(cell.flap_verts, g.edge(e).v))
        complain(tag + " flap edge " + std::to_string(e) + " leaves the flap vertex set");
    }
  }

  // -- cover: every vertex in a flap or a node, every edge in exactly one flap --
  for (VertexId v : g.vertices())
    if (!flap_cells.count(v) && !rho.is_node(v))
      complain("vertex " + std::to_string(v) + " not covered by any flap");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const int n = edge_seen.count(e) ? edge_seen[e] : 0;
    if (n != 1)
      complain("edge " + std::to_string(e) + " lies in " + std::to_string(n) + " flaps");
  }

  // -- distinct flaps meet only in shared boundary nodes --
  for (const auto& [v, cs] : flap_cells) {
    if (cs.size() < 2) continue;
    for (CellId c : cs) {
      const auto& bd = rho.cells[c].boundary;
      if (std::find(bd.begin(), bd.end(), v) == bd.end() || !rho.is_node(v)) {
        complain("vertex " + std::to_string(v) + " shared by flaps but not on the boundary of cell " +
                 std::to_string(c));
        break;
      }
    }
  }

  // -- tie-breakers: exactly the internal degree-2 cells carry a 0/1 choice --
  if (rho.tau.size() != rho.cells.size()) {
    complain("tie-breaker list length mismatch");
  } else {
    for (CellId c = 0; c < rho.cells.size(); ++c) {
      const bool want = c != Rendition::external && rho.cells[c].degree() == 2;
      const bool have = rho.tau[c] == 0 || rho.tau[c] == 1;
      if (want && !have) complain("cell " + std::to_string(c) + " missing its tie-breaker");
      if (!want && rho.tau[c] != -1) complain("cell " + std::to_string(c) + " carries a spurious tie-breaker");
    }
  }

  // -- plane structure: rotations hold each arc end once, at the right node --
  const auto arcs = all_arcs(rho);
  std::map<VertexId, std::vector<Slot>> want_slots;
  for (const ArcInfo& a : arcs) {
    want_slots[a.a].push_back({a.id, 0});
    want_slots[a.b].push_back({a.id, 1});
  }
  bool slots_ok = true;
  for (auto& [v, slots] : want_slots) {
    std::sort(slots.begin(), slots.end());
    auto it = rho.plane.rotation.find(v);
    std::vector<Slot> have = it == rho.plane.rotation.end() ? std::vector<Slot>{} : it->second;
    std::sort(have.begin(), have.end());
    if (have != slots) {
      complain("rotation at node " + std::to_string(v) + " does not list its arc ends");
      slots_ok = false;
    }
  }
  for (const auto& [v, slots] : rho.plane.rotation)
    if (!slots.empty() && !want_slots.count(v)) {
      complain("rotation at " + std::to_string(v) + " which has no arcs");
      slots_ok = false;
    }
  if (!slots_ok) return bad;  // face tracing needs consistent slots

  // -- faces: walks trace each cell interior; per-component Euler formula --
  const auto walks = face_walks(rho);
  const auto interiors = interior_walks(rho, walks);
  std::map<ArcSide, std::size_t> walk_of;
  for (std::size_t i = 0; i < walks.size(); ++i)
    for (ArcSide s : walks[i]) walk_of[s] = i;

  for (CellId c = 0; c < rho.cells.size(); ++c) {
    const auto& bd = rho.cells[c].boundary;
    if (bd.empty()) continue;
    const int dir = c == Rendition::external ? 0 : 1;
    auto it = interiors.find(c);
    bool ok = it != interiors.end();
    if (ok) {
      const auto& walk = walks[it->second];
      const std::size_t narcs = bd.size() == 1 ? 1 : bd.size();
      ok = walk.size() == narcs;
      for (ArcSide s : walk)
        ok = ok && s.arc.cell == c && s.dir == dir;
    }
    if (!ok) complain("cell " + std::to_string(c) + " interior is not a face of the skeleton");
  }

  // union-find over nodes joined by arcs
  std::map<VertexId, VertexId> parent;
  for (const auto& [v, slots] : rho.plane.rotation)
    if (!slots.empty()) parent[v] = v;
  std::function<VertexId(VertexId)> find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const ArcInfo& a : arcs) parent[find(a.a)] = find(a.b);

  std::map<VertexId, std::array<long, 3>> euler;  // component root -> V, E, F
  for (const auto& [v, root] : parent) {
    (void)root;
    ++euler[find(v)][0];
  }
  for (const ArcInfo& a : arcs) ++euler[find(a.a)][1];
  for (const auto& walk : walks) ++euler[find(side_head(rho, walk.front()))][2];
  for (const auto& [root, vef] : euler)
    if (vef[0] - vef[1] + vef[2] != 2)
      complain("skeleton component at node " + std::to_string(root) +
               " violates the Euler formula (not a planar rotation)");

  return bad;
}

// ---------------------------------------------------------------------------
// trivial rendition construction

namespace {

// directed-edge face walks of a simple-graph rotation system, same
// predecessor rule as the arc tracer
using DEdge = std::pair<VertexId, VertexId>;

std::vector<std::vector<DEdge>> embedding_walks(const Embedding& emb) {
  auto pos_of = [&](VertexId v, VertexId w) {
    const auto& rot = emb.rotation.at(v);
    auto it = std::find(rot.begin(), rot.end(), w);
    FW_CHECK(it != rot.end(), "embedding lists every neighbor");
    return static_cast<std::size_t>(it - rot.begin());
  };
  auto next = [&](DEdge d) -> DEdge {
    const auto& rot = emb.rotation.at(d.second);
    const std::size_t p = pos_of(d.second, d.first);
    return {d.second, rot[(p + rot.size() - 1) % rot.size()]};
  };

  std::vector<DEdge> all;
  for (const auto& [v, rot] : emb.rotation)
    for (VertexId w : rot) all.push_back({v, w});
  std::sort(all.begin(), all.end());

  std::set<DEdge> seen;
  std::vector<std::vector<DEdge>> walks;
  for (DEdge start : all) {
    if (seen.count(start)) continue;
    std::vector<DEdge> walk;
    DEdge cur = start;
    do {
      seen.insert(cur);
      walk.push_back(cur);
      cur = next(cur);
    } while (!(cur == start));
    walks.push_back(std::move(walk));
  }
  return walks;
}

// positions of the targets on the walk's vertex sequence, respecting the
// cyclic order; the walk vertex at i is walk[i].first.  Greedy earliest
// match inside one revolution, trying every anchor for the first target.
std::optional<std::vector<std::size_t>> match_cyclic(const std::vector<DEdge>& walk,
                                                     const std::vector<VertexId>& targets) {
  const std::size_t n = walk.size();
  for (std::size_t first = 0; first < n; ++first) {
    if (walk[first].first != targets[0]) continue;
    std::vector<std::size_t> pos{first};
    std::size_t used = 0;
    bool ok = true;
    for (std::size_t t = 1; t < targets.size() && ok; ++t) {
      ok = false;
      for (std::size_t step = 1; used + step < n; ++step) {
        const std::size_t i = (pos.back() + step) % n;
        if (walk[i].first == targets[t]) {
          pos.push_back(i);
          used += step;
          ok = true;
          break;
        }
      }
    }
    if (ok) return pos;
  }
  return std::nullopt;
}

}  // namespace

Rendition trivial_rendition(const Multigraph& g,
                            const std::vector<VertexId>& boundary,
                            const Embedding& emb) {
  Rendition rho;
  rho.nodes = g.vertices();

  RCell ext;
  ext.boundary = boundary;
  ext.flap_verts = sorted_unique({boundary.begin(), boundary.end()});
  rho.cells.push_back(ext);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    RCell c;
    c.boundary = {g.edge(e).u, g.edge(e).v};
    c.flap_verts = sorted_unique({g.edge(e).u, g.edge(e).v});
    c.flap_edges = {e};
    rho.cells.push_back(c);
  }
  rho.tau.assign(rho.cells.size(), -1);
  for (CellId c = 1; c < rho.cells.size(); ++c) rho.tau[c] = 0;

  // cell of edge e is 1 + e; parallel edges of a pair, ascending by id, are
  // stacked side by side.  Walking the lower endpoint's rotation the stack
  // appears in descending order, walking the higher endpoint's in ascending.
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> bundle;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge ed = g.edge(e);
    bundle[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}].push_back(e);
  }

  // the slot of arc j of edge e's cell at endpoint x
  auto slot_at = [&](EdgeId e, int j, VertexId x) -> Slot {
    const int end = ((j == 0) == (x == g.edge(e).u)) ? 0 : 1;
    return {{1 + e, j}, end};
  };
  // arc 0 must run clockwise around its cell: when the edge is stored
  // low-to-high it is the upper arc of the stack picture, otherwise the lower
  auto block_at = [&](VertexId x, VertexId w) {
    const VertexId lo = std::min(x, w), hi = std::max(x, w);
    std::vector<EdgeId> es = bundle.at({lo, hi});
    if (x == lo) std::reverse(es.begin(), es.end());
    std::vector<Slot> out;
    for (EdgeId e : es) {
      const int top = g.edge(e).u == lo ? 0 : 1;
      if (x == lo) {
        out.push_back(slot_at(e, 1 - top, x));
        out.push_back(slot_at(e, top, x));
      } else {
        out.push_back(slot_at(e, top, x));
        out.push_back(slot_at(e, 1 - top, x));
      }
    }
    return out;
  };

  // group boundary vertices with edges by component; each group must sit in
  // order on a single face walk of its component
  const auto comps = connected_components(g);
  std::map<VertexId, std::size_t> comp_of;
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (VertexId v : comps[i]) comp_of[v] = i;

  const auto walks = embedding_walks(emb);
  std::map<VertexId, DEdge> arrive_by;  // boundary vertex -> walk edge into it
  std::map<std::size_t, std::vector<VertexId>> group;
  for (VertexId b : boundary)
    if (g.degree(b) > 0) group[comp_of.at(b)].push_back(b);
  for (const auto& [ci, targets] : group) {
    bool found = false;
    for (const auto& walk : walks) {
      if (comp_of.at(walk.front().first) != ci) continue;
      if (auto pos = match_cyclic(walk, targets)) {
        for (std::size_t t = 0; t < targets.size(); ++t) {
          const std::size_t i = pos->at(t);
          arrive_by[targets[t]] = walk[(i + walk.size() - 1) % walk.size()];
        }
        found = true;
        break;
      }
    }
    if (!found)
      throw std::invalid_argument("boundary does not lie in order on a face of the embedding");
  }

  const std::size_t k = boundary.size();
  auto star_prev = [&](std::size_t i) -> Slot {
    return {{Rendition::external, static_cast<int>((i + k - 1) % k)}, 1};
  };
  auto star_next = [&](std::size_t i) -> Slot {
    return {{Rendition::external, static_cast<int>(i)}, 0};
  };
  std::map<VertexId, std::size_t> rim_pos;
  for (std::size_t i = 0; i < k; ++i) rim_pos[boundary[i]] = i;

  for (VertexId v : g.vertices()) {
    std::vector<Slot> rot;
    std::vector<VertexId> nbrs;
    if (auto it = emb.rotation.find(v); it != emb.rotation.end()) nbrs = it->second;
    const auto rim = rim_pos.find(v);
    if (rim != rim_pos.end() && k >= 1) rot.push_back(star_prev(rim->second));
    if (!nbrs.empty()) {
      std::size_t cut = 0;
      if (rim != rim_pos.end()) {
        auto arr = arrive_by.find(v);
        FW_CHECK(arr != arrive_by.end(), "boundary vertex with edges was matched to a walk");
        auto it = std::find(nbrs.begin(), nbrs.end(), arr->second.first);
        FW_CHECK(it != nbrs.end(), "walk arrival is an embedded neighbor");
        cut = static_cast<std::size_t>(it - nbrs.begin());
      }
      for (std::size_t s = 0; s < nbrs.size(); ++s) {
        for (Slot sl : block_at(v, nbrs[(cut + s) % nbrs.size()])) rot.push_back(sl);
      }
    }
    if (rim != rim_pos.end() && k >= 1) rot.push_back(star_next(rim->second));
    if (!rot.empty()) rho.plane.rotation[v] = std::move(rot);
  }
  return rho;
}

// ---------------------------------------------------------------------------
// serialization

nlohmann::ordered_json rendition_to_json(const Rendition& rho) {
  nlohmann::ordered_json j;
  j["nodes"] = rho.nodes;
  auto cells = nlohmann::ordered_json::array();
  for (CellId c = 0; c < rho.cells.size(); ++c) {
    nlohmann::ordered_json jc;
    jc["boundary"] = rho.cells[c].boundary;
    jc["flapVertices"] = rho.cells[c].flap_verts;
    jc["flapEdges"] = rho.cells[c].flap_edges;
    jc["tau"] = rho.tau[c];
    cells.push_back(jc);
  }
  j["cells"] = cells;
  auto rot = nlohmann::ordered_json::array();
  for (const auto& [v, slots] : rho.plane.rotation) {
    nlohmann::ordered_json jr;
    jr["node"] = v;
    auto js = nlohmann::ordered_json::array();
    for (const Slot& s : slots) js.push_back({s.arc.cell, s.arc.idx, s.end});
    jr["slots"] = js;
    rot.push_back(jr);
  }
  j["rotation"] = rot;
  return j;
}

Rendition rendition_from_json(const nlohmann::json& j) {
  Rendition rho;
  rho.nodes = j.at("nodes").get<std::vector<VertexId>>();
  for (const auto& jc : j.at("cells")) {
    RCell c;
    c.boundary = jc.at("boundary").get<std::vector<VertexId>>();
    c.flap_verts = jc.at("flapVertices").get<std::vector<VertexId>>();
    c.flap_edges = jc.at("flapEdges").get<std::vector<EdgeId>>();
    rho.cells.push_back(c);
    rho.tau.push_back(jc.at("tau").get<int>());
  }
  for (const auto& jr : j.at("rotation")) {
    std::vector<Slot> slots;
    for (const auto& js : jr.at("slots"))
      slots.push_back({{js.at(0).get<CellId>(), js.at(1).get<int>()}, js.at(2).get<int>()});
    rho.plane.rotation[jr.at("node").get<VertexId>()] = std::move(slots);
  }
  return rho;
}

std::string rendition_to_dot(const Rendition& rho, const Multigraph& g) {
  std::ostringstream os;
  os << "graph rendition {\n";
  for (VertexId n : rho.nodes) os << "  " << n << " [shape=doublecircle];\n";
  for (CellId c = 1; c < rho.cells.size(); ++c) {
    os << "  subgraph cluster_" << c << " {\n    label=\"cell " << c << "\";\n";
    for (VertexId v : rho.cells[c].flap_verts)
      if (!rho.is_node(v)) os << "    " << v << ";\n";
    for (EdgeId e : rho.cells[c].flap_edges)
      os << "    " << g.edge(e).u << " -- " << g.edge(e).v << ";\n";
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace flatwall
