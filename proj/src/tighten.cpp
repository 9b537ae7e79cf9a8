#include "flatwall/tighten.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "flatwall/check.hpp"

namespace flatwall {

namespace {

// ---- flap inspection ----

struct Dsu {
  std::map<VertexId, VertexId> p;
  VertexId find(VertexId x) {
    while (p.at(x) != x) {
      p[x] = p.at(p.at(x));
      x = p.at(x);
    }
    return x;
  }
  void unite(VertexId a, VertexId b) { p[find(a)] = find(b); }
};

// component representative of every flap vertex
std::map<VertexId, VertexId> flap_roots(const Multigraph& g, const RCell& cell) {
  Dsu d;
  for (VertexId v : cell.flap_verts) d.p[v] = v;
  for (EdgeId e : cell.flap_edges) d.unite(g.edge(e).u, g.edge(e).v);
  std::map<VertexId, VertexId> out;
  for (VertexId v : cell.flap_verts) out[v] = d.find(v);
  return out;
}

bool flap_isolated(const Multigraph& g, const RCell& cell, VertexId v) {
  for (EdgeId e : cell.flap_edges)
    if (g.edge(e).touches(v)) return false;
  return true;
}

bool on_boundary(const RCell& cell, VertexId v) {
  return std::find(cell.boundary.begin(), cell.boundary.end(), v) != cell.boundary.end();
}

// ---- guards, in driver priority order ----

// split a flap whose nodes sit in different pieces: applicable when at least
// two flap components each hold a boundary node and an edge; returns the
// component representative to split off (the one with the lowest node)
std::optional<VertexId> guard_split_flap(const Multigraph& g, const RCell& cell) {
  if (cell.degree() < 2) return std::nullopt;
  const auto roots = flap_roots(g, cell);
  std::map<VertexId, std::pair<bool, bool>> comp;  // root -> (has node, has edge)
  for (VertexId v : cell.boundary) comp[roots.at(v)].first = true;
  for (EdgeId e : cell.flap_edges) comp[roots.at(g.edge(e).u)].second = true;
  std::size_t eligible = 0;
  for (const auto& [root, f] : comp)
    if (f.first && f.second) ++eligible;
  if (eligible < 2) return std::nullopt;
  for (VertexId v : cell.flap_verts) {  // sorted: lowest qualifying node wins
    const VertexId r = roots.at(v);
    if (on_boundary(cell, v) && comp.at(r).first && comp.at(r).second) return r;
  }
  return std::nullopt;
}

// split a degree-3 cell at a node separating the other two inside the flap;
// returns the tuple index of the separating node
std::optional<int> guard_separator(const Multigraph& g, const RCell& cell) {
  if (cell.degree() != 3) return std::nullopt;
  const auto roots = flap_roots(g, cell);
  if (roots.at(cell.boundary[0]) != roots.at(cell.boundary[1]) ||
      roots.at(cell.boundary[0]) != roots.at(cell.boundary[2]))
    return std::nullopt;
  for (int i = 0; i < 3; ++i) {
    const VertexId n = cell.boundary[i];
    Dsu d;
    for (VertexId v : cell.flap_verts)
      if (v != n) d.p[v] = v;
    for (EdgeId e : cell.flap_edges) {
      const Edge ed = g.edge(e);
      if (ed.u != n && ed.v != n) d.unite(ed.u, ed.v);
    }
    if (d.find(cell.boundary[(i + 1) % 3]) != d.find(cell.boundary[(i + 2) % 3])) return i;
  }
  return std::nullopt;
}

// carve out an edge joining two nodes of the cell when the flap holds more;
// returns the edge to extract
std::optional<EdgeId> guard_extract_edge(const Multigraph& g, const RCell& cell) {
  if (cell.flap_edges.size() < 2) return std::nullopt;
  for (EdgeId e : cell.flap_edges) {  // sorted: lowest wins
    const Edge ed = g.edge(e);
    if (on_boundary(cell, ed.u) && on_boundary(cell, ed.v)) return e;
  }
  return std::nullopt;
}

// trim a node that touches no flap edge but is not isolated in the graph;
// returns its tuple index
std::optional<int> guard_trim_node(const Multigraph& g, const RCell& cell) {
  if (cell.degree() < 2) return std::nullopt;
  for (int i = 0; i < cell.degree(); ++i) {
    const VertexId m = cell.boundary[i];
    if (flap_isolated(g, cell, m) && g.degree(m) > 0) return i;
  }
  return std::nullopt;
}

// ---- rotation surgery ----

// the two rotation slots a cell owns at tuple position j: arriving arc end,
// then departing arc end (counterclockwise-adjacent by the face conventions)
std::pair<Slot, Slot> cell_pair(CellId c, int deg, int j) {
  if (deg == 1) return {Slot{{c, 0}, 1}, Slot{{c, 0}, 0}};
  return {Slot{{c, (j - 1 + deg) % deg}, 1}, Slot{{c, j}, 0}};
}

// replace the counterclockwise-adjacent pair (first, second) at v by repl
void splice_pair(PlaneStructure& pl, VertexId v, const std::pair<Slot, Slot>& old,
                 const std::vector<Slot>& repl) {
  auto& rot = pl.rotation.at(v);
  const auto itf = std::find(rot.begin(), rot.end(), old.first);
  FW_CHECK(itf != rot.end(), "surgery pair present in the rotation");
  const std::size_t qf = static_cast<std::size_t>(itf - rot.begin());
  const std::size_t qs = (qf + 1) % rot.size();
  FW_CHECK(rot[qs] == old.second, "cell slots are rotation-adjacent");
  if (qs > qf) {
    rot.erase(rot.begin() + qf, rot.begin() + qs + 1);
    rot.insert(rot.begin() + qf, repl.begin(), repl.end());
  } else {  // pair wraps; cyclically equivalent to appending repl
    rot.pop_back();
    rot.erase(rot.begin());
    rot.insert(rot.end(), repl.begin(), repl.end());
  }
  if (rot.empty()) pl.rotation.erase(v);
}

void insert_after(PlaneStructure& pl, VertexId v, const Slot& anchor,
                  const std::vector<Slot>& add) {
  auto& rot = pl.rotation.at(v);
  const auto it = std::find(rot.begin(), rot.end(), anchor);
  FW_CHECK(it != rot.end(), "anchor slot present in the rotation");
  rot.insert(it + 1, add.begin(), add.end());
}

void insert_before(PlaneStructure& pl, VertexId v, const Slot& anchor,
                   const std::vector<Slot>& add) {
  auto& rot = pl.rotation.at(v);
  const auto it = std::find(rot.begin(), rot.end(), anchor);
  FW_CHECK(it != rot.end(), "anchor slot present in the rotation");
  rot.insert(it, add.begin(), add.end());
}

std::vector<Slot> both(const std::pair<Slot, Slot>& p) { return {p.first, p.second}; }

int tau_for(const RCell& cell) { return cell.degree() == 2 ? 0 : -1; }

// ---- transformations ----

// replace cell c by two cells along the component split; the piece rooted at
// mroot keeps the cell id, the rest becomes a fresh cell
void apply_split_flap(const Multigraph& g, Rendition& rho, CellId c, VertexId mroot) {
  const RCell old = rho.cells[c];
  const auto roots = flap_roots(g, old);
  RCell cm, cp;
  for (VertexId v : old.boundary) (roots.at(v) == mroot ? cm : cp).boundary.push_back(v);
  for (VertexId v : old.flap_verts) (roots.at(v) == mroot ? cm : cp).flap_verts.push_back(v);
  for (EdgeId e : old.flap_edges)
    (roots.at(g.edge(e).u) == mroot ? cm : cp).flap_edges.push_back(e);
  FW_CHECK(!cm.boundary.empty() && !cp.boundary.empty(), "both split halves keep a node");
  const CellId idp = rho.cells.size();

  for (int i = 0; i < old.degree(); ++i) {
    const VertexId v = old.boundary[i];
    const bool in_m = roots.at(v) == mroot;
    const RCell& nc = in_m ? cm : cp;
    const CellId nid = in_m ? c : idp;
    const int j = static_cast<int>(
        std::find(nc.boundary.begin(), nc.boundary.end(), v) - nc.boundary.begin());
    splice_pair(rho.plane, v, cell_pair(c, old.degree(), i), both(cell_pair(nid, nc.degree(), j)));
  }
  rho.cells[c] = cm;
  rho.cells.push_back(cp);
  rho.tau[c] = tau_for(cm);
  rho.tau.push_back(tau_for(cp));
}

// replace a degree-3 cell by two degree-2 cells pinched at the separating
// node tuple[i]; the half on the arriving side keeps the cell id
void apply_separator(const Multigraph& g, Rendition& rho, CellId c, int i) {
  const RCell old = rho.cells[c];
  const VertexId n = old.boundary[i];
  const VertexId m = old.boundary[(i + 2) % 3];
  const VertexId p = old.boundary[(i + 1) % 3];

  Dsu d;
  for (VertexId v : old.flap_verts)
    if (v != n) d.p[v] = v;
  for (EdgeId e : old.flap_edges) {
    const Edge ed = g.edge(e);
    if (ed.u != n && ed.v != n) d.unite(ed.u, ed.v);
  }
  const VertexId proot = d.find(p);
  auto in_p = [&](VertexId v) { return v != n && d.find(v) == proot; };

  RCell cm, cp;
  cm.boundary = {m, n};
  cp.boundary = {n, p};
  for (VertexId v : old.flap_verts) {
    if (in_p(v)) cp.flap_verts.push_back(v);
    if (!in_p(v)) cm.flap_verts.push_back(v);  // n lands here ...
  }
  cp.flap_verts = set_union(cp.flap_verts, {n});  // ... and on the p side too
  for (EdgeId e : old.flap_edges) {
    const Edge ed = g.edge(e);
    (in_p(ed.u) || in_p(ed.v) ? cp : cm).flap_edges.push_back(e);
  }
  FW_CHECK(!cm.empty_flap() && !cp.empty_flap(), "separating node leaves edges on both sides");
  const CellId idp = rho.cells.size();

  splice_pair(rho.plane, m, cell_pair(c, 3, (i + 2) % 3), both(cell_pair(c, 2, 0)));
  splice_pair(rho.plane, p, cell_pair(c, 3, (i + 1) % 3), both(cell_pair(idp, 2, 1)));
  std::vector<Slot> at_n = both(cell_pair(c, 2, 1));
  const auto pn = both(cell_pair(idp, 2, 0));
  at_n.insert(at_n.end(), pn.begin(), pn.end());
  splice_pair(rho.plane, n, cell_pair(c, 3, i), at_n);

  rho.cells[c] = cm;
  rho.cells.push_back(cp);
  rho.tau[c] = 0;
  rho.tau.push_back(0);
}

// move a node-to-node edge of cell c into a fresh lens cell hugging the arc
// between its endpoints
void apply_extract_edge(const Multigraph& g, Rendition& rho, CellId c, EdgeId e) {
  RCell& host = rho.cells[c];
  const Edge ed = g.edge(e);
  const int k = host.degree();
  int i = -1;
  for (int q = 0; q < k && i < 0; ++q) {
    const VertexId a = host.boundary[q], b = host.boundary[(q + 1) % k];
    if ((a == ed.u && b == ed.v) || (a == ed.v && b == ed.u)) i = q;
  }
  FW_CHECK(i >= 0, "edge endpoints are consecutive nodes of the cell");
  const VertexId x = host.boundary[i], y = host.boundary[(i + 1) % k];
  const CellId nd = rho.cells.size();

  RCell lens;
  lens.boundary = {x, y};
  lens.flap_verts = sorted_unique({ed.u, ed.v});
  lens.flap_edges = {e};
  host.flap_edges = [&] {
    std::vector<EdgeId> rest;
    for (EdgeId f : host.flap_edges)
      if (f != e) rest.push_back(f);
    return rest;
  }();

  // nestle the lens into the free space left of the host arc x->y: the far
  // side becomes the lens's forward arc so its tuple stays clockwise
  insert_after(rho.plane, x, Slot{{c, i}, 0}, {Slot{{nd, 1}, 1}, Slot{{nd, 0}, 0}});
  insert_before(rho.plane, y, Slot{{c, i}, 1}, {Slot{{nd, 0}, 1}, Slot{{nd, 1}, 0}});

  rho.cells.push_back(lens);
  rho.tau.push_back(0);
}

// drop tuple position i from cell c, merging its two arcs
void apply_trim_node(const Multigraph& g, Rendition& rho, CellId c, int i) {
  (void)g;
  const RCell old = rho.cells[c];
  const int k = old.degree();
  const VertexId m = old.boundary[i];

  RCell neu = old;
  neu.boundary.erase(neu.boundary.begin() + i);
  neu.flap_verts = set_minus(neu.flap_verts, {m});

  splice_pair(rho.plane, m, cell_pair(c, k, i), {});
  for (int q = 0; q < k; ++q) {
    if (q == i) continue;
    const int j = q < i ? q : q - 1;
    splice_pair(rho.plane, old.boundary[q], cell_pair(c, k, q), both(cell_pair(c, k - 1, j)));
  }
  rho.cells[c] = neu;
  rho.tau[c] = tau_for(neu);
}

std::pair<std::size_t, int> measure(const Rendition& rho) {
  std::size_t nonempty = 0;
  for (CellId c = 1; c < rho.cells.size(); ++c)
    if (!rho.cells[c].empty_flap()) ++nonempty;
  return {nonempty, degree(rho)};
}

}  // namespace

Rendition tighten(const Multigraph& g, const std::vector<VertexId>& boundary, Rendition rho) {
  FW_CHECK(validate(g, boundary, rho).empty(), "tighten needs a valid rendition");
  auto [nonempty, deg] = measure(rho);
  for (;;) {
    bool moved = false;
    for (CellId c = 1; !moved && c < rho.cells.size(); ++c)
      if (auto r = guard_split_flap(g, rho.cells[c])) {
        apply_split_flap(g, rho, c, *r);
        moved = true;
      }
    for (CellId c = 1; !moved && c < rho.cells.size(); ++c)
      if (auto r = guard_separator(g, rho.cells[c])) {
        apply_separator(g, rho, c, *r);
        moved = true;
      }
    for (CellId c = 1; !moved && c < rho.cells.size(); ++c)
      if (auto r = guard_extract_edge(g, rho.cells[c])) {
        apply_extract_edge(g, rho, c, *r);
        moved = true;
      }
    for (CellId c = 1; !moved && c < rho.cells.size(); ++c)
      if (auto r = guard_trim_node(g, rho.cells[c])) {
        apply_trim_node(g, rho, c, *r);
        moved = true;
      }
    if (!moved) break;

    FW_CHECK(validate(g, boundary, rho).empty(), "transformation preserves validity");
    const auto [ne2, deg2] = measure(rho);
    // lexicographic: non-empty count up, else same count and degree down --
    // in particular the non-empty count never decreases across the run
    FW_CHECK(ne2 > nonempty || (ne2 == nonempty && deg2 < deg),
             "every transformation improves the measure");
    nonempty = ne2;
    deg = deg2;
  }
  return rho;
}

std::vector<std::string> check_tight_properties(const Multigraph& g, const Rendition& rho) {
  std::vector<std::string> bad;
  for (CellId c = 1; c < rho.cells.size(); ++c) {
    const RCell& cell = rho.cells[c];
    if (auto e = guard_extract_edge(g, cell))
      bad.push_back("cell " + std::to_string(c) + " keeps an edge between its own nodes (" +
                    std::to_string(g.edge(*e).u) + "," + std::to_string(g.edge(*e).v) +
                    ") alongside other edges");
    if (!cell.empty_flap())
      if (auto i = guard_trim_node(g, cell))
        bad.push_back("node " + std::to_string(cell.boundary[*i]) + " of cell " +
                      std::to_string(c) + " touches no edge of a flap that has edges");
    if (guard_split_flap(g, cell))
      bad.push_back("the nodes of cell " + std::to_string(c) +
                    " lie in different pieces of its flap");
    if (auto i = guard_separator(g, cell))
      bad.push_back("node " + std::to_string(cell.boundary[*i]) + " separates the other two nodes of cell " +
                    std::to_string(c) + " inside its flap");
  }
  return bad;
}

}  // namespace flatwall
