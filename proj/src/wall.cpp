#include "flatwall/wall.hpp"

#include <algorithm>
#include "flatwall/check.hpp"
#include <set>
#include <sstream>
#include <stdexcept>

namespace flatwall {

ElemEdge elem_edge(Coord a, Coord b) {
  return a < b ? ElemEdge{a, b} : ElemEdge{b, a};
}

std::string to_string(BrickKind k) {
  switch (k) {
    case BrickKind::Interior: return "interior";
    case BrickKind::Top: return "top";
    case BrickKind::Bottom: return "bottom";
    case BrickKind::BulgingLeftSide: return "left-side-bulging";
    case BrickKind::BulgingRightSide: return "right-side-bulging";
    case BrickKind::RecessedSide: return "recessed-side";
    case BrickKind::BulgingCornerBL: return "bulging-corner-bl";
    case BrickKind::BulgingCornerTL: return "bulging-corner-tl";
    case BrickKind::BulgingCornerTR: return "bulging-corner-tr";
    case BrickKind::BulgingCornerBR: return "bulging-corner-br";
    case BrickKind::RecessedCornerBL: return "recessed-corner-bl";
    case BrickKind::RecessedCornerTL: return "recessed-corner-tl";
    case BrickKind::RecessedCornerTR: return "recessed-corner-tr";
    case BrickKind::RecessedCornerBR: return "recessed-corner-br";
  }
  return "?";
}

bool kind_has_interval(BrickKind k) {
  return k != BrickKind::Interior && k != BrickKind::RecessedSide;
}

bool kind_is_corner(BrickKind k) {
  switch (k) {
    case BrickKind::BulgingCornerBL:
    case BrickKind::BulgingCornerTL:
    case BrickKind::BulgingCornerTR:
    case BrickKind::BulgingCornerBR:
    case BrickKind::RecessedCornerBL:
    case BrickKind::RecessedCornerTL:
    case BrickKind::RecessedCornerTR:
    case BrickKind::RecessedCornerBR:
      return true;
    default:
      return false;
  }
}

std::optional<std::pair<int, int>> Wall::line_span(int y) const {
  int k = y - y0;
  if (k < 0 || k > rows) return std::nullopt;
  int lo = INT32_MAX, hi = INT32_MIN;
  for (int row : {k - 1, k}) {
    if (row < 0 || row >= rows) continue;
    lo = std::min(lo, offset(row));
    hi = std::max(hi, offset(row));
  }
  return std::pair{x0 + lo, x0 + hi + 2 * cols};
}

bool Wall::in_frame(Coord c) const {
  auto span = line_span(c.y);
  return span && c.x >= span->first && c.x <= span->second;
}

bool Wall::frame_adjacent(Coord a, Coord b) const {
  if (!in_frame(a) || !in_frame(b)) return false;
  if (a.y == b.y && std::abs(a.x - b.x) == 1) return true;
  if (a.x == b.x && std::abs(a.y - b.y) == 1) {
    int row = std::min(a.y, b.y) - y0;
    if (row < 0 || row >= rows) return false;
    int rel = a.x - x0 - offset(row);
    return rel >= 0 && rel <= 2 * cols && rel % 2 == 0;
  }
  return false;
}

std::vector<Coord> Wall::frame_vertices() const {
  std::vector<Coord> out;
  for (int y = y0; y <= y0 + rows; ++y) {
    auto span = line_span(y);
    for (int x = span->first; x <= span->second; ++x) out.push_back({x, y});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElemEdge> Wall::frame_edges() const {
  std::vector<ElemEdge> out;
  for (Coord c : frame_vertices()) {
    for (Coord d : {Coord{c.x + 1, c.y}, Coord{c.x, c.y + 1}})
      if (frame_adjacent(c, d)) out.push_back({c, d});
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Wall::frame_degree(Coord c) const {
  int d = 0;
  for (Coord n : {Coord{c.x + 1, c.y}, Coord{c.x - 1, c.y}, Coord{c.x, c.y + 1},
                  Coord{c.x, c.y - 1}})
    d += frame_adjacent(c, n);
  return d;
}

std::array<Coord, 6> Wall::brick_cycle(int row, int col) const {
  int bx = x0 + offset(row) + 2 * col, by = y0 + row;
  return {Coord{bx, by},     Coord{bx + 1, by},     Coord{bx + 2, by},
          Coord{bx + 2, by + 1}, Coord{bx + 1, by + 1}, Coord{bx, by + 1}};
}

VertexId Wall::vertex(Coord c) const {
  auto it = at.find(c);
  if (it == at.end()) {
    std::ostringstream os;
    os << "wall: no vertex at (" << c.x << "," << c.y << ")";
    throw std::invalid_argument(os.str());
  }
  return it->second;
}

std::vector<VertexId> Wall::stretch_path(Coord a, Coord b) const {
  auto it = stretch.find(elem_edge(a, b));
  if (it == stretch.end()) throw std::invalid_argument("wall: not a lattice edge");
  std::vector<VertexId> p = it->second;
  if (a < b) return p;
  std::reverse(p.begin(), p.end());
  return p;
}

Wall make_wall(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("wall: needs at least one brick");
  Wall w;
  w.rows = rows;
  w.cols = cols;
  auto id = [](Coord c) { return static_cast<VertexId>(c.y * 256 + c.x); };
  for (Coord c : w.frame_vertices()) {
    w.at[c] = id(c);
    w.lattice_of[id(c)] = c;
    w.g.add_vertex(id(c));
  }
  for (const ElemEdge& e : w.frame_edges()) {
    w.g.add_edge(w.at[e.first], w.at[e.second]);
    w.stretch[e] = {w.at[e.first], w.at[e.second]};
  }
  return w;
}

Wall elementary_wall(int r) { return make_wall(r, r); }

Wall subdivide(const Wall& w, const std::map<ElemEdge, int>& plan) {
  auto edges = w.frame_edges();
  for (const auto& [e, n] : plan) {
    if (!std::binary_search(edges.begin(), edges.end(), e))
      throw std::invalid_argument("subdivide: plan key is not a lattice edge");
    if (n < 0) throw std::invalid_argument("subdivide: negative length");
  }
  Wall out;
  out.rows = w.rows;
  out.cols = w.cols;
  out.x0 = w.x0;
  out.y0 = w.y0;
  out.parity = w.parity;
  out.at = w.at;
  out.lattice_of = w.lattice_of;
  VertexId next = 0;
  for (auto& [c, v] : w.at) next = std::max(next, v + 1);
  for (VertexId v : w.g.vertices()) next = std::max(next, v + 1);
  for (auto& [c, v] : out.at) out.g.add_vertex(v);
  for (const ElemEdge& e : edges) {
    int inner = static_cast<int>(w.stretch.at(e).size()) - 2;
    auto it = plan.find(e);
    if (it != plan.end()) inner += it->second;
    std::vector<VertexId> path{w.at.at(e.first)};
    for (int i = 0; i < inner; ++i) path.push_back(next++);
    path.push_back(w.at.at(e.second));
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      out.g.add_edge(path[i], path[i + 1]);
    out.stretch[e] = std::move(path);
  }
  return out;
}

bool wall_ok(const Wall& w) {
  auto fv = w.frame_vertices();
  if (w.at.size() != fv.size()) return false;
  for (Coord c : fv)
    if (!w.at.count(c)) return false;
  auto fe = w.frame_edges();
  if (w.stretch.size() != fe.size()) return false;
  std::set<VertexId> lattice_ids, internal_ids;
  for (auto& [c, v] : w.at) {
    if (w.lattice_of.count(v) == 0 || !(w.lattice_of.at(v) == c)) return false;
    lattice_ids.insert(v);
  }
  if (lattice_ids.size() != w.at.size()) return false;
  std::vector<std::pair<VertexId, VertexId>> expect_edges;
  for (const ElemEdge& e : fe) {
    auto it = w.stretch.find(e);
    if (it == w.stretch.end()) return false;
    const auto& p = it->second;
    if (p.size() < 2) return false;
    if (p.front() != w.at.at(e.first) || p.back() != w.at.at(e.second)) return false;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (lattice_ids.count(p[i])) return false;
      if (!internal_ids.insert(p[i]).second) return false;  // reused elsewhere
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      expect_edges.push_back(std::minmax(p[i], p[i + 1]));
  }
  std::vector<std::pair<VertexId, VertexId>> got_edges;
  for (const Edge& e : w.g.edges()) got_edges.push_back(std::minmax(e.u, e.v));
  std::sort(expect_edges.begin(), expect_edges.end());
  std::sort(got_edges.begin(), got_edges.end());
  if (expect_edges != got_edges) return false;
  std::vector<VertexId> expect_verts(lattice_ids.begin(), lattice_ids.end());
  expect_verts.insert(expect_verts.end(), internal_ids.begin(), internal_ids.end());
  return sorted_unique(std::move(expect_verts)) == w.g.vertices();
}

std::vector<Coord> boundary_elementary(const Wall& w) {
  Coord start{w.x0 + w.offset(w.rows - 1), w.y0 + w.rows};
  std::vector<Coord> cycle;
  Coord cur = start;
  Coord heading{1, 0};
  do {
    cycle.push_back(cur);
    // clockwise outer walk: try left turn, straight, right turn, back
    Coord l{-heading.y, heading.x}, r{heading.y, -heading.x}, b{-heading.x, -heading.y};
    Coord next{};
    bool moved = false;
    for (Coord d : {l, heading, r, b}) {
      Coord cand{cur.x + d.x, cur.y + d.y};
      if (w.frame_adjacent(cur, cand)) {
        next = cand;
        heading = d;
        moved = true;
        break;
      }
    }
    if (!moved) throw std::logic_error("wall: boundary walk stuck");
    cur = next;
  } while (!(cur == start));
  return cycle;
}

namespace {

// realized walk along consecutive lattice coords; open (no wrap edge)
VertexPath realize(const Wall& w, const std::vector<Coord>& coords, bool closed) {
  VertexPath p;
  p.closed = closed;
  for (std::size_t i = 0; i + 1 < coords.size(); ++i) {
    auto seg = w.stretch_path(coords[i], coords[i + 1]);
    if (i == 0)
      p.verts.push_back(seg.front());
    for (std::size_t k = 1; k < seg.size(); ++k) p.verts.push_back(seg[k]);
  }
  if (closed && coords.size() >= 2) {
    auto seg = w.stretch_path(coords.back(), coords.front());
    for (std::size_t k = 1; k + 1 < seg.size(); ++k) p.verts.push_back(seg[k]);
  }
  std::size_t m = p.verts.size();
  for (std::size_t i = 0; i + 1 < m; ++i)
    p.edges.push_back(*w.g.find_edge(p.verts[i], p.verts[i + 1]));
  if (closed) p.edges.push_back(*w.g.find_edge(p.verts.back(), p.verts.front()));
  return p;
}

}  // namespace

VertexPath boundary(const Wall& w) {
  return realize(w, boundary_elementary(w), true);
}

BrickKind classify_brick(const Wall& w, int row, int col) {
  if (row < 0 || row >= w.rows || col < 0 || col >= w.cols)
    throw std::invalid_argument("classify_brick: out of range");
  if (w.rows == 1) return BrickKind::Top;
  bool bottom = row == 0, top = row == w.rows - 1;
  bool left = col == 0, right = col == w.cols - 1;
  auto o = [&](int i) { return w.offset(i); };
  if (bottom && left)
    return o(0) < o(1) ? BrickKind::BulgingCornerBL : BrickKind::RecessedCornerBL;
  if (bottom && right)
    return o(0) > o(1) ? BrickKind::BulgingCornerBR : BrickKind::RecessedCornerBR;
  if (top && left)
    return o(w.rows - 1) < o(w.rows - 2) ? BrickKind::BulgingCornerTL
                                         : BrickKind::RecessedCornerTL;
  if (top && right)
    return o(w.rows - 1) > o(w.rows - 2) ? BrickKind::BulgingCornerTR
                                         : BrickKind::RecessedCornerTR;
  if (top) return BrickKind::Top;
  if (bottom) return BrickKind::Bottom;
  if (left) return o(row) == 0 ? BrickKind::BulgingLeftSide : BrickKind::RecessedSide;
  if (right) return o(row) == 1 ? BrickKind::BulgingRightSide : BrickKind::RecessedSide;
  return BrickKind::Interior;
}

std::vector<VertexId> PegInterval::interior() const {
  std::vector<VertexId> out(path.verts.begin() + 1, path.verts.end() - 1);
  return out;
}

std::vector<PegInterval> peg_intervals(const Wall& w) {
  if (w.rows < 2 || w.cols < 2)
    throw std::invalid_argument("peg_intervals: wall too small");
  auto trace = boundary_elementary(w);
  std::size_t n = trace.size();
  std::size_t first3 = 0;
  while (first3 < n && w.frame_degree(trace[first3]) != 3) ++first3;
  FW_CHECK(first3 < n, "boundary has a degree-3 vertex");
  std::rotate(trace.begin(), trace.begin() + first3, trace.end());
  std::vector<std::vector<Coord>> runs;
  std::vector<Coord> cur{trace[0]};
  for (std::size_t i = 1; i <= n; ++i) {
    Coord c = trace[i % n];
    cur.push_back(c);
    if (w.frame_degree(c) == 3) {
      runs.push_back(cur);
      cur = {c};
    }
  }
  std::vector<PegInterval> out;
  for (auto& run : runs) {
    if (run.size() < 3) continue;  // no interior pegs (recessed-side verticals)
    PegInterval I;
    I.elem_run = run;
    int hits = 0;
    for (int i = 0; i < w.rows; ++i) {
      for (int j = 0; j < w.cols; ++j) {
        if (i != 0 && i != w.rows - 1 && j != 0 && j != w.cols - 1) continue;
        auto cyc = w.brick_cycle(i, j);
        bool all = std::all_of(run.begin(), run.end(), [&](Coord c) {
          return std::find(cyc.begin(), cyc.end(), c) != cyc.end();
        });
        if (all) {
          ++hits;
          I.brick_row = i;
          I.brick_col = j;
        }
      }
    }
    FW_CHECK(hits == 1, "peg run carried by exactly one brick");
    I.kind = classify_brick(w, I.brick_row, I.brick_col);
    FW_CHECK(kind_has_interval(I.kind), "peg run on an interval-bearing brick");
    I.path = realize(w, run, false);
    I.alpha = I.path.verts.front();
    I.beta = I.path.verts.back();
    auto pegs = I.interior();
    I.terminus = pegs[(pegs.size() - 1) / 2];
    out.push_back(std::move(I));
  }
  return out;
}

std::pair<VertexPath, VertexPath> pegging_paths(const Wall& w, const PegInterval& I) {
  if (!kind_has_interval(I.kind))
    throw std::invalid_argument("pegging_paths: brick kind carries no interval");
  auto cyc = w.brick_cycle(I.brick_row, I.brick_col);
  auto pos = [&](Coord c) {
    return std::find(cyc.begin(), cyc.end(), c) - cyc.begin();
  };
  // far arc: walk the brick cycle from the alpha end away from the interval
  std::size_t ia = pos(I.elem_run.front());
  std::size_t second = pos(I.elem_run[1]);
  int dir = (ia + 1) % 6 == second ? -1 : 1;
  std::vector<Coord> far{cyc[ia]};
  for (std::size_t k = (ia + 6 + dir) % 6; far.back() != I.elem_run.back();
       k = (k + 6 + dir) % 6)
    far.push_back(cyc[k]);
  VertexPath far_real = realize(w, far, false);  // alpha .. beta
  std::vector<VertexId> fint(far_real.verts.begin() + 1, far_real.verts.end() - 1);
  FW_CHECK(!fint.empty(), "far arc has interior vertices");
  VertexId omega = fint[(fint.size() - 1) / 2];
  // S_alpha = m .. alpha .. omega, S_beta = m .. beta .. omega
  auto& iv = I.path.verts;
  std::size_t im = std::find(iv.begin(), iv.end(), I.terminus) - iv.begin();
  std::size_t io =
      std::find(far_real.verts.begin(), far_real.verts.end(), omega) -
      far_real.verts.begin();
  VertexPath sa, sb;
  for (std::size_t i = im + 1; i-- > 0;) sa.verts.push_back(iv[i]);
  for (std::size_t i = 1; i <= io; ++i) sa.verts.push_back(far_real.verts[i]);
  for (std::size_t i = im; i < iv.size(); ++i) sb.verts.push_back(iv[i]);
  for (std::size_t i = far_real.verts.size() - 1; i-- > io;)
    sb.verts.push_back(far_real.verts[i]);
  for (auto* p : {&sa, &sb})
    for (std::size_t i = 0; i + 1 < p->verts.size(); ++i)
      p->edges.push_back(*w.g.find_edge(p->verts[i], p->verts[i + 1]));
  return {sa, sb};
}

Wall subwall(const Wall& w, int anchor_row, int anchor_col, int height) {
  if (height < 1 || anchor_row < 0 || anchor_col < 0 ||
      anchor_row + height > w.rows || anchor_col + height > w.cols)
    throw std::invalid_argument("subwall: out of range");
  Wall s;
  s.rows = s.cols = height;
  s.parity = (w.parity + anchor_row) & 1;
  s.x0 = w.x0 + 2 * anchor_col;
  s.y0 = w.y0 + anchor_row;
  for (Coord c : s.frame_vertices()) {
    VertexId v = w.vertex(c);
    s.at[c] = v;
    s.lattice_of[v] = c;
  }
  for (const ElemEdge& e : s.frame_edges()) {
    auto p = w.stretch.at(e);
    s.stretch[e] = p;
    for (VertexId v : p) s.g.add_vertex(v);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) s.g.add_edge(p[i], p[i + 1]);
  }
  return s;
}

// vertical square-wave between columns x and x+1, from (x, y_from) to the
// lattice line y_to; first move is always vertical
std::vector<Coord> wave_coords(const Wall& host, int x, int y_from, int y_to) {
  std::vector<Coord> out{{x, y_from}};
  int step = y_to > y_from ? 1 : -1;
  int cx = x;
  while (out.back().y != y_to) {
    Coord c = out.back();
    if (host.frame_adjacent(c, {cx, c.y + step})) {
      out.push_back({cx, c.y + step});
    } else {
      int nx = cx == x ? x + 1 : x;
      FW_CHECK(host.frame_adjacent(c, {nx, c.y}), "wave sidestep exists");
      out.push_back({nx, c.y});
      FW_CHECK(host.frame_adjacent(out.back(), {nx, c.y + step}), "wave vertical exists after sidestep");
      out.push_back({nx, c.y + step});
      cx = nx;
    }
  }
  return out;
}

std::vector<Coord> line_coords(const Wall& host, Coord from, int dir) {
  auto span = host.line_span(from.y);
  int xend = dir > 0 ? span->second : span->first;
  std::vector<Coord> out;
  for (int x = from.x; x != xend + dir; x += dir) out.push_back({x, from.y});
  return out;
}

VertexPath realize_run(const Wall& w, const std::vector<Coord>& coords) {
  return realize(w, coords, false);
}

namespace {

VertexPath outward_path(const Wall& host, std::vector<Coord> coords) {
  // coords run terminus -> boundary; flip so the path arrives at the terminus
  std::reverse(coords.begin(), coords.end());
  return realize(host, coords, false);
}

}  // namespace

AccessPaths corner_access_paths(const Wall& outer, const Wall& inner) {
  auto rim = boundary_elementary(outer);
  for (Coord c : inner.frame_vertices())
    if (std::find(rim.begin(), rim.end(), c) != rim.end())
      throw std::invalid_argument("corner_access_paths: inner touches the outer boundary");
  AccessPaths out;
  out.intervals = peg_intervals(inner);
  Coord bl{inner.x0 + inner.offset(0), inner.y0};
  Coord br{bl.x + 2 * inner.cols, inner.y0};
  Coord tl{inner.x0 + inner.offset(inner.rows - 1), inner.y0 + inner.rows};
  Coord tr{tl.x + 2 * inner.cols, tl.y};
  int top_line = outer.y0 + outer.rows, bottom_line = outer.y0;
  std::map<BrickKind, std::size_t> corner_slot;
  for (std::size_t i = 0; i < out.intervals.size(); ++i) {
    PegInterval& I = out.intervals[i];
    std::vector<Coord> coords;
    switch (I.kind) {
      case BrickKind::BulgingCornerBL:
      case BrickKind::RecessedCornerBL:
        I.terminus = inner.vertex(bl);
        coords = line_coords(outer, bl, -1);
        break;
      case BrickKind::BulgingCornerBR:
      case BrickKind::RecessedCornerBR:
        I.terminus = inner.vertex(br);
        coords = line_coords(outer, br, +1);
        break;
      case BrickKind::BulgingCornerTL:
      case BrickKind::RecessedCornerTL:
        I.terminus = inner.vertex(tl);
        coords = line_coords(outer, tl, -1);
        break;
      case BrickKind::BulgingCornerTR:
      case BrickKind::RecessedCornerTR:
        I.terminus = inner.vertex(tr);
        coords = line_coords(outer, tr, +1);
        break;
      case BrickKind::Top: {
        Coord m{inner.x0 + inner.offset(I.brick_row) + 2 * I.brick_col + 1,
                inner.y0 + I.brick_row + 1};
        I.terminus = inner.vertex(m);
        coords = wave_coords(outer, m.x, m.y, top_line);
        break;
      }
      case BrickKind::Bottom: {
        Coord m{inner.x0 + inner.offset(I.brick_row) + 2 * I.brick_col + 1,
                inner.y0 + I.brick_row};
        I.terminus = inner.vertex(m);
        coords = wave_coords(outer, m.x, m.y, bottom_line);
        break;
      }
      case BrickKind::BulgingLeftSide: {
        Coord m{inner.x0 + inner.offset(I.brick_row), inner.y0 + I.brick_row + 1};
        I.terminus = inner.vertex(m);
        coords = line_coords(outer, m, -1);
        break;
      }
      case BrickKind::BulgingRightSide: {
        Coord m{inner.x0 + inner.offset(I.brick_row) + 2 * inner.cols,
                inner.y0 + I.brick_row + 1};
        I.terminus = inner.vertex(m);
        coords = line_coords(outer, m, +1);
        break;
      }
      default:
        throw std::logic_error("corner_access_paths: unexpected interval kind");
    }
    out.paths.push_back(outward_path(outer, coords));
    if (kind_is_corner(I.kind)) corner_slot[I.kind] = i;
  }
  if (corner_slot.size() != 4)
    throw std::logic_error("corner_access_paths: corner intervals missing");
  std::size_t k = 0;
  for (auto& [kind, idx] : corner_slot) out.corner_intervals[k++] = idx;
  return out;
}

nlohmann::ordered_json wall_to_json(const Wall& w) {
  nlohmann::ordered_json j;
  j["r"] = w.rows;
  j["cols"] = w.cols;
  j["parity"] = w.parity;
  j["anchor"] = {w.y0, w.x0 / 2};
  auto& subs = j["subdivisions"] = nlohmann::ordered_json::object();
  for (const auto& [e, p] : w.stretch) {
    if (p.size() > 2) {
      std::ostringstream key;
      key << e.first.x << "," << e.first.y << "-" << e.second.x << "," << e.second.y;
      subs[key.str()] = p.size() - 2;
    }
  }
  j["graph"] = graph_to_json(w.g);
  return j;
}

Wall wall_from_json(const nlohmann::json& j) {
  int rows = j.at("r").get<int>();
  int cols = j.value("cols", rows);
  Wall w = make_wall(rows, cols);
  w.parity = j.value("parity", 0);
  if (j.contains("anchor")) {
    w.y0 = j["anchor"][0].get<int>();
    w.x0 = 2 * j["anchor"][1].get<int>();
  }
  if (w.parity != 0 || w.x0 != 0 || w.y0 != 0) {
    // rebuild frame maps under the shifted frame
    Wall shifted;
    shifted.rows = rows;
    shifted.cols = cols;
    shifted.parity = w.parity;
    shifted.x0 = w.x0;
    shifted.y0 = w.y0;
    auto id = [](Coord c) { return static_cast<VertexId>(c.y * 256 + c.x); };
    for (Coord c : shifted.frame_vertices()) {
      shifted.at[c] = id(c);
      shifted.lattice_of[id(c)] = c;
      shifted.g.add_vertex(id(c));
    }
    for (const ElemEdge& e : shifted.frame_edges()) {
      shifted.g.add_edge(shifted.at[e.first], shifted.at[e.second]);
      shifted.stretch[e] = {shifted.at[e.first], shifted.at[e.second]};
    }
    w = std::move(shifted);
  }
  std::map<ElemEdge, int> plan;
  if (j.contains("subdivisions")) {
    for (auto it = j["subdivisions"].begin(); it != j["subdivisions"].end(); ++it) {
      int x1, y1, x2, y2;
      char c;
      std::istringstream is(it.key());
      is >> x1 >> c >> y1 >> c >> x2 >> c >> y2;
      if (!is) throw std::invalid_argument("wall json: bad subdivision key");
      plan[elem_edge({x1, y1}, {x2, y2})] = it.value().get<int>();
    }
  }
  return plan.empty() ? w : subdivide(w, plan);
}

std::string wall_to_dot(const Wall& w) {
  std::ostringstream os;
  os << "graph wall {\n  node [shape=point];\n";
  for (const auto& [c, v] : w.at)
    os << "  " << v << " [pos=\"" << c.x << "," << c.y << "!\"];\n";
  for (const Edge& e : w.g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace flatwall
