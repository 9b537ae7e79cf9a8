#include "flatwall/society.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

#include "flatwall/check.hpp"
#include "flatwall/planarity.hpp"

namespace flatwall {

std::vector<std::string> society_ok(const Society& s) {
  std::vector<std::string> bad;
  std::set<VertexId> seen;
  for (VertexId b : s.boundary) {
    if (!s.g.has_vertex(b))
      bad.push_back("boundary vertex " + std::to_string(b) + " not in the graph");
    if (!seen.insert(b).second)
      bad.push_back("boundary vertex " + std::to_string(b) + " repeated");
  }
  return bad;
}

// Rural means drawable in a disk with the boundary on the rim in order.
// That holds iff the graph stays planar after adding a cycle through the
// boundary in order plus a hub vertex adjacent to the whole boundary: the
// hub pins the cycle to bound a disk, and conversely a disk drawing leaves
// room for both.  The witness is read off the augmented embedding.
std::optional<Rendition> is_rural(const Society& s) {
  FW_CHECK(society_ok(s).empty(), "well-formed society");
  const std::size_t k = s.boundary.size();
  const Multigraph gs = simplify(s.g);
  Multigraph aug = gs;

  std::set<std::pair<VertexId, VertexId>> scaffold;
  const std::size_t pairs = k <= 1 ? 0 : (k == 2 ? 1 : k);
  for (std::size_t i = 0; i < pairs; ++i) {
    const VertexId a = s.boundary[i];
    const VertexId b = s.boundary[(i + 1) % k];
    const std::pair<VertexId, VertexId> key{std::min(a, b), std::max(a, b)};
    if (!gs.find_edge(a, b) && !scaffold.count(key)) {
      aug.add_edge(a, b);
      scaffold.insert(key);
    }
  }
  VertexId hub = 0;
  if (k >= 1) {
    hub = s.g.vertices().back() + 1;
    aug.add_vertex(hub);
    for (VertexId b : s.boundary) aug.add_edge(hub, b);
  }

  auto emb = planar_embedding(aug);
  if (!emb) return std::nullopt;

  // Deleting the hub merges its sector faces into one face whose walk
  // visits the boundary exactly in spoke-rotation order, and the witness
  // construction needs that walk to run in society order.  So a reversed
  // spoke match means the whole embedding must be mirrored first.
  bool flip = false;
  if (k >= 3) {
    const auto& spokes = emb->rotation.at(hub);
    auto matches = [&](const std::vector<VertexId>& target) {
      for (std::size_t s0 = 0; s0 < k; ++s0) {
        bool all = true;
        for (std::size_t i = 0; i < k && all; ++i) all = spokes[(s0 + i) % k] == target[i];
        if (all) return true;
      }
      return false;
    };
    if (!matches(s.boundary)) {
      std::vector<VertexId> rev(s.boundary.rbegin(), s.boundary.rend());
      FW_CHECK(matches(rev), "hub spokes follow the boundary cycle");
      flip = true;
    }
  }

  Embedding sub;
  for (const auto& [v, rot] : emb->rotation) {
    if (k >= 1 && v == hub) continue;
    std::vector<VertexId> out;
    for (VertexId w : rot) {
      if (k >= 1 && w == hub) continue;
      if (scaffold.count({std::min(v, w), std::max(v, w)})) continue;
      out.push_back(w);
    }
    if (flip) std::reverse(out.begin(), out.end());
    sub.rotation[v] = std::move(out);
  }
  return trivial_rendition(s.g, s.boundary, sub);
}

namespace {

std::optional<VertexPath> bfs_path_avoiding(const Multigraph& g, VertexId from, VertexId to,
                                            const std::vector<VertexId>& avoid) {
  std::set<VertexId> blocked(avoid.begin(), avoid.end());
  std::map<VertexId, EdgeId> via;
  std::deque<VertexId> q{from};
  std::set<VertexId> seen{from};
  while (!q.empty()) {
    const VertexId cur = q.front();
    q.pop_front();
    if (cur == to) break;
    for (EdgeId e : g.incident(cur)) {
      const VertexId w = g.edge(e).other(cur);
      if (blocked.count(w) || seen.count(w)) continue;
      seen.insert(w);
      via[w] = e;
      q.push_back(w);
    }
  }
  if (!seen.count(to)) return std::nullopt;
  VertexPath p;
  VertexId cur = to;
  std::vector<EdgeId> edges;
  while (cur != from) {
    const EdgeId e = via.at(cur);
    edges.push_back(e);
    p.verts.push_back(cur);
    cur = g.edge(e).other(cur);
  }
  p.verts.push_back(from);
  std::reverse(p.verts.begin(), p.verts.end());
  std::reverse(edges.begin(), edges.end());
  p.edges = std::move(edges);
  return p;
}

}  // namespace

std::optional<std::pair<VertexPath, VertexPath>> two_disjoint_paths(
    const Multigraph& g, VertexId s1, VertexId t1, VertexId s2, VertexId t2) {
  FW_CHECK(s1 != t1 && s2 != t2 && s1 != s2 && s1 != t2 && t1 != s2 && t1 != t2,
           "four distinct endpoints");
  VertexPath p1;
  p1.verts = {s1};
  std::optional<std::pair<VertexPath, VertexPath>> result;

  std::function<bool()> dfs = [&]() -> bool {
    const VertexId cur = p1.verts.back();
    if (cur == t1) {
      if (auto p2 = bfs_path_avoiding(g, s2, t2, p1.verts)) {
        result = std::make_pair(p1, *p2);
        return true;
      }
      return false;
    }
    for (EdgeId e : g.incident(cur)) {
      const VertexId w = g.edge(e).other(cur);
      if (w == s2 || w == t2) continue;
      if (p1.contains_vertex(w)) continue;
      p1.verts.push_back(w);
      p1.edges.push_back(e);
      if (dfs()) return true;
      p1.verts.pop_back();
      p1.edges.pop_back();
    }
    return false;
  };
  dfs();
  return result;
}

std::optional<Cross> find_cross(const Society& s) {
  const auto& C = s.boundary;
  if (C.size() < 4) throw std::invalid_argument("a cross needs at least four boundary vertices");
  const std::size_t n = C.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t kk = j + 1; kk < n; ++kk)
        for (std::size_t l = kk + 1; l < n; ++l)
          if (auto r = two_disjoint_paths(s.g, C[i], C[kk], C[j], C[l]))
            return Cross{r->first, r->second};
  return std::nullopt;
}

nlohmann::ordered_json society_to_json(const Society& s) {
  auto j = graph_to_json(s.g);
  j["boundary"] = s.boundary;
  return j;
}

Society society_from_json(const nlohmann::json& j) {
  Society s;
  s.g = graph_from_json(j);
  s.boundary = j.at("boundary").get<std::vector<VertexId>>();
  return s;
}

}  // namespace flatwall
