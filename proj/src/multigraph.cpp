#include "flatwall/multigraph.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace flatwall {

std::size_t Multigraph::index_of(VertexId v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  assert(it != verts_.end() && *it == v);
  return static_cast<std::size_t>(it - verts_.begin());
}

bool Multigraph::has_vertex(VertexId v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

void Multigraph::add_vertex(VertexId v) {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it != verts_.end() && *it == v) return;
  inc_.emplace(inc_.begin() + (it - verts_.begin()));
  verts_.insert(it, v);
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("multigraph: loops not supported");
  add_vertex(u);
  add_vertex(v);
  EdgeId id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v});
  inc_[index_of(u)].push_back(id);
  inc_[index_of(v)].push_back(id);
  return id;
}

const std::vector<EdgeId>& Multigraph::incident(VertexId v) const {
  return inc_[index_of(v)];
}

std::vector<VertexId> Multigraph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (EdgeId e : incident(v)) out.push_back(edges_[e].other(v));
  return sorted_unique(std::move(out));
}

std::optional<EdgeId> Multigraph::find_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) return std::nullopt;
  for (EdgeId e : incident(u))
    if (edges_[e].touches(v)) return e;
  return std::nullopt;
}

bool SubgraphRef::contains_vertex(VertexId v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool SubgraphRef::contains_edge(EdgeId e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

bool VertexPath::ok(const Multigraph& g) const {
  if (verts.empty()) return false;
  std::size_t want = closed ? verts.size() : verts.size() - 1;
  if (edges.size() != want) return false;
  if (closed && verts.size() < 3) return false;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge e = g.edge(edges[i]);
    VertexId a = verts[i], b = verts[(i + 1) % verts.size()];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return false;
  }
  if (sorted_unique(verts).size() != verts.size()) return false;
  std::vector<EdgeId> es = edges;
  std::sort(es.begin(), es.end());
  return std::adjacent_find(es.begin(), es.end()) == es.end();
}

bool VertexPath::contains_vertex(VertexId v) const {
  return std::find(verts.begin(), verts.end(), v) != verts.end();
}

std::vector<VertexId> Separation::interface() const {
  return set_intersect(a, b);
}

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g) {
  std::vector<std::vector<VertexId>> comps;
  std::vector<VertexId> stack;
  std::vector<bool> seen(g.vertex_count(), false);
  const auto& vs = g.vertices();
  auto pos = [&](VertexId v) {
    return static_cast<std::size_t>(
        std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  for (VertexId root : vs) {
    if (seen[pos(root)]) continue;
    std::vector<VertexId> comp;
    stack.push_back(root);
    seen[pos(root)] = true;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.edge(e).other(v);
        if (!seen[pos(w)]) {
          seen[pos(w)] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Multigraph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

bool verify_separation(const Multigraph& g, const Separation& s) {
  if (set_union(s.a, s.b) != g.vertices()) return false;
  for (VertexId v : s.a)
    if (!g.has_vertex(v)) return false;
  for (VertexId v : s.b)
    if (!g.has_vertex(v)) return false;
  auto only_a = set_minus(s.a, s.b);
  auto only_b = set_minus(s.b, s.a);
  for (const Edge& e : g.edges()) {
    bool ua = set_contains(only_a, e.u), ub = set_contains(only_b, e.u);
    bool va = set_contains(only_a, e.v), vb = set_contains(only_b, e.v);
    if ((ua && vb) || (ub && va)) return false;
  }
  return true;
}

Multigraph induced(const Multigraph& g, const std::vector<VertexId>& vs) {
  auto keep = sorted_unique(vs);
  Multigraph h;
  for (VertexId v : keep)
    if (g.has_vertex(v)) h.add_vertex(v);
  for (const Edge& e : g.edges())
    if (set_contains(keep, e.u) && set_contains(keep, e.v)) h.add_edge(e.u, e.v);
  return h;
}

Multigraph from_subgraph(const Multigraph& g, const SubgraphRef& ref) {
  Multigraph h;
  for (VertexId v : ref.vertices) h.add_vertex(v);
  for (EdgeId e : ref.edges) h.add_edge(g.edge(e).u, g.edge(e).v);
  return h;
}

std::vector<VertexId> sorted_unique(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<VertexId> set_union(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  std::vector<VertexId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<VertexId> set_intersect(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<VertexId> set_minus(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  std::vector<VertexId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const std::vector<VertexId>& a, VertexId v) {
  return std::binary_search(a.begin(), a.end(), v);
}

bool set_subset(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

nlohmann::ordered_json graph_to_json(const Multigraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertices();
  auto& je = j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) je.push_back({e.u, e.v});
  return j;
}

Multigraph graph_from_json(const nlohmann::json& j) {
  Multigraph g;
  for (const auto& v : j.at("vertices")) g.add_vertex(v.get<VertexId>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph json: edge must be a pair");
    g.add_edge(e[0].get<VertexId>(), e[1].get<VertexId>());
  }
  return g;
}

std::string graph_to_dot(const Multigraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (VertexId v : g.vertices()) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace flatwall
