#pragma once
// Loop-free multigraphs over opaque integer vertex ids.  Edges are kept in
// insertion order and addressed by index, so parallel edges stay
// distinguishable (paths and flaps must be able to tell them apart).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace flatwall {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId u = 0, v = 0;
  bool touches(VertexId x) const { return u == x || v == x; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
};

class Multigraph {
 public:
  void add_vertex(VertexId v);
  EdgeId add_edge(VertexId u, VertexId v);  // inserts missing endpoints

  const std::vector<VertexId>& vertices() const { return verts_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return verts_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(VertexId v) const;
  Edge edge(EdgeId e) const { return edges_[e]; }
  // all edge ids incident to v, ascending
  const std::vector<EdgeId>& incident(VertexId v) const;
  std::size_t degree(VertexId v) const { return incident(v).size(); }
  std::vector<VertexId> neighbors(VertexId v) const;  // sorted, deduplicated
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

 private:
  std::vector<VertexId> verts_;             // sorted
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> inc_;    // parallel to verts_
  std::size_t index_of(VertexId v) const;   // verts_ position, asserts presence
};

// A subgraph of some fixed host graph, by reference.  Both lists sorted.
struct SubgraphRef {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  bool contains_vertex(VertexId v) const;
  bool contains_edge(EdgeId e) const;
};

// Walk in a host graph; edges[i] joins verts[i] and verts[i+1].  A closed
// walk repeats nothing and has edges.size() == verts.size() (last edge wraps).
struct VertexPath {
  std::vector<VertexId> verts;
  std::vector<EdgeId> edges;
  bool closed = false;
  bool ok(const Multigraph& g) const;  // consecutive incidence + simplicity
  bool contains_vertex(VertexId v) const;
};

struct Separation {
  std::vector<VertexId> a, b;  // sorted
  std::vector<VertexId> interface() const;
};

// ---- basic algorithms ----
std::vector<std::vector<VertexId>> connected_components(const Multigraph& g);
bool is_connected(const Multigraph& g);
// true iff a, b cover V(g) and no edge joins a\b with b\a
bool verify_separation(const Multigraph& g, const Separation& s);
// subgraph induced on the given vertices; vertex ids preserved, edges renumbered
Multigraph induced(const Multigraph& g, const std::vector<VertexId>& vs);
Multigraph from_subgraph(const Multigraph& g, const SubgraphRef& ref);

// ---- set helpers used across modules (all inputs/outputs sorted) ----
std::vector<VertexId> sorted_unique(std::vector<VertexId> v);
std::vector<VertexId> set_union(const std::vector<VertexId>& a, const std::vector<VertexId>& b);
std::vector<VertexId> set_intersect(const std::vector<VertexId>& a, const std::vector<VertexId>& b);
std::vector<VertexId> set_minus(const std::vector<VertexId>& a, const std::vector<VertexId>& b);
bool set_contains(const std::vector<VertexId>& a, VertexId v);
bool set_subset(const std::vector<VertexId>& a, const std::vector<VertexId>& b);  // a subset of b

// ---- serialization ----
nlohmann::ordered_json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const nlohmann::json& j);
std::string graph_to_dot(const Multigraph& g, const std::string& name = "G");

}  // namespace flatwall
