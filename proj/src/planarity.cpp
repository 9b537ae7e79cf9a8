#include "flatwall/planarity.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

namespace flatwall {

Multigraph simplify(const Multigraph& g) {
  Multigraph h;
  for (VertexId v : g.vertices()) h.add_vertex(v);
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : g.edges()) {
    auto key = std::minmax(e.u, e.v);
    if (seen.insert(key).second) h.add_edge(e.u, e.v);
  }
  return h;
}

namespace {

using BoostGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
    boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const Multigraph& g) {
  BoostGraph bg(g.vertex_count());
  const auto& vs = g.vertices();
  auto pos = [&](VertexId v) {
    return static_cast<std::size_t>(
        std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  int idx = 0;
  for (const Edge& e : g.edges()) {
    auto [desc, ok] = boost::add_edge(pos(e.u), pos(e.v), bg);
    (void)ok;
    boost::put(boost::edge_index, bg, desc, idx++);
  }
  return bg;
}

}  // namespace

bool is_planar(const Multigraph& g) {
  Multigraph s = simplify(g);
  if (s.edge_count() > 3 * std::max<std::size_t>(s.vertex_count(), 3) - 6)
    return false;
  BoostGraph bg = to_boost(s);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<Embedding> planar_embedding(const Multigraph& g) {
  Multigraph s = simplify(g);
  BoostGraph bg = to_boost(s);
  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> emb(boost::num_vertices(bg));
  bool ok = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(
              emb.begin(), boost::get(boost::vertex_index, bg)));
  if (!ok) return std::nullopt;
  Embedding out;
  const auto& vs = s.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto& rot = out.rotation[vs[i]];
    for (EdgeDesc e : emb[i]) {
      auto a = boost::source(e, bg), b = boost::target(e, bg);
      rot.push_back(vs[a == i ? b : a]);
    }
  }
  return out;
}

}  // namespace flatwall
