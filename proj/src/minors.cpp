#include "flatwall/minors.hpp"

#include <algorithm>

#include "flatwall/check.hpp"
#include <bit>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>

#include "flatwall/planarity.hpp"

namespace flatwall {

Multigraph complete_graph(unsigned n) {
  Multigraph g;
  for (unsigned v = 0; v < n; ++v) g.add_vertex(v);
  for (unsigned u = 0; u < n; ++u)
    for (unsigned v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

bool verify_minor_model(const Multigraph& host, const Multigraph& pattern,
                        const MinorModel& m) {
  if (m.branch_sets.size() != pattern.vertex_count()) return false;
  std::vector<VertexId> all;
  for (const auto& bs : m.branch_sets) {
    if (bs.empty()) return false;
    for (VertexId v : bs) {
      if (!host.has_vertex(v)) return false;
      all.push_back(v);
    }
    if (connected_components(induced(host, bs)).size() != 1) return false;
  }
  if (sorted_unique(all).size() != all.size()) return false;  // disjoint
  Multigraph pat = simplify(pattern);
  const auto& pv = pat.vertices();
  auto pidx = [&](VertexId v) {
    return static_cast<std::size_t>(
        std::lower_bound(pv.begin(), pv.end(), v) - pv.begin());
  };
  for (const Edge& pe : pat.edges()) {
    const auto& su = m.branch_sets[pidx(pe.u)];
    const auto& sv = m.branch_sets[pidx(pe.v)];
    bool joined = false;
    for (const Edge& he : host.edges()) {
      if ((set_contains(su, he.u) && set_contains(sv, he.v)) ||
          (set_contains(su, he.v) && set_contains(sv, he.u))) {
        joined = true;
        break;
      }
    }
    if (!joined) return false;
  }
  return true;
}

namespace {

// ---- reduced host with path bookkeeping for model lifting ----

struct RedEdge {
  VertexId u, v;
  std::vector<VertexId> via;  // suppressed original vertices, in u->v order
};

struct Reduced {
  std::vector<VertexId> verts;  // sorted original ids
  std::vector<RedEdge> edges;
};

std::vector<VertexId> reversed(std::vector<VertexId> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

// Remove parallel reduced edges (keep the first) and stale vertices' edges.
void dedup_edges(Reduced& r) {
  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<RedEdge> keep;
  for (auto& e : r.edges) {
    auto key = std::minmax(e.u, e.v);
    if (seen.insert(key).second) keep.push_back(std::move(e));
  }
  r.edges = std::move(keep);
}

std::size_t degree_in(const Reduced& r, VertexId v) {
  std::size_t d = 0;
  for (const auto& e : r.edges) d += (e.u == v) + (e.v == v);
  return d;
}

// Simplify always; drop degree<=1 vertices iff min_pat_deg >= 2; suppress
// degree-2 vertices iff min_pat_deg >= 3.  Iterates to a fixpoint.
Reduced reduce(const Multigraph& host, std::size_t min_pat_deg) {
  Reduced r;
  r.verts = host.vertices();
  for (const Edge& e : host.edges()) r.edges.push_back({e.u, e.v, {}});
  dedup_edges(r);
  bool changed = true;
  while (changed) {
    changed = false;
    if (min_pat_deg >= 2) {
      for (std::size_t i = 0; i < r.verts.size();) {
        VertexId v = r.verts[i];
        if (degree_in(r, v) <= 1) {
          std::erase_if(r.edges, [&](const RedEdge& e) { return e.u == v || e.v == v; });
          r.verts.erase(r.verts.begin() + i);
          changed = true;
        } else {
          ++i;
        }
      }
    }
    if (min_pat_deg >= 3) {
      for (VertexId v : std::vector<VertexId>(r.verts)) {
        std::vector<std::size_t> inc;
        for (std::size_t k = 0; k < r.edges.size(); ++k)
          if (r.edges[k].u == v || r.edges[k].v == v) inc.push_back(k);
        if (inc.size() != 2) continue;
        RedEdge e1 = r.edges[inc[0]], e2 = r.edges[inc[1]];
        // orient e1 as a->v, e2 as v->b
        if (e1.v != v) {
          std::swap(e1.u, e1.v);
          e1.via = reversed(std::move(e1.via));
        }
        if (e2.u != v) {
          std::swap(e2.u, e2.v);
          e2.via = reversed(std::move(e2.via));
        }
        r.edges.erase(r.edges.begin() + inc[1]);
        r.edges.erase(r.edges.begin() + inc[0]);
        r.verts.erase(std::find(r.verts.begin(), r.verts.end(), v));
        if (e1.u != e2.v) {
          RedEdge merged{e1.u, e2.v, {}};
          merged.via = e1.via;
          merged.via.push_back(v);
          merged.via.insert(merged.via.end(), e2.via.begin(), e2.via.end());
          r.edges.push_back(std::move(merged));
          dedup_edges(r);
        }
        changed = true;
      }
    }
  }
  return r;
}

// ---- bitmask branch-and-bound over one block of the reduced graph ----

using Mask = unsigned __int128;

int popcnt(Mask m) {
  return std::popcount(static_cast<std::uint64_t>(m)) +
         std::popcount(static_cast<std::uint64_t>(m >> 64));
}

int lowbit(Mask m) {
  auto lo = static_cast<std::uint64_t>(m);
  if (lo) return std::countr_zero(lo);
  return 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
}

struct Core {
  int n = 0, np = 0;
  std::vector<Mask> adj;                    // host adjacency within the block
  std::vector<std::vector<int>> need;       // pattern neighbours j < k, per k
  bool complete = false;
  std::uint64_t* budget = nullptr;          // shared across blocks; 0 => out
  bool unlimited = false;
  std::uint64_t steps = 0;
  bool out_of_budget = false;

  std::vector<Mask> bs, nb;                 // closed branch sets + their hood
  std::optional<std::vector<Mask>> found;

  bool pay() {
    ++steps;
    if (unlimited) return true;
    if (*budget == 0) {
      out_of_budget = true;
      return false;
    }
    --*budget;
    return true;
  }

  Mask hood(Mask s) const {
    Mask h = 0;
    while (s) {
      int v = lowbit(s);
      s &= s - 1;
      h |= adj[v];
    }
    return h;
  }

  Mask closure(Mask from, Mask avail) const {
    Mask r = from;
    for (;;) {
      Mask add = hood(r) & avail & ~r;
      if (!add) break;
      r |= add;
    }
    return r;
  }

  void place(int k, Mask free) {
    if (found || out_of_budget) return;
    if (k == np) {
      found = bs;
      return;
    }
    Mask roots = free;
    if (complete && k > 0) {
      int prev = lowbit(bs[k - 1]);
      roots &= ~((Mask(1) << (prev + 1)) - 1);
    }
    while (roots) {
      int r = lowbit(roots);
      roots &= roots - 1;
      if (!pay()) return;
      bs.push_back(Mask(1) << r);
      nb.push_back(0);
      grow(k, free & ~(Mask(1) << r), 0);
      bs.pop_back();
      nb.pop_back();
      if (found || out_of_budget) return;
    }
  }

  void grow(int k, Mask free, Mask forbidden) {
    if (found || out_of_budget) return;
    if (!pay()) return;
    Mask cur = bs[k];
    if (popcnt(free) < np - k - 1) return;
    // feasibility: every still-unmet needed set must be reachable
    Mask reach = 0;
    bool reach_done = false;
    for (int j : need[k]) {
      if (nb[j] & cur) continue;
      if (!reach_done) {
        reach = closure(cur, free);
        reach_done = true;
      }
      if (!(nb[j] & reach)) return;
    }
    // try closing the current set
    bool closable = true;
    for (int j : need[k])
      if (!(nb[j] & cur)) {
        closable = false;
        break;
      }
    if (closable) {
      nb[k] = hood(cur);
      place(k + 1, free);
      if (found || out_of_budget) return;
    }
    Mask ext = hood(cur) & free & ~forbidden;
    if (!ext) return;
    int v = lowbit(ext);
    Mask vm = Mask(1) << v;
    bs[k] = cur | vm;
    grow(k, free & ~vm, forbidden);
    bs[k] = cur;
    if (found || out_of_budget) return;
    grow(k, free, forbidden | vm);
  }
};

struct PatternInfo {
  std::vector<VertexId> verts;
  std::vector<std::vector<int>> adj_lists;  // by index
  std::size_t min_deg = 0;
  bool complete = false;
  bool two_connected = false;
  bool planar = true;
};

PatternInfo pattern_info(const Multigraph& pat) {
  PatternInfo pi;
  pi.verts = pat.vertices();
  int np = static_cast<int>(pi.verts.size());
  pi.adj_lists.resize(np);
  auto idx = [&](VertexId v) {
    return static_cast<int>(std::lower_bound(pi.verts.begin(), pi.verts.end(), v) -
                            pi.verts.begin());
  };
  for (const Edge& e : pat.edges()) {
    pi.adj_lists[idx(e.u)].push_back(idx(e.v));
    pi.adj_lists[idx(e.v)].push_back(idx(e.u));
  }
  pi.min_deg = np ? SIZE_MAX : 0;
  for (auto& l : pi.adj_lists) {
    std::sort(l.begin(), l.end());
    pi.min_deg = std::min(pi.min_deg, l.size());
  }
  pi.complete =
      pat.edge_count() == static_cast<std::size_t>(np) * (np - 1) / 2 &&
      pi.min_deg == static_cast<std::size_t>(np - 1);
  pi.planar = is_planar(pat);
  if (np >= 3 && is_connected(pat)) {
    pi.two_connected = true;
    for (VertexId v : pi.verts) {
      auto rest = set_minus(pi.verts, {v});
      if (!is_connected(induced(pat, rest))) {
        pi.two_connected = false;
        break;
      }
    }
  }
  return pi;
}

// Vertex sets of the biconnected blocks of the reduced graph.
std::vector<std::vector<VertexId>> blocks_of(const Reduced& r) {
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                   boost::no_property,
                                   boost::property<boost::edge_index_t, int>>;
  BG bg(r.verts.size());
  auto pos = [&](VertexId v) {
    return static_cast<std::size_t>(
        std::lower_bound(r.verts.begin(), r.verts.end(), v) - r.verts.begin());
  };
  int idx = 0;
  for (const auto& e : r.edges) {
    auto [d, ok] = boost::add_edge(pos(e.u), pos(e.v), bg);
    (void)ok;
    boost::put(boost::edge_index, bg, d, idx++);
  }
  std::vector<int> comp(r.edges.size());
  auto comp_map = boost::make_iterator_property_map(
      comp.begin(), boost::get(boost::edge_index, bg));
  std::size_t nblocks = boost::biconnected_components(bg, comp_map);
  std::vector<std::vector<VertexId>> out(nblocks);
  for (std::size_t i = 0; i < r.edges.size(); ++i) {
    out[comp[i]].push_back(r.edges[i].u);
    out[comp[i]].push_back(r.edges[i].v);
  }
  for (auto& b : out) b = sorted_unique(std::move(b));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

// Expand a model over the reduced graph into one over the original host.
MinorModel lift_model(const Multigraph& host, const Reduced& r,
                      const std::vector<std::vector<VertexId>>& red_sets,
                      const std::vector<std::vector<int>>& pat_adj) {
  MinorModel m;
  m.branch_sets.resize(red_sets.size());
  auto side_of = [&](VertexId v) -> int {
    for (std::size_t i = 0; i < red_sets.size(); ++i)
      if (set_contains(red_sets[i], v)) return static_cast<int>(i);
    return -1;
  };
  for (std::size_t i = 0; i < red_sets.size(); ++i)
    m.branch_sets[i] = red_sets[i];
  // spanning connections inside each set: BFS over reduced edges, pulling in
  // the suppressed interior of every tree edge used
  for (std::size_t i = 0; i < red_sets.size(); ++i) {
    const auto& s = red_sets[i];
    std::vector<VertexId> seen{s.front()};
    bool grewSome = true;
    while (grewSome) {
      grewSome = false;
      for (const auto& e : r.edges) {
        if (!set_contains(s, e.u) || !set_contains(s, e.v)) continue;
        bool su = set_contains(sorted_unique(seen), e.u);
        bool sv = set_contains(sorted_unique(seen), e.v);
        if (su == sv) continue;
        seen.push_back(su ? e.v : e.u);
        for (VertexId w : e.via) m.branch_sets[i].push_back(w);
        grewSome = true;
      }
    }
  }
  // one realizing reduced edge per pattern edge; its interior goes to the
  // earlier side, which keeps that side connected and leaves a host edge
  for (std::size_t i = 0; i < red_sets.size(); ++i) {
    for (int j : pat_adj[i]) {
      if (static_cast<std::size_t>(j) < i) continue;
      for (const auto& e : r.edges) {
        int a = side_of(e.u), b = side_of(e.v);
        if ((a == static_cast<int>(i) && b == j) ||
            (b == static_cast<int>(i) && a == j)) {
          for (VertexId w : e.via) m.branch_sets[i].push_back(w);
          break;
        }
      }
    }
  }
  for (auto& bsv : m.branch_sets) bsv = sorted_unique(std::move(bsv));
  (void)host;
  return m;
}

}  // namespace

MinorSearch find_minor(const Multigraph& host, const Multigraph& pattern,
                       std::uint64_t budget) {
  MinorSearch out;
  Multigraph pat = simplify(pattern);
  PatternInfo pi = pattern_info(pat);
  int np = static_cast<int>(pi.verts.size());
  if (np == 0) {
    out.status = SearchStatus::Found;
    out.model = MinorModel{};
    return out;
  }
  Reduced red = reduce(simplify(host), pi.min_deg);

  std::vector<std::vector<VertexId>> cand_blocks;
  if (pi.two_connected)
    cand_blocks = blocks_of(red);
  else if (!red.verts.empty())
    cand_blocks.push_back(red.verts);

  bool host_has_planarity_shortcut = !pi.planar;
  std::uint64_t remaining = budget;
  bool ran_out = false;
  for (const auto& block : cand_blocks) {
    if (block.size() < static_cast<std::size_t>(np)) continue;
    Multigraph bg;
    for (VertexId v : block) bg.add_vertex(v);
    for (const auto& e : red.edges)
      if (set_contains(block, e.u) && set_contains(block, e.v))
        bg.add_edge(e.u, e.v);
    if (host_has_planarity_shortcut && is_planar(bg)) continue;
    if (block.size() > 128) {
      ran_out = true;  // beyond the bitmask core; report honest unknown
      continue;
    }
    Core core;
    core.n = static_cast<int>(block.size());
    core.np = np;
    core.complete = pi.complete;
    core.unlimited = budget == 0;
    core.budget = &remaining;
    core.adj.assign(core.n, 0);
    auto bpos = [&](VertexId v) {
      return static_cast<int>(
          std::lower_bound(block.begin(), block.end(), v) - block.begin());
    };
    for (const auto& e : bg.edges()) {
      int a = bpos(e.u), b = bpos(e.v);
      core.adj[a] |= Mask(1) << b;
      core.adj[b] |= Mask(1) << a;
    }
    core.need.resize(np);
    for (int k = 0; k < np; ++k)
      for (int j : pi.adj_lists[k])
        if (j < k) core.need[k].push_back(j);
    Mask all = core.n == 128 ? ~Mask(0) : (Mask(1) << core.n) - 1;
    core.place(0, all);
    out.steps += core.steps;
    if (core.found) {
      std::vector<std::vector<VertexId>> red_sets(np);
      for (int k = 0; k < np; ++k) {
        Mask m = (*core.found)[k];
        while (m) {
          int v = lowbit(m);
          m &= m - 1;
          red_sets[k].push_back(block[v]);
        }
      }
      out.status = SearchStatus::Found;
      out.model = lift_model(host, red, red_sets, pi.adj_lists);
      FW_CHECK(verify_minor_model(host, pattern, *out.model), "minor model verifies");
      return out;
    }
    ran_out = ran_out || core.out_of_budget;
  }
  out.status =
      ran_out ? SearchStatus::UnknownBudget : SearchStatus::AbsentExhaustive;
  return out;
}

}  // namespace flatwall
