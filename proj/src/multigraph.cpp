#include "rigidlift/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "maxflow.hpp"
#include "rigidlift/error.hpp"

namespace rigidlift {

Multigraph Multigraph::build(const std::vector<EdgeSpec>& edges, const std::string& base_edge) {
  Multigraph g;
  std::set<std::string> vertex_set;
  std::set<std::string> edge_set;
  for (const auto& e : edges) {
    if (!edge_set.insert(e.id).second) fail(ErrorKind::DuplicateEdgeId, "edge id '" + e.id + "' repeated");
    if (e.tail == e.head) fail(ErrorKind::LoopEdge, "edge '" + e.id + "' is a loop at '" + e.tail + "'");
    vertex_set.insert(e.tail);
    vertex_set.insert(e.head);
  }
  if (!edge_set.count(base_edge)) fail(ErrorKind::MissingBaseEdge, "base edge '" + base_edge + "' is not an edge");

  g.vertex_ids_.assign(vertex_set.begin(), vertex_set.end());
  g.edge_ids_.assign(edge_set.begin(), edge_set.end());
  for (int i = 0; i < g.vertex_count(); ++i) g.vertex_index_.emplace(g.vertex_ids_[i], i);
  for (int i = 0; i < g.edge_count(); ++i) g.edge_index_.emplace(g.edge_ids_[i], i);

  g.tail_.assign(g.edge_count(), 0);
  g.head_.assign(g.edge_count(), 0);
  for (const auto& e : edges) {
    EdgeIndex i = g.edge_index_.at(e.id);
    g.tail_[i] = g.vertex_index_.at(e.tail);
    g.head_[i] = g.vertex_index_.at(e.head);
  }
  g.incident_.assign(g.vertex_count(), {});
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    g.incident_[g.tail_[e]].push_back(e);
    g.incident_[g.head_[e]].push_back(e);
  }
  g.base_ = g.edge_index_.at(base_edge);

  if (!is_connected_without(g, std::vector<bool>(g.edge_count(), false),
                            std::vector<bool>(g.vertex_count(), false)))
    fail(ErrorKind::Disconnected, "graph is not connected");
  return g;
}

VertexIndex Multigraph::vertex(std::string_view id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) fail(ErrorKind::UnknownVertex, "no vertex '" + std::string(id) + "'");
  return it->second;
}

EdgeIndex Multigraph::edge(std::string_view id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) fail(ErrorKind::UnknownEdge, "no edge '" + std::string(id) + "'");
  return it->second;
}

bool Multigraph::has_vertex(std::string_view id) const { return vertex_index_.find(id) != vertex_index_.end(); }
bool Multigraph::has_edge(std::string_view id) const { return edge_index_.find(id) != edge_index_.end(); }

std::vector<EdgeSpec> Multigraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edge_count());
  for (EdgeIndex e = 0; e < edge_count(); ++e) out.push_back({edge_ids_[e], vertex_ids_[tail_[e]], vertex_ids_[head_[e]]});
  return out;
}

Multigraph Multigraph::with_base(EdgeIndex e) const {
  Multigraph g = *this;
  g.base_ = e;
  return g;
}

bool Multigraph::operator==(const Multigraph& other) const {
  return vertex_ids_ == other.vertex_ids_ && edge_ids_ == other.edge_ids_ && tail_ == other.tail_ &&
         head_ == other.head_ && base_ == other.base_;
}

std::vector<VertexIndex> EdgePath::vertices(const Multigraph& g) const {
  std::vector<VertexIndex> out{start};
  VertexIndex at = start;
  for (EdgeIndex e : edges) {
    at = g.other_end(e, at);
    out.push_back(at);
  }
  return out;
}

VertexIndex EdgePath::finish(const Multigraph& g) const { return vertices(g).back(); }

std::vector<std::int64_t> EdgePath::algebraic(const Multigraph& g) const {
  std::vector<std::int64_t> out(g.edge_count(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) out[edges[i]] += signs[i];
  return out;
}

EdgePath EdgePath::reversed(const Multigraph& g) const {
  EdgePath r;
  r.start = finish(g);
  r.edges.assign(edges.rbegin(), edges.rend());
  for (auto it = signs.rbegin(); it != signs.rend(); ++it) r.signs.push_back(-*it);
  return r;
}

bool is_simple_cycle(const Multigraph& g, const EdgePath& p) {
  if (p.edges.empty() || p.edges.size() != p.signs.size()) return false;
  VertexIndex at = p.start;
  std::set<VertexIndex> seen;
  std::set<EdgeIndex> used;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    EdgeIndex e = p.edges[i];
    VertexIndex from = p.signs[i] > 0 ? g.tail(e) : g.head(e);
    if (from != at || !used.insert(e).second || !seen.insert(at).second) return false;
    at = g.other_end(e, at);
  }
  return at == p.start;
}

int genus(const Multigraph& g) { return g.edge_count() - g.vertex_count() + 1; }

bool is_connected_without(const Multigraph& g, const std::vector<bool>& removed_edges,
                          const std::vector<bool>& removed_vertices) {
  VertexIndex start = -1;
  int alive = 0;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (removed_vertices[v]) continue;
    ++alive;
    if (start < 0) start = v;
  }
  if (alive <= 1) return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexIndex> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    VertexIndex v = stack.back();
    stack.pop_back();
    for (EdgeIndex e : g.incident(v)) {
      if (removed_edges[e]) continue;
      VertexIndex w = g.other_end(e, v);
      if (removed_vertices[w] || seen[w]) continue;
      seen[w] = true;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == alive;
}

namespace {

int max_edge_disjoint_paths(const Multigraph& g, VertexIndex s, VertexIndex t) {
  detail::MaxFlow f(g.vertex_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    f.add_arc(g.tail(e), g.head(e), 1);
    f.add_arc(g.head(e), g.tail(e), 1);
  }
  return f.run(s, t);
}

}  // namespace

bool is_two_connected(const Multigraph& g) {
  std::vector<bool> no_edges(g.edge_count(), false);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    std::vector<bool> removed(g.vertex_count(), false);
    removed[v] = true;
    if (!is_connected_without(g, no_edges, removed)) return false;
  }
  return true;
}

ConnectivityProfile connectivity_profile(const Multigraph& g) {
  ConnectivityProfile p;
  p.two_connected = is_two_connected(g);
  int best = g.edge_count();
  // Some minimum cut separates vertex 0 from another vertex.
  for (VertexIndex t = 1; t < g.vertex_count(); ++t) best = std::min(best, max_edge_disjoint_paths(g, 0, t));
  p.edge_connectivity = g.vertex_count() > 1 ? best : 0;
  return p;
}

bool is_two_edge_connected(const Multigraph& g) {
  std::vector<bool> no_vertices(g.vertex_count(), false);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    std::vector<bool> removed(g.edge_count(), false);
    removed[e] = true;
    if (!is_connected_without(g, removed, no_vertices)) return false;
  }
  return true;
}

std::vector<std::vector<EdgeIndex>> series_classes(const Multigraph& g) {
  if (!is_two_edge_connected(g)) fail(ErrorKind::NotTwoEdgeConnected, "series classes need a 2-edge-connected graph");
  const int m = g.edge_count();
  std::vector<int> block(m, -1);
  std::vector<std::vector<EdgeIndex>> out;
  std::vector<bool> no_vertices(g.vertex_count(), false);
  for (EdgeIndex e = 0; e < m; ++e) {
    if (block[e] >= 0) continue;
    block[e] = static_cast<int>(out.size());
    out.push_back({e});
    for (EdgeIndex l = e + 1; l < m; ++l) {
      if (block[l] >= 0) continue;
      std::vector<bool> removed(m, false);
      removed[e] = removed[l] = true;
      if (!is_connected_without(g, removed, no_vertices)) {
        block[l] = block[e];
        out.back().push_back(l);
      }
    }
  }
  return out;
}

std::vector<EdgeIndex> series_class_of(const Multigraph& g, EdgeIndex e) {
  for (auto& b : series_classes(g))
    if (std::find(b.begin(), b.end(), e) != b.end()) return b;
  fail(ErrorKind::Internal, "edge missing from series partition");
}

EdgePath cycle_through_edges(const Multigraph& g, EdgeIndex a, EdgeIndex b, std::mt19937_64* shuffle) {
  if (a == b) fail(ErrorKind::NoCommonCycle, "cycle_through_edges needs two distinct edges");
  const int n = g.vertex_count();
  // Split every vertex into in (2v) and out (2v+1) with capacity one, so flow
  // paths are vertex-disjoint.
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  detail::MaxFlow f(2 * n + 2);
  for (VertexIndex v = 0; v < n; ++v) f.add_arc(2 * v, 2 * v + 1, 1);

  std::vector<EdgeIndex> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  if (shuffle) std::shuffle(order.begin(), order.end(), *shuffle);
  std::vector<std::pair<int, EdgeIndex>> edge_arcs;
  for (EdgeIndex e : order) {
    if (e == a || e == b) continue;
    edge_arcs.push_back({f.add_arc(2 * g.tail(e) + 1, 2 * g.head(e), 1), e});
    edge_arcs.push_back({f.add_arc(2 * g.head(e) + 1, 2 * g.tail(e), 1), e});
  }
  const VertexIndex a_ends[2] = {g.tail(a), g.head(a)};
  const VertexIndex b_ends[2] = {g.head(b), g.tail(b)};
  for (VertexIndex v : a_ends) f.add_arc(source, 2 * v, 1);
  for (VertexIndex v : b_ends) f.add_arc(2 * v + 1, sink, 1);
  if (f.run(source, sink, 2) < 2)
    fail(ErrorKind::NoCommonCycle, "no simple cycle through '" + g.edge_id(a) + "' and '" + g.edge_id(b) + "'");

  std::vector<EdgeIndex> arc_to_edge(f.arc_count(), -1);
  for (auto [arc, e] : edge_arcs) arc_to_edge[arc] = e;

  // Walk one unit of flow from the in-node of `from` until it leaves to the sink.
  auto walk = [&](VertexIndex from) {
    EdgePath p;
    p.start = from;
    VertexIndex at = from;
    for (int guard = 0; guard <= n; ++guard) {
      int next_arc = -1;
      bool to_sink = false;
      for (int arc : f.out_arcs(2 * at + 1)) {
        if (!f.is_forward(arc) || f.flow(arc) <= 0) continue;
        if (f.head(arc) == sink) {
          to_sink = true;
        } else {
          next_arc = arc;
        }
      }
      if (to_sink) return p;
      if (next_arc < 0) fail(ErrorKind::Internal, "broken flow path");
      EdgeIndex e = arc_to_edge[next_arc];
      p.edges.push_back(e);
      p.signs.push_back(g.tail(e) == at ? 1 : -1);
      at = g.other_end(e, at);
    }
    fail(ErrorKind::Internal, "flow path does not terminate");
  };

  EdgePath p1 = walk(g.tail(a));  // starts at o(a)
  EdgePath p2 = walk(g.head(a));  // starts at t(a)
  // From t(a) cross a backwards to o(a), follow p1 to an end of b, cross b,
  // then return along p2 reversed to t(a).
  EdgePath c;
  c.start = g.head(a);
  c.edges.push_back(a);
  c.signs.push_back(-1);
  c.edges.insert(c.edges.end(), p1.edges.begin(), p1.edges.end());
  c.signs.insert(c.signs.end(), p1.signs.begin(), p1.signs.end());
  VertexIndex at = p1.finish(g);
  c.edges.push_back(b);
  c.signs.push_back(g.tail(b) == at ? 1 : -1);
  EdgePath back = p2.reversed(g);
  c.edges.insert(c.edges.end(), back.edges.begin(), back.edges.end());
  c.signs.insert(c.signs.end(), back.signs.begin(), back.signs.end());
  // Present the cycle crossing a forwards.
  c = c.reversed(g);
  if (!is_simple_cycle(g, c)) fail(ErrorKind::Internal, "spliced cycle is not simple");
  return c;
}

SpanningTree spanning_tree(const Multigraph& g, VertexIndex root) {
  const int n = g.vertex_count();
  std::vector<int> parent_uf(n);
  std::iota(parent_uf.begin(), parent_uf.end(), 0);
  auto find = [&](int x) {
    while (parent_uf[x] != x) x = parent_uf[x] = parent_uf[parent_uf[x]];
    return x;
  };
  SpanningTree t;
  t.root = root;
  t.in_tree.assign(g.edge_count(), false);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    int x = find(g.tail(e));
    int y = find(g.head(e));
    if (x == y) continue;
    parent_uf[x] = y;
    t.in_tree[e] = true;
  }
  t.parent_edge.assign(n, -1);
  t.parent.assign(n, -1);
  t.depth.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::queue<VertexIndex> q;
  q.push(root);
  seen[root] = true;
  while (!q.empty()) {
    VertexIndex v = q.front();
    q.pop();
    t.order.push_back(v);
    for (EdgeIndex e : g.incident(v)) {
      if (!t.in_tree[e]) continue;
      VertexIndex w = g.other_end(e, v);
      if (seen[w]) continue;
      seen[w] = true;
      t.parent[w] = v;
      t.parent_edge[w] = e;
      t.depth[w] = t.depth[v] + 1;
      q.push(w);
    }
  }
  return t;
}

EdgePath tree_path(const Multigraph& g, const SpanningTree& t, VertexIndex from, VertexIndex to) {
  std::vector<EdgeIndex> up_from;
  std::vector<EdgeIndex> up_to;
  VertexIndex x = from;
  VertexIndex y = to;
  while (t.depth[x] > t.depth[y]) {
    up_from.push_back(t.parent_edge[x]);
    x = t.parent[x];
  }
  while (t.depth[y] > t.depth[x]) {
    up_to.push_back(t.parent_edge[y]);
    y = t.parent[y];
  }
  while (x != y) {
    up_from.push_back(t.parent_edge[x]);
    x = t.parent[x];
    up_to.push_back(t.parent_edge[y]);
    y = t.parent[y];
  }
  EdgePath p;
  p.start = from;
  VertexIndex at = from;
  auto step = [&](EdgeIndex e) {
    p.edges.push_back(e);
    p.signs.push_back(g.tail(e) == at ? 1 : -1);
    at = g.other_end(e, at);
  };
  for (EdgeIndex e : up_from) step(e);
  for (auto it = up_to.rbegin(); it != up_to.rend(); ++it) step(*it);
  return p;
}

std::vector<EdgePath> fundamental_cycles(const Multigraph& g) {
  SpanningTree t = spanning_tree(g, 0);
  std::vector<EdgePath> out;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (t.in_tree[e]) continue;
    EdgePath c = tree_path(g, t, g.head(e), g.tail(e));
    c.start = g.tail(e);
    c.edges.insert(c.edges.begin(), e);
    c.signs.insert(c.signs.begin(), 1);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<EdgeIndex> cotree_edges(const Multigraph& g) {
  SpanningTree t = spanning_tree(g, 0);
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (!t.in_tree[e]) out.push_back(e);
  return out;
}

EdgePath shortest_path(const Multigraph& g, VertexIndex from, VertexIndex to) {
  std::vector<EdgeIndex> via(g.vertex_count(), -1);
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<VertexIndex> q;
  q.push(from);
  seen[from] = true;
  while (!q.empty()) {
    VertexIndex v = q.front();
    q.pop();
    // Neighbours in vertex order; parallel edges by edge order.
    std::vector<std::pair<VertexIndex, EdgeIndex>> next;
    for (EdgeIndex e : g.incident(v)) next.push_back({g.other_end(e, v), e});
    std::sort(next.begin(), next.end());
    for (auto [w, e] : next) {
      if (seen[w]) continue;
      seen[w] = true;
      via[w] = e;
      q.push(w);
    }
  }
  std::vector<EdgeIndex> rev;
  for (VertexIndex v = to; v != from; v = g.other_end(via[v], v)) rev.push_back(via[v]);
  EdgePath p;
  p.start = from;
  VertexIndex at = from;
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
    p.edges.push_back(*it);
    p.signs.push_back(g.tail(*it) == at ? 1 : -1);
    at = g.other_end(*it, at);
  }
  return p;
}

namespace {

std::vector<VertexIndex> vertices_of(const Multigraph& g, const std::vector<EdgeIndex>& edges) {
  std::set<VertexIndex> vs;
  for (EdgeIndex e : edges) {
    vs.insert(g.tail(e));
    vs.insert(g.head(e));
  }
  return {vs.begin(), vs.end()};
}

}  // namespace

bool is_arch(const Multigraph& g, const Arch& x) {
  std::vector<int> side(g.edge_count(), 0);
  for (EdgeIndex e : x.edges) side[e] |= 1;
  for (EdgeIndex e : x.complement) side[e] |= 2;
  for (int s : side)
    if (s != 1 && s != 2) return false;
  auto vx = vertices_of(g, x.edges);
  auto vc = vertices_of(g, x.complement);
  if (vx.size() < 3 || vc.size() < 3) return false;
  std::vector<VertexIndex> common;
  std::set_intersection(vx.begin(), vx.end(), vc.begin(), vc.end(), std::back_inserter(common));
  std::vector<VertexIndex> tips{std::min(x.tip_v, x.tip_w), std::max(x.tip_v, x.tip_w)};
  return common == tips;
}

std::vector<Arch> find_arches(const Multigraph& g) {
  if (!is_two_connected(g)) fail(ErrorKind::NotTwoConnected, "arches are only defined here for 2-connected graphs");
  const int n = g.vertex_count();
  std::vector<Arch> out;
  std::vector<bool> no_edges(g.edge_count(), false);
  for (VertexIndex v = 0; v < n; ++v) {
    for (VertexIndex w = v + 1; w < n; ++w) {
      // Components of G - {v, w}.
      std::vector<int> comp(n, -1);
      int k = 0;
      for (VertexIndex s = 0; s < n; ++s) {
        if (s == v || s == w || comp[s] >= 0) continue;
        std::vector<VertexIndex> stack{s};
        comp[s] = k;
        while (!stack.empty()) {
          VertexIndex x = stack.back();
          stack.pop_back();
          for (EdgeIndex e : g.incident(x)) {
            VertexIndex y = g.other_end(e, x);
            if (y == v || y == w || comp[y] >= 0) continue;
            comp[y] = k;
            stack.push_back(y);
          }
        }
        ++k;
      }
      if (k < 2) continue;
      std::vector<EdgeIndex> direct;
      std::vector<int> edge_comp(g.edge_count(), -1);
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        VertexIndex a = g.tail(e);
        VertexIndex b = g.head(e);
        if ((a == v || a == w) && (b == v || b == w)) {
          direct.push_back(e);
        } else {
          edge_comp[e] = comp[(a == v || a == w) ? b : a];
        }
      }
      const int d = static_cast<int>(direct.size());
      if (k > 20 || d > 20) fail(ErrorKind::EnumerationBoundExceeded, "too many arch splits at one separator");
      for (std::uint32_t cm = 1; cm + 1 < (1u << k); ++cm) {
        for (std::uint32_t dm = 0; dm < (1u << d); ++dm) {
          Arch a;
          a.tip_v = v;
          a.tip_w = w;
          for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
            bool in_x;
            if (edge_comp[e] >= 0) {
              in_x = (cm >> edge_comp[e]) & 1u;
            } else {
              auto pos = std::find(direct.begin(), direct.end(), e) - direct.begin();
              in_x = (dm >> pos) & 1u;
            }
            (in_x ? a.edges : a.complement).push_back(e);
          }
          out.push_back(std::move(a));
        }
      }
    }
  }
  return out;
}

Multigraph whitney_graph(const Multigraph& g, const Arch& x) {
  if (std::find(x.edges.begin(), x.edges.end(), g.base_edge()) != x.edges.end())
    fail(ErrorKind::BaseEdgeInArch, "base edge '" + g.edge_id(g.base_edge()) + "' lies in the arch");
  auto specs = g.edge_specs();
  const std::string& v = g.vertex_id(x.tip_v);
  const std::string& w = g.vertex_id(x.tip_w);
  auto swap_tip = [&](std::string& s) {
    if (s == v) {
      s = w;
    } else if (s == w) {
      s = v;
    }
  };
  for (EdgeIndex e : x.edges) {
    swap_tip(specs[e].tail);
    swap_tip(specs[e].head);
  }
  return Multigraph::build(specs, g.edge_id(g.base_edge()));
}

}  // namespace rigidlift
