#include "rigidlift/orientation.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "maxflow.hpp"
#include "rigidlift/error.hpp"

namespace rigidlift {

PartialOrientation PartialOrientation::reference(const Multigraph& g) {
  return PartialOrientation(std::vector<EdgeState>(g.edge_count(), EdgeState::Forward));
}

int PartialOrientation::sign(EdgeIndex e) const {
  switch (s_[e]) {
    case EdgeState::Forward: return 1;
    case EdgeState::Backward: return -1;
    case EdgeState::Unoriented: return 0;
    case EdgeState::Bioriented: break;
  }
  fail(ErrorKind::BiorientedPresent, "bioriented edge has no sign");
}

VertexIndex PartialOrientation::head(const Multigraph& g, EdgeIndex e) const {
  return s_[e] == EdgeState::Backward ? g.tail(e) : g.head(e);
}

VertexIndex PartialOrientation::tail(const Multigraph& g, EdgeIndex e) const {
  return s_[e] == EdgeState::Backward ? g.head(e) : g.tail(e);
}

void PartialOrientation::reverse(EdgeIndex e) {
  if (s_[e] == EdgeState::Forward) {
    s_[e] = EdgeState::Backward;
  } else if (s_[e] == EdgeState::Backward) {
    s_[e] = EdgeState::Forward;
  }
}

bool PartialOrientation::is_full() const {
  return std::all_of(s_.begin(), s_.end(),
                     [](EdgeState s) { return s == EdgeState::Forward || s == EdgeState::Backward; });
}

bool PartialOrientation::has_bioriented() const {
  return std::find(s_.begin(), s_.end(), EdgeState::Bioriented) != s_.end();
}

std::vector<EdgeIndex> PartialOrientation::edges_in_state(EdgeState st) const {
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < static_cast<EdgeIndex>(s_.size()); ++e)
    if (s_[e] == st) out.push_back(e);
  return out;
}

Divisor chern_class(const Multigraph& g, const PartialOrientation& u) {
  if (u.has_bioriented()) fail(ErrorKind::BiorientedPresent, "Chern class of a bioriented orientation");
  return extended_chern_class(g, u);
}

Divisor extended_chern_class(const Multigraph& g, const PartialOrientation& u) {
  Divisor d(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) d[v] = -1;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (u.is_oriented(e)) {
      ++d[u.head(g, e)];
    } else if (u[e] == EdgeState::Bioriented) {
      ++d[g.tail(e)];
      ++d[g.head(e)];
    }
  }
  return d;
}

OrientationMove OrientationMove::cycle_reversal(std::vector<EdgeIndex> edges) {
  OrientationMove m;
  m.kind = MoveKind::CycleReversal;
  m.edges = std::move(edges);
  return m;
}

OrientationMove OrientationMove::cut_reversal(std::vector<EdgeIndex> edges) {
  OrientationMove m;
  m.kind = MoveKind::CutReversal;
  m.edges = std::move(edges);
  return m;
}

OrientationMove OrientationMove::edge_slide(EdgeIndex oriented, EdgeIndex unoriented, VertexIndex pivot) {
  OrientationMove m;
  m.kind = MoveKind::EdgeSlide;
  m.oriented = oriented;
  m.unoriented = unoriented;
  m.pivot = pivot;
  return m;
}

namespace {

void require_oriented_distinct(const PartialOrientation& u, const std::vector<EdgeIndex>& edges, const char* what) {
  if (edges.empty()) fail(ErrorKind::InvalidMove, std::string(what) + " is empty");
  std::set<EdgeIndex> seen;
  for (EdgeIndex e : edges) {
    if (e < 0 || e >= static_cast<EdgeIndex>(u.size()) || !seen.insert(e).second)
      fail(ErrorKind::InvalidMove, std::string(what) + " lists an edge twice or out of range");
    if (!u.is_oriented(e)) fail(ErrorKind::InvalidMove, std::string(what) + " contains an edge that is not oriented");
  }
}

bool is_directed_cycle(const Multigraph& g, const PartialOrientation& u, const std::vector<EdgeIndex>& edges) {
  std::map<VertexIndex, int> in;
  std::map<VertexIndex, EdgeIndex> out_edge;
  for (EdgeIndex e : edges) {
    ++in[u.head(g, e)];
    if (out_edge.count(u.tail(g, e))) return false;
    out_edge[u.tail(g, e)] = e;
  }
  for (auto [v, k] : in)
    if (k != 1 || !out_edge.count(v)) return false;
  if (out_edge.size() != in.size()) return false;
  // Single closed walk covering every edge.
  VertexIndex start = out_edge.begin()->first;
  VertexIndex at = start;
  std::size_t steps = 0;
  do {
    at = u.head(g, out_edge.at(at));
    ++steps;
  } while (at != start && steps <= edges.size());
  return at == start && steps == edges.size();
}

// Side of a consistently oriented cut: true for vertices on the tail side.
std::optional<std::vector<bool>> directed_cut_side(const Multigraph& g, const PartialOrientation& u,
                                                   const std::vector<EdgeIndex>& edges) {
  std::vector<bool> in_cut(g.edge_count(), false);
  for (EdgeIndex e : edges) in_cut[e] = true;
  std::vector<int> comp(g.vertex_count(), -1);
  int k = 0;
  for (VertexIndex s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<VertexIndex> stack{s};
    comp[s] = k;
    while (!stack.empty()) {
      VertexIndex v = stack.back();
      stack.pop_back();
      for (EdgeIndex e : g.incident(v)) {
        VertexIndex w = g.other_end(e, v);
        if (in_cut[e] || comp[w] >= 0) continue;
        comp[w] = k;
        stack.push_back(w);
      }
    }
    ++k;
  }
  std::vector<int> role(k, 0);  // 1 tail side, 2 head side
  for (EdgeIndex e : edges) {
    role[comp[u.tail(g, e)]] |= 1;
    role[comp[u.head(g, e)]] |= 2;
  }
  std::vector<bool> side(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (role[comp[v]] != 1 && role[comp[v]] != 2) return std::nullopt;
    side[v] = role[comp[v]] == 1;
  }
  return side;
}

}  // namespace

PartialOrientation apply_move(const Multigraph& g, const PartialOrientation& u, const OrientationMove& m) {
  if (u.has_bioriented()) fail(ErrorKind::BiorientedPresent, "moves act on orientations without bioriented edges");
  PartialOrientation out = u;
  switch (m.kind) {
    case MoveKind::CycleReversal:
      require_oriented_distinct(u, m.edges, "cycle");
      if (!is_directed_cycle(g, u, m.edges)) fail(ErrorKind::InvalidMove, "edges do not form a directed cycle");
      for (EdgeIndex e : m.edges) out.reverse(e);
      return out;
    case MoveKind::CutReversal:
      require_oriented_distinct(u, m.edges, "cut");
      if (!directed_cut_side(g, u, m.edges)) fail(ErrorKind::InvalidMove, "edges do not form a directed cut");
      for (EdgeIndex e : m.edges) out.reverse(e);
      return out;
    case MoveKind::EdgeSlide: {
      const EdgeIndex l = m.oriented;
      const EdgeIndex r = m.unoriented;
      const int edge_count = g.edge_count();
      if (l < 0 || r < 0 || l >= edge_count || r >= edge_count || l == r || m.pivot < 0 ||
          m.pivot >= g.vertex_count())
        fail(ErrorKind::InvalidMove, "slide needs two distinct edges and a vertex");
      if (!u.is_oriented(l) || u.head(g, l) != m.pivot)
        fail(ErrorKind::InvalidMove, "slide edge does not point at the pivot");
      if (u[r] != EdgeState::Unoriented || (g.tail(r) != m.pivot && g.head(r) != m.pivot))
        fail(ErrorKind::InvalidMove, "slide target is not an unoriented edge at the pivot");
      out.set(l, EdgeState::Unoriented);
      out.set(r, g.head(r) == m.pivot ? EdgeState::Forward : EdgeState::Backward);
      return out;
    }
  }
  fail(ErrorKind::InvalidMove, "unknown move");
}

namespace {

std::vector<bool> reach(const Multigraph& g, const PartialOrientation& u, VertexIndex from) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexIndex> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    VertexIndex v = stack.back();
    stack.pop_back();
    for (EdgeIndex e : g.incident(v)) {
      if (!u.is_oriented(e) || u.tail(g, e) != v) continue;
      VertexIndex w = u.head(g, e);
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

// Oriented path from p to q by BFS over oriented edges.
std::vector<EdgeIndex> oriented_path(const Multigraph& g, const PartialOrientation& u, VertexIndex p, VertexIndex q) {
  std::vector<EdgeIndex> via(g.vertex_count(), -1);
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<VertexIndex> bfs;
  bfs.push(p);
  seen[p] = true;
  while (!bfs.empty()) {
    VertexIndex v = bfs.front();
    bfs.pop();
    for (EdgeIndex e : g.incident(v)) {
      if (!u.is_oriented(e) || u.tail(g, e) != v) continue;
      VertexIndex w = u.head(g, e);
      if (seen[w]) continue;
      seen[w] = true;
      via[w] = e;
      bfs.push(w);
    }
  }
  std::vector<EdgeIndex> path;
  for (VertexIndex v = q; v != p; v = u.tail(g, via[v])) path.push_back(via[v]);
  return path;
}

}  // namespace

PartialOrientation torsor_act(const Multigraph& g, std::span<const std::pair<VertexIndex, VertexIndex>> moves,
                              const PartialOrientation& u) {
  if (!u.is_full()) fail(ErrorKind::NotFullyOriented, "torsor action needs a full orientation");
  PartialOrientation cur = u;
  const int cap = g.vertex_count() * g.edge_count() + 1;
  for (auto [p, q] : moves) {
    if (p == q) continue;
    int rounds = 0;
    for (;;) {
      std::vector<bool> r = reach(g, cur, p);
      if (r[q]) break;
      if (++rounds > cap) fail(ErrorKind::Internal, "torsor action exceeded its iteration cap");
      // Nothing leaves the reach of p, so every boundary edge points into it.
      std::vector<EdgeIndex> cut;
      for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        if (r[g.tail(e)] != r[g.head(e)]) cut.push_back(e);
      cur = apply_move(g, cur, OrientationMove::cut_reversal(cut));
    }
    // Reversing a p→q path moves one head from q to p.
    for (EdgeIndex e : oriented_path(g, cur, p, q)) cur.reverse(e);
  }
  return cur;
}

PartialOrientation torsor_act(const Multigraph& g, const Divisor& d, const PartialOrientation& u) {
  if (d.degree() != 0) fail(ErrorKind::WrongDegree, "torsor action needs a degree-0 divisor");
  std::vector<VertexIndex> plus;
  std::vector<VertexIndex> minus;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    for (std::int64_t i = 0; i < d[v]; ++i) plus.push_back(v);
    for (std::int64_t i = 0; i < -d[v]; ++i) minus.push_back(v);
  }
  std::vector<std::pair<VertexIndex, VertexIndex>> moves;
  for (std::size_t i = 0; i < plus.size(); ++i) moves.push_back({plus[i], minus[i]});
  return torsor_act(g, std::span<const std::pair<VertexIndex, VertexIndex>>(moves), u);
}

namespace {

// Orients a subset of the allowed edges so that each vertex v receives exactly
// indegree[v] heads. With `use_all`, every allowed edge must be oriented.
std::optional<PartialOrientation> orient_with_indegrees(const Multigraph& g, const std::vector<bool>& allowed,
                                                        const Divisor& indegree, bool use_all) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const int source = n + m;
  const int sink = n + m + 1;
  detail::MaxFlow f(n + m + 2);
  std::vector<std::pair<int, int>> arcs(m, {-1, -1});
  int supply = 0;
  for (EdgeIndex e = 0; e < m; ++e) {
    if (!allowed[e]) continue;
    ++supply;
    f.add_arc(source, n + e, 1);
    arcs[e] = {f.add_arc(n + e, g.head(e), 1), f.add_arc(n + e, g.tail(e), 1)};
  }
  std::int64_t demand = 0;
  for (VertexIndex v = 0; v < n; ++v) {
    if (indegree[v] < 0) return std::nullopt;
    demand += indegree[v];
    f.add_arc(v, sink, static_cast<int>(indegree[v]));
  }
  if (demand > supply || (use_all && demand != supply)) return std::nullopt;
  if (f.run(source, sink) != demand) return std::nullopt;
  PartialOrientation u(std::vector<EdgeState>(m, EdgeState::Unoriented));
  for (EdgeIndex e = 0; e < m; ++e) {
    if (!allowed[e]) continue;
    if (f.flow(arcs[e].first) > 0) {
      u.set(e, EdgeState::Forward);
    } else if (f.flow(arcs[e].second) > 0) {
      u.set(e, EdgeState::Backward);
    }
  }
  return u;
}

}  // namespace

LiftOutcome lift_divisor_to_orientation(const Multigraph& g, const Divisor& d, const std::vector<EdgeIndex>& unoriented,
                                        std::size_t bound) {
  std::vector<bool> allowed(g.edge_count(), true);
  for (EdgeIndex e : unoriented) allowed[e] = false;
  const std::int64_t oriented = std::count(allowed.begin(), allowed.end(), true);
  if (d.degree() != oriented - g.vertex_count())
    fail(ErrorKind::DegreeMismatch, "divisor degree " + std::to_string(d.degree()) + " does not match " +
                                        std::to_string(oriented - g.vertex_count()));
  LiftOutcome out;
  out.shifted = d + Divisor::all_ones(g);
  out.reduced = q_reduce(g, out.shifted, g.base_vertex());
  if (out.reduced[g.base_vertex()] < 0) {
    out.status = LiftOutcome::Status::NotPartiallyOrientable;
    return out;
  }

  if (unoriented.empty()) {
    PartialOrientation ref = PartialOrientation::reference(g);
    Divisor delta = q_reduce(g, d - chern_class(g, ref), g.base_vertex());
    out.orientation = torsor_act(g, delta, ref);
  } else {
    // Orientations of G − X are exactly the indegree vectors admitting a flow;
    // search the bounded linear system of d + Σv for one.
    std::vector<std::int64_t> caps(g.vertex_count(), 0);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      if (!allowed[e]) continue;
      ++caps[g.tail(e)];
      ++caps[g.head(e)];
    }
    for (const Divisor& indeg : bounded_linear_system(g, out.shifted, caps, bound)) {
      if (auto u = orient_with_indegrees(g, allowed, indeg, true)) {
        out.orientation = std::move(u);
        break;
      }
    }
    if (!out.orientation) {
      out.status = LiftOutcome::Status::UnorientedSetInfeasible;
      return out;
    }
  }
  if (!linearly_equivalent(g, chern_class(g, *out.orientation), d))
    fail(ErrorKind::Internal, "lifted orientation has the wrong Chern class");
  out.status = LiftOutcome::Status::Lifted;
  return out;
}

EffectivenessCertificate effectiveness_certificate(const Multigraph& g, const Divisor& q,
                                                   std::optional<VertexIndex> root, std::size_t bound) {
  if (q.degree() > genus(g) - 1) fail(ErrorKind::DegreeTooHigh, "certificates need degree at most g-1");
  EffectivenessCertificate cert;
  if (is_effective_class(g, q)) {
    // Sourceless W with c(W) = B′ means indegree B′ + 1 at every vertex.
    std::vector<std::int64_t> caps(g.vertex_count());
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) caps[v] = g.degree(v) - 1;
    std::vector<bool> allowed(g.edge_count(), true);
    bool found = false;
    for (const Divisor& b : bounded_linear_system(g, q, caps, bound)) {
      if (auto w = orient_with_indegrees(g, allowed, b + Divisor::all_ones(g), false)) {
        cert = SourcelessWitness{std::move(*w), b};
        found = true;
        break;
      }
    }
    if (!found) fail(ErrorKind::Internal, "no sourceless orientation found for an effective class");
  } else {
    // Burning the reduced form orients each edge along the fire; a vertex
    // burns only once its burnt edges outnumber its chips.
    VertexIndex r = root.value_or(g.base_vertex());
    Divisor a = q_reduce(g, q, r);
    auto order = burning_order(g, a, r);
    if (static_cast<int>(order.size()) != g.vertex_count()) fail(ErrorKind::Internal, "reduced divisor did not burn");
    cert = AcyclicWitness{orientation_from_order(g, order), a};
  }
  if (!verify_certificate(g, q, cert)) fail(ErrorKind::Internal, "effectiveness certificate failed verification");
  return cert;
}

bool verify_certificate(const Multigraph& g, const Divisor& q, const EffectivenessCertificate& cert) {
  if (const auto* s = std::get_if<SourcelessWitness>(&cert)) {
    if (s->orientation.has_bioriented()) return false;
    return is_sourceless(g, s->orientation) && s->effective.is_effective() &&
           chern_class(g, s->orientation) == s->effective && linearly_equivalent(g, s->effective, q);
  }
  const auto& a = std::get<AcyclicWitness>(cert);
  if (a.orientation.has_bioriented() || !is_acyclic(g, a.orientation)) return false;
  if (!linearly_equivalent(g, a.dominated, q)) return false;
  return (chern_class(g, a.orientation) - a.dominated).is_effective();
}

NonspecialExtension extend_to_nonspecial(const Multigraph& g, const Divisor& q, std::optional<VertexIndex> root) {
  if (q.degree() > genus(g) - 1) fail(ErrorKind::DegreeTooHigh, "extension needs degree at most g-1");
  if (is_effective_class(g, q)) fail(ErrorKind::QIsEffective, "divisor is linearly equivalent to an effective one");
  auto cert = std::get<AcyclicWitness>(effectiveness_certificate(g, q, root));
  // The witness is already a full acyclic orientation, so it is its own
  // total-order extension.
  NonspecialExtension out;
  out.t = chern_class(g, cert.orientation) - cert.dominated;
  out.dominated = cert.dominated;
  out.acyclic = cert.orientation;
  if (!out.t.is_effective() || is_effective_class(g, q + out.t))
    fail(ErrorKind::Internal, "nonspecial extension failed verification");
  return out;
}

PartialOrientation dual_orientation(const PartialOrientation& u) {
  PartialOrientation out = u;
  for (EdgeIndex e = 0; e < static_cast<EdgeIndex>(u.size()); ++e) {
    switch (u[e]) {
      case EdgeState::Forward: out.set(e, EdgeState::Backward); break;
      case EdgeState::Backward: out.set(e, EdgeState::Forward); break;
      case EdgeState::Unoriented: out.set(e, EdgeState::Bioriented); break;
      case EdgeState::Bioriented: out.set(e, EdgeState::Unoriented); break;
    }
  }
  return out;
}

bool is_sourceless(const Multigraph& g, const PartialOrientation& u) {
  std::vector<bool> has_in(g.vertex_count(), false);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (u.is_oriented(e)) {
      has_in[u.head(g, e)] = true;
    } else if (u[e] == EdgeState::Bioriented) {
      has_in[g.tail(e)] = has_in[g.head(e)] = true;
    }
  }
  return std::all_of(has_in.begin(), has_in.end(), [](bool b) { return b; });
}

bool is_acyclic(const Multigraph& g, const PartialOrientation& u) {
  // Kahn's algorithm; a bioriented edge is a directed 2-cycle.
  std::vector<int> indeg(g.vertex_count(), 0);
  std::vector<std::vector<VertexIndex>> out(g.vertex_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (u[e] == EdgeState::Bioriented) return false;
    if (!u.is_oriented(e)) continue;
    out[u.tail(g, e)].push_back(u.head(g, e));
    ++indeg[u.head(g, e)];
  }
  std::vector<VertexIndex> ready;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  int removed = 0;
  while (!ready.empty()) {
    VertexIndex v = ready.back();
    ready.pop_back();
    ++removed;
    for (VertexIndex w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return removed == g.vertex_count();
}

PartialOrientation orientation_from_order(const Multigraph& g, const std::vector<VertexIndex>& order) {
  std::vector<int> rank(g.vertex_count(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  PartialOrientation u(std::vector<EdgeState>(g.edge_count(), EdgeState::Forward));
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (rank[g.tail(e)] > rank[g.head(e)]) u.set(e, EdgeState::Backward);
  return u;
}

}  // namespace rigidlift
