#include "rigidlift/divisor.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

#include "rigidlift/error.hpp"

namespace rigidlift {

Divisor Divisor::point(const Multigraph& g, VertexIndex v, std::int64_t k) {
  Divisor d(g.vertex_count());
  d[v] = k;
  return d;
}

Divisor Divisor::all_ones(const Multigraph& g) {
  return Divisor(std::vector<std::int64_t>(g.vertex_count(), 1));
}

std::int64_t Divisor::degree() const { return std::accumulate(c_.begin(), c_.end(), std::int64_t{0}); }

bool Divisor::is_effective() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x >= 0; });
}

bool Divisor::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x == 0; });
}

Divisor& Divisor::operator+=(const Divisor& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Divisor operator-(Divisor a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

Divisor operator*(std::int64_t k, Divisor a) {
  for (auto& x : a.c_) x *= k;
  return a;
}

Divisor laplacian_fire(const Multigraph& g, const std::vector<std::int64_t>& script) {
  Divisor d(g.vertex_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    VertexIndex a = g.tail(e);
    VertexIndex b = g.head(e);
    // Net chips moving from a to b along e.
    std::int64_t net = script[a] - script[b];
    d[a] -= net;
    d[b] += net;
  }
  return d;
}

namespace {

// Fire the vertex set `set` k times.
void fire_set(const Multigraph& g, Divisor& d, const std::vector<bool>& set, std::int64_t k) {
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    VertexIndex a = g.tail(e);
    VertexIndex b = g.head(e);
    if (set[a] == set[b]) continue;
    VertexIndex from = set[a] ? a : b;
    VertexIndex to = set[a] ? b : a;
    d[from] -= k;
    d[to] += k;
  }
}

// Dhar's burning test from q, one vertex at a time in index order. Returns
// the unburnt set; `order` receives the burning order when given.
std::vector<bool> burn(const Multigraph& g, const Divisor& d, VertexIndex q, std::vector<VertexIndex>* order) {
  const int n = g.vertex_count();
  std::vector<bool> burnt(n, false);
  std::vector<std::int64_t> hits(n, 0);
  burnt[q] = true;
  if (order) order->assign(1, q);
  for (EdgeIndex e : g.incident(q)) ++hits[g.other_end(e, q)];
  bool progress = true;
  while (progress) {
    progress = false;
    for (VertexIndex v = 0; v < n; ++v) {
      if (burnt[v] || hits[v] <= d[v]) continue;
      burnt[v] = true;
      if (order) order->push_back(v);
      for (EdgeIndex e : g.incident(v)) ++hits[g.other_end(e, v)];
      progress = true;
      break;
    }
  }
  std::vector<bool> unburnt(n);
  for (VertexIndex v = 0; v < n; ++v) unburnt[v] = !burnt[v];
  return unburnt;
}

}  // namespace

Divisor q_reduce(const Multigraph& g, const Divisor& input, VertexIndex q) {
  const int n = g.vertex_count();
  Divisor d = input;

  // Make every vertex other than q nonnegative, working inwards by BFS
  // distance. Firing the ball of radius k-1 feeds each vertex at distance k
  // and only costs vertices at distance k-1.
  std::vector<int> dist(n, -1);
  std::queue<VertexIndex> bfs;
  dist[q] = 0;
  bfs.push(q);
  int far = 0;
  while (!bfs.empty()) {
    VertexIndex v = bfs.front();
    bfs.pop();
    far = std::max(far, dist[v]);
    for (EdgeIndex e : g.incident(v)) {
      VertexIndex w = g.other_end(e, v);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        bfs.push(w);
      }
    }
  }
  for (int k = far; k >= 1; --k) {
    std::vector<bool> ball(n);
    std::int64_t need = 0;
    for (VertexIndex v = 0; v < n; ++v) {
      ball[v] = dist[v] < k;
      if (dist[v] != k || d[v] >= 0) continue;
      // Chips v gains per firing of the ball: its edges towards distance k-1.
      std::int64_t gain = 0;
      for (EdgeIndex e : g.incident(v)) gain += dist[g.other_end(e, v)] == k - 1;
      need = std::max(need, (-d[v] + gain - 1) / gain);
    }
    if (need > 0) fire_set(g, d, ball, need);
  }

  // Dhar: fire the unburnt set as many times as stays legal, until all burns.
  for (;;) {
    std::vector<bool> unburnt = burn(g, d, q, nullptr);
    if (std::none_of(unburnt.begin(), unburnt.end(), [](bool b) { return b; })) break;
    std::int64_t times = std::numeric_limits<std::int64_t>::max();
    for (VertexIndex v = 0; v < n; ++v) {
      if (!unburnt[v]) continue;
      std::int64_t out = 0;
      for (EdgeIndex e : g.incident(v)) out += !unburnt[g.other_end(e, v)];
      if (out > 0) times = std::min(times, d[v] / out);
    }
    if (times < 1 || times == std::numeric_limits<std::int64_t>::max())
      fail(ErrorKind::Internal, "Dhar reduction made no progress");
    fire_set(g, d, unburnt, times);
  }
  return d;
}

std::vector<VertexIndex> burning_order(const Multigraph& g, const Divisor& d, VertexIndex q) {
  std::vector<VertexIndex> order;
  burn(g, d, q, &order);
  return order;
}

DivisorClass class_of(const Multigraph& g, const Divisor& d) { return DivisorClass(q_reduce(g, d, g.base_vertex())); }

bool linearly_equivalent(const Multigraph& g, const Divisor& a, const Divisor& b) {
  if (a.degree() != b.degree()) return false;
  return q_reduce(g, a - b, g.base_vertex()).is_zero();
}

bool is_effective_class(const Multigraph& g, const Divisor& d) {
  VertexIndex q = g.base_vertex();
  return q_reduce(g, d, q)[q] >= 0;
}

Divisor canonical_divisor(const Multigraph& g) {
  Divisor k(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) k[v] = g.degree(v) - 2;
  return k;
}

DivisorClass abel_jacobi(const Multigraph& g, EdgeIndex base_edge, std::span<const VertexIndex> points) {
  Divisor d(g.vertex_count());
  for (VertexIndex v : points) ++d[v];
  d[g.head(base_edge)] -= static_cast<std::int64_t>(points.size());
  return class_of(g, d);
}

std::vector<DivisorClass> enumerate_picard(const Multigraph& g, std::int64_t degree, std::size_t bound) {
  const VertexIndex q = g.base_vertex();
  std::set<DivisorClass> seen;
  std::deque<DivisorClass> todo;
  DivisorClass start = class_of(g, Divisor::point(g, q, degree));
  seen.insert(start);
  todo.push_back(start);
  while (!todo.empty()) {
    DivisorClass c = todo.front();
    todo.pop_front();
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (v == q) continue;
      Divisor next = c.representative();
      ++next[v];
      --next[q];
      DivisorClass nc = class_of(g, next);
      if (!seen.insert(nc).second) continue;
      if (seen.size() > bound)
        fail(ErrorKind::EnumerationBoundExceeded, "more than " + std::to_string(bound) + " divisor classes");
      todo.push_back(nc);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<DivisorClass> theta_divisor(const Multigraph& g, EdgeIndex base_edge, std::size_t bound) {
  const int gen = genus(g);
  if (gen < 1) fail(ErrorKind::GenusTooSmall, "theta divisor needs genus at least 1");
  Divisor shift = Divisor::point(g, g.head(base_edge), gen - 1);
  std::vector<DivisorClass> out;
  for (const auto& c : enumerate_picard(g, 0, bound))
    if (is_effective_class(g, c.representative() + shift)) out.push_back(c);
  return out;
}

Speciality classify_gminus1(const Multigraph& g, const Divisor& d) {
  if (d.degree() != genus(g) - 1)
    fail(ErrorKind::WrongDegree, "expected degree " + std::to_string(genus(g) - 1) + ", got " + std::to_string(d.degree()));
  return is_effective_class(g, d) ? Speciality::Special : Speciality::Nonspecial;
}

Divisor boundary(const Multigraph& g, const std::vector<std::int64_t>& chain) {
  Divisor d(g.vertex_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    d[g.head(e)] += chain[e];
    d[g.tail(e)] -= chain[e];
  }
  return d;
}

std::vector<std::int64_t> boundary_preimage(const Multigraph& g, const Divisor& d) {
  if (d.degree() != 0) fail(ErrorKind::WrongDegree, "boundary preimage needs a degree-0 divisor");
  SpanningTree t = spanning_tree(g, g.base_vertex());
  // Chips in the subtree below v must flow in through v's parent edge.
  std::vector<std::int64_t> below(d.coefficients());
  std::vector<std::int64_t> chain(g.edge_count(), 0);
  for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
    VertexIndex v = *it;
    if (v == t.root) continue;
    EdgeIndex e = t.parent_edge[v];
    chain[e] = g.head(e) == v ? below[v] : -below[v];
    below[t.parent[v]] += below[v];
  }
  return chain;
}

std::vector<Divisor> bounded_linear_system(const Multigraph& g, const Divisor& d,
                                           const std::vector<std::int64_t>& caps, std::size_t bound) {
  const int n = g.vertex_count();
  const std::int64_t deg = d.degree();
  std::vector<Divisor> out;
  if (deg < 0) return out;
  const DivisorClass target = class_of(g, d);
  // Largest degree the remaining vertices can still absorb.
  std::vector<std::int64_t> room(n + 1, 0);
  for (int v = n - 1; v >= 0; --v) room[v] = room[v + 1] + std::max<std::int64_t>(caps[v], 0);
  Divisor cur(n);
  std::size_t visited = 0;
  auto rec = [&](auto&& self, int v, std::int64_t left) -> void {
    if (left > room[v]) return;
    if (v == n) {
      if (++visited > bound) fail(ErrorKind::EnumerationBoundExceeded, "linear system search too large");
      if (class_of(g, cur) == target) out.push_back(cur);
      return;
    }
    for (std::int64_t k = std::min(left, caps[v]); k >= 0; --k) {
      cur[v] = k;
      self(self, v + 1, left - k);
    }
    cur[v] = 0;
  };
  rec(rec, 0, deg);
  std::sort(out.begin(), out.end());
  return out;
}

boost::multiprecision::cpp_int spanning_tree_count(const Multigraph& g) {
  using boost::multiprecision::cpp_int;
  const int n = g.vertex_count() - 1;
  if (n <= 0) return 1;
  // Drop vertex 0.
  std::vector<std::vector<cpp_int>> a(n, std::vector<cpp_int>(n, 0));
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    int u = g.tail(e) - 1, v = g.head(e) - 1;
    if (u >= 0) a[u][u] += 1;
    if (v >= 0) a[v][v] += 1;
    if (u >= 0 && v >= 0) {
      a[u][v] -= 1;
      a[v][u] -= 1;
    }
  }
  // Bareiss.
  cpp_int prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace rigidlift
