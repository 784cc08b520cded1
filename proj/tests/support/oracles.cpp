#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using rigidlift::EdgeState;

namespace {

std::vector<std::vector<cpp_rational>> reduced_laplacian(const Multigraph& g) {
  const int n = g.vertex_count() - 1;
  std::vector<std::vector<cpp_rational>> a(n, std::vector<cpp_rational>(n, cpp_rational(0)));
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    int u = g.tail(e) - 1, v = g.head(e) - 1;
    if (u >= 0) a[u][u] += 1;
    if (v >= 0) a[v][v] += 1;
    if (u >= 0 && v >= 0) {
      a[u][v] -= 1;
      a[v][u] -= 1;
    }
  }
  return a;
}

int find(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

}  // namespace

bool principal(const Multigraph& g, const Divisor& d) {
  if (d.degree() != 0) return false;
  const int n = g.vertex_count() - 1;
  if (n == 0) return true;
  auto a = reduced_laplacian(g);
  std::vector<cpp_rational> b(n);
  for (int i = 0; i < n; ++i) b[i] = d[i + 1];
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      cpp_rational f = a[r][c] / a[c][c];
      for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  for (int i = 0; i < n; ++i)
    if (denominator(cpp_rational(b[i] / a[i][i])) != 1) return false;
  return true;
}

bool equivalent(const Multigraph& g, const Divisor& a, const Divisor& b) { return principal(g, a - b); }

cpp_int kirchhoff(const Multigraph& g) {
  const int n = g.vertex_count() - 1;
  if (n == 0) return 1;
  auto a = reduced_laplacian(g);
  cpp_rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      cpp_rational f = a[r][c] / a[c][c];
      for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return numerator(det);
}

std::uint64_t spanning_trees_by_subsets(const Multigraph& g) {
  const int m = g.edge_count(), k = g.vertex_count() - 1;
  std::vector<int> pick(m, 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  std::uint64_t count = 0;
  do {
    std::vector<int> par(g.vertex_count());
    std::iota(par.begin(), par.end(), 0);
    bool ok = true;
    for (int e = 0; e < m && ok; ++e) {
      if (!pick[e]) continue;
      int a = find(par, g.tail(e)), b = find(par, g.head(e));
      if (a == b) ok = false;
      par[a] = b;
    }
    if (ok) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

std::vector<Divisor> effective_divisors(const Multigraph& g, std::int64_t degree) {
  std::vector<Divisor> out;
  if (degree < 0) return out;
  Divisor d(g.vertex_count());
  std::function<void(int, std::int64_t)> rec = [&](int v, std::int64_t left) {
    if (v == g.vertex_count() - 1) {
      d[v] = left;
      out.push_back(d);
      return;
    }
    for (std::int64_t k = 0; k <= left; ++k) {
      d[v] = k;
      rec(v + 1, left - k);
    }
    d[v] = 0;
  };
  rec(0, degree);
  return out;
}

bool effective_class(const Multigraph& g, const Divisor& d) {
  for (const auto& e : effective_divisors(g, d.degree()))
    if (equivalent(g, d, e)) return true;
  return false;
}

std::vector<Divisor> special_classes(const Multigraph& g) {
  std::vector<Divisor> reps;
  for (const auto& e : effective_divisors(g, rigidlift::genus(g) - 1)) {
    bool seen = false;
    for (const auto& r : reps)
      if (equivalent(g, e, r)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(e);
  }
  return reps;
}

std::vector<std::vector<EdgeIndex>> simple_cycles(const Multigraph& g) {
  const int m = g.edge_count();
  std::vector<std::vector<EdgeIndex>> out;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> deg(g.vertex_count(), 0);
    std::vector<int> par(g.vertex_count());
    std::iota(par.begin(), par.end(), 0);
    std::vector<EdgeIndex> edges;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) {
        edges.push_back(e);
        ++deg[g.tail(e)];
        ++deg[g.head(e)];
        par[find(par, g.tail(e))] = find(par, g.head(e));
      }
    bool ok = true;
    int root = -1;
    for (VertexIndex v = 0; v < g.vertex_count() && ok; ++v) {
      if (deg[v] == 0) continue;
      if (deg[v] != 2) ok = false;
      if (root < 0) root = find(par, v);
      if (find(par, v) != root) ok = false;
    }
    if (ok) out.push_back(edges);
  }
  return out;
}

std::vector<int> cycle_directions(const Multigraph& g, const std::vector<EdgeIndex>& cycle) {
  std::vector<int> dir(g.edge_count(), 0);
  std::set<EdgeIndex> left(cycle.begin(), cycle.end());
  EdgeIndex e = cycle.front();
  VertexIndex at = g.head(e);
  dir[e] = 1;
  left.erase(e);
  while (!left.empty()) {
    EdgeIndex next = -1;
    for (EdgeIndex f : left)
      if (g.tail(f) == at || g.head(f) == at) {
        next = f;
        break;
      }
    dir[next] = g.tail(next) == at ? 1 : -1;
    at = g.tail(next) == at ? g.head(next) : g.tail(next);
    left.erase(next);
  }
  return dir;
}

bool is_cyclic_bijection(const Multigraph& g, const Multigraph& h, const std::vector<EdgeIndex>& map) {
  std::set<std::vector<EdgeIndex>> image;
  for (auto c : simple_cycles(g)) {
    for (auto& e : c) e = map[e];
    std::sort(c.begin(), c.end());
    image.insert(c);
  }
  auto target = simple_cycles(h);
  return image == std::set<std::vector<EdgeIndex>>(target.begin(), target.end());
}

bool signs_carry_cycles(const Multigraph& g, const Multigraph& h, const std::vector<EdgeIndex>& map,
                        const std::vector<int>& signs) {
  for (const auto& c : simple_cycles(g)) {
    auto dir = cycle_directions(g, c);
    std::vector<int> balance(h.vertex_count(), 0);
    for (EdgeIndex e : c) {
      EdgeIndex f = map[e];
      int s = dir[e] * signs[e];
      balance[s > 0 ? h.head(f) : h.tail(f)] += 1;
      balance[s > 0 ? h.tail(f) : h.head(f)] -= 1;
    }
    if (std::any_of(balance.begin(), balance.end(), [](int b) { return b != 0; })) return false;
  }
  return true;
}

bool extends_to_isomorphism(const Multigraph& g, const Multigraph& h, const std::vector<EdgeIndex>& map) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  std::vector<VertexIndex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (EdgeIndex e = 0; e < g.edge_count() && ok; ++e) {
      std::set<VertexIndex> a{perm[g.tail(e)], perm[g.head(e)]}, b{h.tail(map[e]), h.head(map[e])};
      ok = a == b;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool isomorphic(const Multigraph& g, const Multigraph& h) {
  const int n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  auto counts = [](const Multigraph& x) {
    std::vector<std::vector<int>> c(x.vertex_count(), std::vector<int>(x.vertex_count(), 0));
    for (EdgeIndex e = 0; e < x.edge_count(); ++e) {
      ++c[x.tail(e)][x.head(e)];
      if (x.tail(e) != x.head(e)) ++c[x.head(e)][x.tail(e)];
    }
    return c;
  };
  auto cg = counts(g), ch = counts(h);
  std::vector<VertexIndex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) ok = cg[i][j] == ch[perm[i]][perm[j]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Divisor chern(const Multigraph& g, const PartialOrientation& u) {
  Divisor d(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) d[v] = -1;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    switch (u[e]) {
      case EdgeState::Forward: ++d[g.head(e)]; break;
      case EdgeState::Backward: ++d[g.tail(e)]; break;
      case EdgeState::Bioriented:
        ++d[g.head(e)];
        ++d[g.tail(e)];
        break;
      case EdgeState::Unoriented: break;
    }
  }
  return d;
}

bool acyclic(const Multigraph& g, const PartialOrientation& u) {
  // Kahn's algorithm on the oriented edges.
  std::vector<int> indeg(g.vertex_count(), 0);
  std::vector<std::vector<VertexIndex>> out(g.vertex_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (u[e] == EdgeState::Bioriented) return false;
    if (u[e] == EdgeState::Unoriented) continue;
    VertexIndex a = u[e] == EdgeState::Forward ? g.tail(e) : g.head(e);
    VertexIndex b = u[e] == EdgeState::Forward ? g.head(e) : g.tail(e);
    out[a].push_back(b);
    ++indeg[b];
  }
  std::vector<VertexIndex> ready;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    VertexIndex v = ready.back();
    ready.pop_back();
    ++seen;
    for (VertexIndex w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return seen == g.vertex_count();
}

bool sourceless(const Multigraph& g, const PartialOrientation& u) {
  std::vector<int> in(g.vertex_count(), 0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (u[e] == EdgeState::Forward || u[e] == EdgeState::Bioriented) ++in[g.head(e)];
    if (u[e] == EdgeState::Backward || u[e] == EdgeState::Bioriented) ++in[g.tail(e)];
  }
  return std::all_of(in.begin(), in.end(), [](int k) { return k > 0; });
}

}  // namespace oracle
