#include "generators.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace gen {

using rigidlift::EdgeIndex;
using rigidlift::EdgeSpec;
using rigidlift::EdgeState;
using rigidlift::PartialOrientation;
using rigidlift::VertexIndex;

namespace {

std::string vid(int i) { return "v" + std::to_string(i); }

std::string eid(const char* prefix, int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%s%02d", prefix, i);
  return buf;
}

Multigraph build(const PairList& pairs, const std::vector<bool>& flip, int base) {
  std::vector<EdgeSpec> specs;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    if (flip[i]) std::swap(a, b);
    specs.push_back({eid("e", static_cast<int>(i)), vid(a), vid(b)});
  }
  return Multigraph::build(specs, eid("e", base));
}

bool connected(int n, const PairList& pairs) {
  std::vector<int> par(n);
  std::iota(par.begin(), par.end(), 0);
  std::function<int(int)> find = [&](int x) { return par[x] == x ? x : par[x] = find(par[x]); };
  for (auto [a, b] : pairs) par[find(a)] = find(b);
  for (int v = 0; v < n; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

bool orcyc_ok(const Multigraph& g) {
  return rigidlift::genus(g) >= 2 && rigidlift::is_two_connected(g) && rigidlift::is_two_edge_connected(g);
}

}  // namespace

Multigraph from_pairs(const PairList& pairs, std::mt19937_64& rng, int base) {
  std::vector<bool> flip(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) flip[i] = rng() & 1;
  return build(pairs, flip, base);
}

Multigraph from_pairs_fixed(const PairList& pairs, int base) {
  return build(pairs, std::vector<bool>(pairs.size(), false), base);
}

Multigraph random_connected(std::mt19937_64& rng, int n, int m) {
  PairList pairs;
  for (int v = 1; v < n; ++v) {
    int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    pairs.emplace_back(u, v);
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (static_cast<int>(pairs.size()) < m) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  int base = std::uniform_int_distribution<int>(0, m - 1)(rng);
  return from_pairs(pairs, rng, base);
}

Multigraph random_orcyc_graph(std::mt19937_64& rng, int max_n, int max_m) {
  for (;;) {
    int n = std::uniform_int_distribution<int>(2, max_n)(rng);
    if (n + 1 > max_m) continue;
    int m = std::uniform_int_distribution<int>(n + 1, max_m)(rng);
    Multigraph g = random_connected(rng, n, m);
    if (orcyc_ok(g)) return g;
  }
}

std::vector<PairList> orcyc_graphs_up_to_iso(int max_n, int max_m) {
  std::vector<PairList> out;
  for (int n = 2; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
    std::vector<int> perm(n);
    std::set<std::vector<int>> seen;
    for (int m = n + 1; m <= max_m; ++m) {
      std::vector<int> count(slots.size(), 0);
      std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == slots.size()) {
          count[i] = left;
          PairList pairs;
          for (std::size_t s = 0; s < slots.size(); ++s)
            for (int k = 0; k < count[s]; ++k) pairs.push_back(slots[s]);
          if (!connected(n, pairs)) return;
          // Canonical form: lexicographically least relabelled count matrix.
          std::vector<int> best;
          std::iota(perm.begin(), perm.end(), 0);
          do {
            std::vector<int> mat(n * n, 0);
            for (std::size_t s = 0; s < slots.size(); ++s) {
              int a = perm[slots[s].first], b = perm[slots[s].second];
              mat[a * n + b] = mat[b * n + a] = count[s];
            }
            if (best.empty() || mat < best) best = mat;
          } while (std::next_permutation(perm.begin(), perm.end()));
          if (!seen.insert(best).second) return;
          if (orcyc_ok(from_pairs_fixed(pairs))) out.push_back(pairs);
          return;
        }
        for (int k = 0; k <= left; ++k) {
          count[i] = k;
          rec(i + 1, left - k);
        }
        count[i] = 0;
      };
      rec(0, m);
    }
  }
  return out;
}

OrCycMorphism random_morphism(std::mt19937_64& rng, const Multigraph& g, int max_moves) {
  Multigraph cur = g;
  OrCycMorphism m = rigidlift::identity_morphism(g);
  int moves = std::uniform_int_distribution<int>(0, max_moves)(rng);
  for (int k = 0; k < moves; ++k) {
    std::vector<rigidlift::Arch> arches;
    for (auto& x : rigidlift::find_arches(cur))
      if (std::find(x.edges.begin(), x.edges.end(), cur.base_edge()) == x.edges.end()) arches.push_back(x);
    if (arches.empty()) break;
    auto& x = arches[std::uniform_int_distribution<std::size_t>(0, arches.size() - 1)(rng)];
    auto w = rigidlift::whitney_move(cur, x);
    m = rigidlift::compose(w.morphism, m);
    cur = w.graph;
  }

  // Relabel vertices and edges, flip some edges.
  std::vector<int> vperm(cur.vertex_count()), eperm(cur.edge_count());
  std::iota(vperm.begin(), vperm.end(), 0);
  std::iota(eperm.begin(), eperm.end(), 0);
  std::shuffle(vperm.begin(), vperm.end(), rng);
  std::shuffle(eperm.begin(), eperm.end(), rng);
  std::vector<EdgeSpec> specs;
  for (EdgeIndex e = 0; e < cur.edge_count(); ++e) {
    std::string t = "w" + std::to_string(vperm[cur.tail(e)]);
    std::string h = "w" + std::to_string(vperm[cur.head(e)]);
    if (rng() & 1) std::swap(t, h);
    specs.push_back({eid("r", eperm[e]), t, h});
  }
  Multigraph h = Multigraph::build(specs, eid("r", eperm[cur.base_edge()]));
  std::vector<EdgeIndex> relabel(cur.edge_count());
  for (EdgeIndex e = 0; e < cur.edge_count(); ++e) relabel[e] = h.edge(eid("r", eperm[e]));
  m = rigidlift::compose(OrCycMorphism::create(cur, h, relabel), m);

  // Shuffle inside series classes, keeping the base edge fixed.
  std::vector<EdgeIndex> psi(h.edge_count());
  std::iota(psi.begin(), psi.end(), 0);
  for (auto cls : rigidlift::series_classes(h)) {
    cls.erase(std::remove(cls.begin(), cls.end(), h.base_edge()), cls.end());
    auto img = cls;
    std::shuffle(img.begin(), img.end(), rng);
    for (std::size_t i = 0; i < cls.size(); ++i) psi[cls[i]] = img[i];
  }
  return rigidlift::compose(OrCycMorphism::create(h, h, psi), m);
}

PartialOrientation random_orientation(std::mt19937_64& rng, const Multigraph& g,
                                      const std::vector<EdgeIndex>& unoriented) {
  std::vector<EdgeState> s(g.edge_count());
  for (auto& x : s) x = (rng() & 1) ? EdgeState::Forward : EdgeState::Backward;
  for (EdgeIndex e : unoriented) s[e] = EdgeState::Unoriented;
  return PartialOrientation(s);
}

}  // namespace gen
