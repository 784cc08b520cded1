#include "rigidlift/orcyc.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <set>

#include "rigidlift/error.hpp"

namespace rigidlift {

namespace {

void require_bijection(const Multigraph& g, const Multigraph& h, const std::vector<EdgeIndex>& edge_map) {
  if (static_cast<int>(edge_map.size()) != g.edge_count() || g.edge_count() != h.edge_count())
    fail(ErrorKind::NotBijection, "edge map does not cover both edge sets");
  std::vector<bool> hit(h.edge_count(), false);
  for (EdgeIndex e : edge_map) {
    if (e < 0 || e >= h.edge_count() || hit[e]) fail(ErrorKind::NotBijection, "edge map is not a bijection");
    hit[e] = true;
  }
}

void require_orcyc_object(const Multigraph& g, const char* which) {
  if (!is_two_connected(g)) fail(ErrorKind::NotTwoConnected, std::string(which) + " graph is not 2-connected");
  if (!is_two_edge_connected(g))
    fail(ErrorKind::NotTwoEdgeConnected, std::string(which) + " graph is not 2-edge-connected");
}

void require_genus(const OrCycMorphism& m) {
  if (genus(m.source()) < 2 || genus(m.target()) < 2) fail(ErrorKind::GenusTooSmall, "rigidity needs genus at least 2");
}

bool is_cycle_in(const Multigraph& h, const std::vector<std::int64_t>& chain) {
  return boundary(h, chain).is_zero();
}

}  // namespace

bool validate_cyclic_bijection(const Multigraph& g, const Multigraph& h, const std::vector<EdgeIndex>& edge_map) {
  require_bijection(g, h, edge_map);
  if (edge_map[g.base_edge()] != h.base_edge())
    fail(ErrorKind::BaseNotPreserved, "base edge '" + g.edge_id(g.base_edge()) + "' is not sent to '" +
                                          h.edge_id(h.base_edge()) + "'");
  if (genus(g) != genus(h)) return false;
  // A coordinate permutation is injective, so a basis landing inside the
  // cycle space of h spans all of it once the dimensions agree.
  for (const auto& c : fundamental_cycles(g)) {
    std::vector<int> parity(h.vertex_count(), 0);
    for (EdgeIndex e : c.edges) {
      parity[h.tail(edge_map[e])] ^= 1;
      parity[h.head(edge_map[e])] ^= 1;
    }
    if (std::any_of(parity.begin(), parity.end(), [](int p) { return p != 0; })) return false;
  }
  return true;
}

std::vector<int> compute_signs(const Multigraph& g, const Multigraph& h, const std::vector<EdgeIndex>& edge_map,
                               std::mt19937_64* shuffle) {
  const EdgeIndex base = g.base_edge();
  std::vector<int> sign(g.edge_count(), 0);
  sign[base] = 1;
  for (EdgeIndex u = 0; u < g.edge_count(); ++u) {
    if (u == base) continue;
    EdgePath c = cycle_through_edges(g, base, u, shuffle);
    auto at_base = std::find(c.edges.begin(), c.edges.end(), base) - c.edges.begin();
    if (c.signs[at_base] < 0) c = c.reversed(g);
    std::vector<int> s(g.edge_count(), 0);
    std::vector<bool> in_image(h.edge_count(), false);
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
      s[c.edges[i]] = c.signs[i];
      in_image[edge_map[c.edges[i]]] = true;
    }
    // Walk φ(C) starting along ŵ in its own direction.
    std::vector<int> q(h.edge_count(), 0);
    EdgeIndex cur = edge_map[base];
    VertexIndex at = h.head(cur);
    q[cur] = 1;
    std::size_t walked = 1;
    while (walked < c.edges.size()) {
      EdgeIndex next = -1;
      for (EdgeIndex e : h.incident(at)) {
        if (in_image[e] && q[e] == 0) {
          next = e;
          break;
        }
      }
      if (next < 0) fail(ErrorKind::InvalidCyclicBijection, "image of a cycle is not a cycle");
      q[next] = h.tail(next) == at ? 1 : -1;
      at = h.other_end(next, at);
      ++walked;
    }
    if (at != h.tail(edge_map[base])) fail(ErrorKind::InvalidCyclicBijection, "image of a cycle does not close");
    for (EdgeIndex e : c.edges) {
      int value = q[edge_map[e]] * s[e];
      if (sign[e] != 0 && sign[e] != value) fail(ErrorKind::Internal, "inconsistent signs between cycles");
      sign[e] = value;
    }
  }
  // The signed map must send every source cycle to a target cycle.
  for (const auto& c : fundamental_cycles(g)) {
    auto a = c.algebraic(g);
    std::vector<std::int64_t> image(h.edge_count(), 0);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) image[edge_map[e]] = sign[e] * a[e];
    if (!is_cycle_in(h, image)) fail(ErrorKind::Internal, "signed pushforward does not preserve cycles");
  }
  return sign;
}

OrCycMorphism OrCycMorphism::create(Multigraph source, Multigraph target, std::vector<EdgeIndex> edge_map) {
  require_bijection(source, target, edge_map);
  require_orcyc_object(source, "source");
  require_orcyc_object(target, "target");
  if (!validate_cyclic_bijection(source, target, edge_map))
    fail(ErrorKind::InvalidCyclicBijection, "edge map does not preserve cycles");
  OrCycMorphism m;
  m.signs_ = compute_signs(source, target, edge_map);
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.edge_map_ = std::move(edge_map);
  return m;
}

OrCycMorphism OrCycMorphism::from_ids(Multigraph source, Multigraph target,
                                      const std::map<std::string, std::string>& edge_map) {
  std::vector<EdgeIndex> map(source.edge_count(), -1);
  for (const auto& [from, to] : edge_map) map[source.edge(from)] = target.edge(to);
  if (std::find(map.begin(), map.end(), -1) != map.end())
    fail(ErrorKind::NotBijection, "edge map leaves a source edge unassigned");
  return create(std::move(source), std::move(target), std::move(map));
}

OrCycMorphism identity_morphism(const Multigraph& g) {
  std::vector<EdgeIndex> id(g.edge_count());
  std::iota(id.begin(), id.end(), 0);
  return OrCycMorphism::create(g, g, id);
}

OrCycMorphism compose(const OrCycMorphism& m2, const OrCycMorphism& m1) {
  if (!(m1.target() == m2.source())) fail(ErrorKind::CompositionMismatch, "target of the first map is not the source of the second");
  std::vector<EdgeIndex> map(m1.source().edge_count());
  for (EdgeIndex e = 0; e < m1.source().edge_count(); ++e) map[e] = m2(m1(e));
  return OrCycMorphism::create(m1.source(), m2.target(), map);
}

WhitneyMove whitney_move(const Multigraph& g, const Arch& x) {
  Multigraph h = whitney_graph(g, x);
  std::vector<EdgeIndex> id(g.edge_count());
  std::iota(id.begin(), id.end(), 0);
  OrCycMorphism m = OrCycMorphism::create(g, h, id);
  return {std::move(h), std::move(m)};
}

Cochain pushforward_cochain(const OrCycMorphism& m, const Cochain& x) {
  Cochain out(m.target().edge_count());
  for (EdgeIndex e = 0; e < m.source().edge_count(); ++e) out[m(e)] = m.sign(e) * x[e];
  return out;
}

std::vector<std::int64_t> pushforward_chain(const OrCycMorphism& m, const std::vector<std::int64_t>& a) {
  std::vector<std::int64_t> out(m.target().edge_count(), 0);
  for (EdgeIndex e = 0; e < m.source().edge_count(); ++e) out[m(e)] = m.sign(e) * a[e];
  return out;
}

namespace {

EdgeState state_for_sign(int s) {
  if (s > 0) return EdgeState::Forward;
  if (s < 0) return EdgeState::Backward;
  return EdgeState::Unoriented;
}

}  // namespace

PartialOrientation pushforward_orientation(const OrCycMorphism& m, const PartialOrientation& u) {
  PartialOrientation out(std::vector<EdgeState>(m.target().edge_count(), EdgeState::Unoriented));
  for (EdgeIndex e = 0; e < m.source().edge_count(); ++e)
    out.set(m(e), u[e] == EdgeState::Bioriented ? EdgeState::Bioriented : state_for_sign(m.sign(e) * u.sign(e)));
  return out;
}

PartialOrientation pullback_orientation(const OrCycMorphism& m, const PartialOrientation& u) {
  PartialOrientation out(std::vector<EdgeState>(m.source().edge_count(), EdgeState::Unoriented));
  for (EdgeIndex e = 0; e < m.source().edge_count(); ++e)
    out.set(e, u[m(e)] == EdgeState::Bioriented ? EdgeState::Bioriented : state_for_sign(m.sign(e) * u.sign(m(e))));
  return out;
}

Divisor transport_divisor(const OrCycMorphism& m, const Divisor& d) {
  const Multigraph& g = m.source();
  const Multigraph& h = m.target();
  const std::int64_t n = d.degree();
  Divisor d0 = d;
  d0[g.base_vertex()] -= n;
  Divisor out = boundary(h, pushforward_chain(m, boundary_preimage(g, d0)));
  out[h.base_vertex()] += n;
  return out;
}

DivisorClass transport_class(const OrCycMorphism& m, const Divisor& d) {
  return class_of(m.target(), transport_divisor(m, d));
}

DivisorClass rigidity_divisor(const OrCycMorphism& m) {
  const Multigraph& g = m.source();
  const Multigraph& h = m.target();
  Divisor e = transport_divisor(m, chern_class(g, PartialOrientation::reference(g))) -
              chern_class(h, PartialOrientation::reference(h));
  for (EdgeIndex l = 0; l < g.edge_count(); ++l) {
    if (m.sign(l) > 0) continue;
    ++e[h.head(m(l))];
    --e[h.tail(m(l))];
  }
  return class_of(h, e);
}

Divisor rigidity_divisor_via_cochains(const OrCycMorphism& m) {
  const Multigraph& g = m.source();
  const Multigraph& h = m.target();
  CycleLattice lg(g);
  CycleLattice lh(h);
  Cochain e = pushforward_cochain(m, iota(g, lg, g.base_edge(), chern_class(g, PartialOrientation::reference(g))).cochain) -
              iota(h, lh, h.base_edge(), chern_class(h, PartialOrientation::reference(h))).cochain;
  for (EdgeIndex l = 0; l < g.edge_count(); ++l)
    if (m.sign(l) < 0) e += lh.h_edge(m(l));
  return iota_inverse(h, lh, h.base_edge(), e, 0);
}

DivisorClass lowering_divisor(const OrCycMorphism& m, const std::vector<EdgeIndex>& x) {
  const Multigraph& g = m.source();
  const Multigraph& h = m.target();
  Divisor total(h.vertex_count());
  for (EdgeIndex e : x) {
    // Head of φ(e) as oriented by φ_O, not the reference head.
    VertexIndex head = m.sign(e) > 0 ? h.head(m(e)) : h.tail(m(e));
    total += Divisor::point(h, head) - Divisor::point(h, h.base_vertex());
    total -= transport_divisor(m, Divisor::point(g, g.head(e)) - Divisor::point(g, g.base_vertex()));
  }
  return class_of(h, total);
}

DivisorClass diagram_defect(const OrCycMorphism& m, const PartialOrientation& u) {
  return class_of(m.target(), transport_divisor(m, chern_class(m.source(), u)) -
                                  chern_class(m.target(), pushforward_orientation(m, u)));
}

bool is_rigid(const OrCycMorphism& m) {
  require_genus(m);
  return rigidity_divisor(m).is_zero();
}

bool theta_preserved(const OrCycMorphism& m, std::size_t bound) {
  require_genus(m);
  auto source = theta_divisor(m.source(), m.source().base_edge(), bound);
  auto target = theta_divisor(m.target(), m.target().base_edge(), bound);
  std::set<DivisorClass> image;
  for (const auto& c : source) image.insert(transport_class(m, c.representative()));
  return image == std::set<DivisorClass>(target.begin(), target.end());
}

bool abel_jacobi_image_preserved(const OrCycMorphism& m) {
  require_genus(m);
  const Multigraph& g = m.source();
  const Multigraph& h = m.target();
  std::set<DivisorClass> image;
  std::set<DivisorClass> target;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    image.insert(transport_class(m, Divisor::point(g, v) - Divisor::point(g, g.base_vertex())));
  for (VertexIndex w = 0; w < h.vertex_count(); ++w)
    target.insert(class_of(h, Divisor::point(h, w) - Divisor::point(h, h.base_vertex())));
  return image == target;
}

bool diagram_commutes(const OrCycMorphism& m, std::size_t limit) {
  require_genus(m);
  const int edges = m.source().edge_count();
  const std::uint64_t total = edges >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << edges);
  for (std::uint64_t mask = 0; mask < total && mask < limit; ++mask) {
    PartialOrientation u(std::vector<EdgeState>(edges, EdgeState::Forward));
    for (EdgeIndex e = 0; e < edges; ++e)
      if ((mask >> e) & 1u) u.set(e, EdgeState::Backward);
    if (!diagram_defect(m, u).is_zero()) return false;
  }
  return true;
}

NonrigidityWitness nonrigidity_witness(const OrCycMorphism& m) {
  require_genus(m);
  const Multigraph& g = m.source();
  const Multigraph& h = m.target();
  const Divisor e = rigidity_divisor(m).representative();
  if (e.is_zero()) fail(ErrorKind::MorphismIsRigid, "the morphism is rigid");
  const int gen = genus(g);
  for (VertexIndex v = 0; v < h.vertex_count(); ++v) {
    Divisor q = e + Divisor::point(h, v);
    if (is_effective_class(h, q)) continue;
    // v + T is special while E + v + T is not; carry v + T back through the
    // orientation pushforward.
    NonspecialExtension ext = extend_to_nonspecial(h, q);
    Divisor special = Divisor::point(h, v) + ext.t;
    LiftOutcome lifted = lift_divisor_to_orientation(h, special, {});
    PartialOrientation back = pullback_orientation(m, *lifted.orientation);
    Divisor c = chern_class(g, back);
    NonrigidityWitness w;
    w.pivot = v;
    w.source_points = q_reduce(g, c, g.base_vertex());
    w.source_theta = class_of(g, c - Divisor::point(g, g.base_vertex(), gen - 1));
    w.image = q_reduce(h, transport_divisor(m, c), h.base_vertex());
    if (!verify_witness(m, w)) fail(ErrorKind::Internal, "non-rigidity witness failed verification");
    return w;
  }
  fail(ErrorKind::Internal, "no vertex separates the rigidity divisor from the effective classes");
}

bool verify_witness(const OrCycMorphism& m, const NonrigidityWitness& w) {
  const Multigraph& g = m.source();
  const Multigraph& h = m.target();
  const int gen = genus(g);
  if (!w.source_points.is_effective() || w.source_points.degree() != gen - 1) return false;
  if (!(class_of(g, w.source_points - Divisor::point(g, g.base_vertex(), gen - 1)) == w.source_theta)) return false;
  if (!linearly_equivalent(h, transport_divisor(m, w.source_points), w.image)) return false;
  return !is_effective_class(h, w.image);
}

bool verify_graph_isomorphism(const Multigraph& g, const Multigraph& h, const std::vector<EdgeIndex>& edge_map,
                              const std::vector<VertexIndex>& vertex_map) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  if (static_cast<int>(vertex_map.size()) != g.vertex_count() || static_cast<int>(edge_map.size()) != g.edge_count())
    return false;
  std::vector<bool> vhit(h.vertex_count(), false);
  for (VertexIndex v : vertex_map) {
    if (v < 0 || v >= h.vertex_count() || vhit[v]) return false;
    vhit[v] = true;
  }
  std::vector<bool> ehit(h.edge_count(), false);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    EdgeIndex f = edge_map[e];
    if (f < 0 || f >= h.edge_count() || ehit[f]) return false;
    ehit[f] = true;
    std::set<VertexIndex> want{vertex_map[g.tail(e)], vertex_map[g.head(e)]};
    std::set<VertexIndex> got{h.tail(f), h.head(f)};
    if (want != got) return false;
  }
  return true;
}

bool is_series_fixing(const Multigraph& h, const std::vector<EdgeIndex>& psi) {
  auto classes = series_classes(h);
  std::vector<int> block(h.edge_count());
  for (std::size_t b = 0; b < classes.size(); ++b)
    for (EdgeIndex e : classes[b]) block[e] = static_cast<int>(b);
  for (EdgeIndex e = 0; e < h.edge_count(); ++e)
    if (block[psi[e]] != block[e]) return false;
  return true;
}

namespace {

// One BFS pass of the lift. With `reversed`, the base vertex goes to o(ŵ)
// and φ_* acts as −1 on vertex points: φ_*(P_p) ≡ P_{o(ŵ)} − P_r.
// Vertices are located through the Abel-Jacobi map: p goes to the w with
// φ_*(P_p − P_t(ê)) ~ ±(P_w − P_anchor).
std::optional<GraphIsomorphism> lift_pass(const OrCycMorphism& m, const std::vector<int>& block, VertexIndex anchor,
                                          bool reversed) {
  const Multigraph& g = m.source();
  const Multigraph& h = m.target();
  std::vector<DivisorClass> target_points(h.vertex_count());
  for (VertexIndex w = 0; w < h.vertex_count(); ++w)
    target_points[w] = reversed ? class_of(h, Divisor::point(h, anchor) - Divisor::point(h, w))
                                : class_of(h, Divisor::point(h, w) - Divisor::point(h, anchor));
  auto locate = [&](VertexIndex p) {
    DivisorClass c = transport_class(m, Divisor::point(g, p) - Divisor::point(g, g.base_vertex()));
    VertexIndex found = -1;
    for (VertexIndex w = 0; w < h.vertex_count(); ++w) {
      if (!(target_points[w] == c)) continue;
      if (found >= 0) return VertexIndex{-1};
      found = w;
    }
    return found;
  };

  GraphIsomorphism out;
  out.vertex_map.assign(g.vertex_count(), -1);
  out.edge_map.assign(g.edge_count(), -1);
  std::vector<bool> used(h.edge_count(), false);
  const VertexIndex start = g.base_vertex();
  out.vertex_map[start] = locate(start);
  if (out.vertex_map[start] < 0) return std::nullopt;

  std::queue<VertexIndex> frontier;
  frontier.push(start);
  while (!frontier.empty()) {
    VertexIndex v = frontier.front();
    frontier.pop();
    for (EdgeIndex l : g.incident(v)) {
      if (out.edge_map[l] >= 0) continue;
      VertexIndex p = g.other_end(l, v);
      VertexIndex r = locate(p);
      if (r < 0) return std::nullopt;
      if (out.vertex_map[p] < 0) {
        out.vertex_map[p] = r;
        frontier.push(p);
      } else if (out.vertex_map[p] != r) {
        return std::nullopt;
      }
      // An unused edge between the images, in the series class of φ(ℓ).
      VertexIndex a = out.vertex_map[v];
      EdgeIndex pick = -1;
      for (EdgeIndex f : h.incident(a)) {
        if (used[f] || h.other_end(f, a) != r || block[f] != block[m(l)]) continue;
        pick = f;
        break;
      }
      if (pick < 0) return std::nullopt;
      used[pick] = true;
      out.edge_map[l] = pick;
    }
  }
  out.psi.assign(h.edge_count(), -1);
  for (EdgeIndex l = 0; l < g.edge_count(); ++l) out.psi[m(l)] = out.edge_map[l];
  out.unique = g.vertex_count() > 2;
  out.base_reversed = out.vertex_map[start] == h.tail(out.edge_map[g.base_edge()]);
  if (!verify_graph_isomorphism(g, h, out.edge_map, out.vertex_map) || !is_series_fixing(h, out.psi))
    return std::nullopt;
  return out;
}

}  // namespace

GraphIsomorphism lift_to_graph_isomorphism(const OrCycMorphism& m) {
  if (!is_rigid(m)) fail(ErrorKind::MorphismNotRigid, "only rigid morphisms lift to graph isomorphisms");
  const Multigraph& h = m.target();
  auto classes = series_classes(h);
  std::vector<int> block(h.edge_count());
  for (std::size_t b = 0; b < classes.size(); ++b)
    for (EdgeIndex e : classes[b]) block[e] = static_cast<int>(b);
  // The usual case anchors at t(ŵ). When ψ moves ŵ inside its series class,
  // or the vertex map turns the base edge around (possible once
  // K ~ (g−1)(t(ŵ) + o(ŵ))), another anchor or the reflected map is needed.
  std::vector<VertexIndex> anchors{h.base_vertex()};
  for (VertexIndex w = 0; w < h.vertex_count(); ++w)
    if (w != h.base_vertex()) anchors.push_back(w);
  for (bool reversed : {false, true})
    for (VertexIndex a : anchors)
      if (auto iso = lift_pass(m, block, a, reversed)) return *iso;
  fail(ErrorKind::NotLiftable, "rigid morphism does not lift to a graph isomorphism");
}

MatroidLift lift_matroid_isomorphism(const Multigraph& g, const Multigraph& h, const std::vector<EdgeIndex>& edge_map) {
  require_bijection(g, h, edge_map);
  require_orcyc_object(g, "source");
  require_orcyc_object(h, "target");
  if (genus(g) < 2) fail(ErrorKind::GenusTooSmall, "lifting needs genus at least 2");
  const EdgeIndex w = edge_map[g.base_edge()];
  if (!validate_cyclic_bijection(g, h.with_base(w), edge_map))
    fail(ErrorKind::InvalidCyclicBijection, "edge map does not preserve cycles");

  MatroidLift out;
  for (EdgeIndex wi : series_class_of(h, w)) {
    out.tried.push_back(wi);
    std::vector<EdgeIndex> map = edge_map;
    for (auto& f : map) {
      if (f == w) {
        f = wi;
      } else if (f == wi) {
        f = w;
      }
    }
    OrCycMorphism mi = OrCycMorphism::create(g, h.with_base(wi), map);
    if (!is_rigid(mi)) continue;
    GraphIsomorphism iso = lift_to_graph_isomorphism(mi);
    // Fold the swap τ_i into ψ so that ψ∘edge_map is the isomorphism.
    std::vector<EdgeIndex> psi(h.edge_count());
    for (EdgeIndex f = 0; f < h.edge_count(); ++f) {
      EdgeIndex tf = f == w ? wi : (f == wi ? w : f);
      psi[f] = iso.psi[tf];
    }
    iso.psi = psi;
    out.isomorphism = std::move(iso);
    return out;
  }
  return out;
}

}  // namespace rigidlift
