#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "rigidlift/error.hpp"
#include "rigidlift/io.hpp"
#include "rigidlift/orcyc.hpp"

using namespace rigidlift;

namespace {

std::string fixture_path(const char* name) { return std::string(RIGIDLIFT_TEST_FIXTURES) + "/" + name; }
Multigraph fixture(const char* name) { return load_graph(fixture_path(name)); }

OrCycMorphism load_morphism(const char* name) {
  MorphismSpec s = load_morphism_spec(fixture_path(name));
  return OrCycMorphism::from_ids(load_graph(s.source), load_graph(s.target), s.edge_map);
}

Divisor expr(const Multigraph& g, std::initializer_list<std::pair<const char*, int>> terms) {
  Divisor d(g.vertex_count());
  for (auto [v, k] : terms) d[g.vertex(v)] += k;
  return d;
}

// Pushes D − deg(D)·t(ê) as a tree chain through (map, signs), then adds
// deg(D)·t(ŵ) back.
Divisor push_by_chain(const OrCycMorphism& m, const Divisor& d) {
  const Multigraph& g = m.source();
  const Multigraph& h = m.target();
  const VertexIndex root = g.base_vertex();
  std::vector<EdgeIndex> via(g.vertex_count(), -1);
  std::vector<VertexIndex> order{root};
  std::vector<bool> seen(g.vertex_count(), false);
  seen[root] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      VertexIndex v = order[i];
      if (g.tail(e) != v && g.head(e) != v) continue;
      VertexIndex w = g.tail(e) == v ? g.head(e) : g.tail(e);
      if (seen[w]) continue;
      seen[w] = true;
      via[w] = e;
      order.push_back(w);
    }
  std::vector<std::int64_t> need(d.coefficients());
  need[root] -= d.degree();
  std::vector<std::int64_t> chain(g.edge_count(), 0);
  for (std::size_t i = order.size() - 1; i > 0; --i) {
    VertexIndex v = order[i];
    EdgeIndex e = via[v];
    VertexIndex up = g.tail(e) == v ? g.head(e) : g.tail(e);
    chain[e] += g.head(e) == v ? need[v] : -need[v];
    need[up] += need[v];
    need[v] = 0;
  }
  Divisor out(h.vertex_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    std::int64_t c = chain[e] * m.sign(e);
    out[h.head(m(e))] += c;
    out[h.tail(m(e))] -= c;
  }
  out[h.base_vertex()] += d.degree();
  return out;
}

}  // namespace

TEST_CASE("rigid pair") {
  OrCycMorphism m = load_morphism("G_H.json");
  const Multigraph& g = m.source();
  const Multigraph& h = m.target();
  CHECK(m.signs() == std::vector<int>{1, 1, -1, -1, 1, -1, 1});
  CHECK(oracle::equivalent(g, chern_class(g, PartialOrientation::reference(g)), expr(g, {{"v3", 1}, {"v4", 1}})));
  CHECK(oracle::equivalent(h, chern_class(h, PartialOrientation::reference(h)), expr(h, {{"w2", 1}, {"w5", 1}})));
  CHECK(is_rigid(m));
  CHECK(class_of(h, rigidity_divisor_via_cochains(m)).is_zero());
  CHECK(diagram_commutes(m));
  CHECK(theta_preserved(m));
  CHECK(abel_jacobi_image_preserved(m));
  CHECK_THROWS_AS(nonrigidity_witness(m), Error);

  GraphIsomorphism iso = lift_to_graph_isomorphism(m);
  CHECK(oracle::extends_to_isomorphism(g, h, iso.edge_map));
  CHECK(verify_graph_isomorphism(g, h, iso.edge_map, iso.vertex_map));
  CHECK(is_series_fixing(h, iso.psi));
  CHECK_FALSE(iso.base_reversed);
  std::map<std::string, std::string> psi;
  for (EdgeIndex f = 0; f < h.edge_count(); ++f)
    if (iso.psi[f] != f) psi[h.edge_id(f)] = h.edge_id(iso.psi[f]);
  CHECK(psi == std::map<std::string, std::string>{{"r3", "r7"}, {"r6", "r3"}, {"r7", "r6"}});
  std::map<std::string, std::string> vmap;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) vmap[g.vertex_id(v)] = h.vertex_id(iso.vertex_map[v]);
  CHECK(vmap == std::map<std::string, std::string>{
                    {"v1", "w2"}, {"v2", "w1"}, {"v3", "w5"}, {"v4", "w4"}, {"v5", "w3"}});
}

TEST_CASE("non-rigid pair") {
  OrCycMorphism m = load_morphism("J_K.json");
  const Multigraph& g = m.source();
  const Multigraph& h = m.target();
  CHECK(m.signs() == std::vector<int>{1, 1, -1, 1, -1, 1});
  CHECK(oracle::equivalent(g, chern_class(g, PartialOrientation::reference(g)),
                           expr(g, {{"v1", -1}, {"v3", 1}, {"v4", 2}})));
  CHECK(oracle::equivalent(h, chern_class(h, PartialOrientation::reference(h)), expr(h, {{"w3", 1}, {"w4", 1}})));
  CHECK_FALSE(is_rigid(m));
  Divisor e = rigidity_divisor(m).representative();
  CHECK(e == expr(h, {{"w1", 1}, {"w2", -1}}));
  CHECK(oracle::equivalent(h, e, rigidity_divisor_via_cochains(m)));
  CHECK(oracle::equivalent(h, e, expr(h, {{"w2", 1}, {"w3", -1}})));
  CHECK_FALSE(oracle::equivalent(h, e, expr(h, {{"w2", 1}, {"w3", 3}, {"w4", -4}})));
  CHECK_FALSE(diagram_commutes(m));
  CHECK_FALSE(theta_preserved(m));
  CHECK_FALSE(abel_jacobi_image_preserved(m));
  CHECK_THROWS_AS(lift_to_graph_isomorphism(m), Error);

  NonrigidityWitness w = nonrigidity_witness(m);
  CHECK(verify_witness(m, w));
  CHECK(w.source_points == expr(g, {{"v1", 1}, {"v3", 1}}));
  CHECK(oracle::effective_class(g, w.source_points));
  CHECK_FALSE(oracle::effective_class(h, transport_divisor(m, w.source_points)));
  CHECK(oracle::equivalent(h, transport_divisor(m, w.source_points), expr(h, {{"w1", 2}, {"w2", -1}, {"w4", 1}})));

  CHECK_FALSE(oracle::isomorphic(g, h));
  MatroidLift lift = lift_matroid_isomorphism(g, h, m.edge_map());
  CHECK_FALSE(lift.isomorphism);
  CHECK(lift.tried == std::vector<EdgeIndex>{h.edge("r1"), h.edge("r4")});
}

TEST_CASE("rigid morphism between non-isomorphic graphs") {
  OrCycMorphism m = load_morphism("nonlift.json");
  CHECK_FALSE(oracle::isomorphic(m.source(), m.target()));
  CHECK(is_rigid(m));
  CHECK(diagram_commutes(m));
  CHECK(theta_preserved(m));
  CHECK_FALSE(abel_jacobi_image_preserved(m));
  try {
    lift_to_graph_isomorphism(m);
    FAIL("lift should be refused");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotLiftable);
  }
}

TEST_CASE("rigid edge isomorphism turning the base edge around") {
  OrCycMorphism m = load_morphism("k4_doubled.json");
  const Multigraph& h = m.target();
  CHECK(oracle::extends_to_isomorphism(m.source(), h, m.edge_map()));
  CHECK(is_rigid(m));
  CHECK(diagram_commutes(m));
  CHECK(theta_preserved(m));
  CHECK_FALSE(abel_jacobi_image_preserved(m));
  Divisor k = Divisor::point(h, h.head(h.base_edge()), genus(h) - 1) +
              Divisor::point(h, h.tail(h.base_edge()), genus(h) - 1);
  CHECK(oracle::equivalent(h, canonical_divisor(h), k));
  GraphIsomorphism iso = lift_to_graph_isomorphism(m);
  CHECK(iso.base_reversed);
  CHECK(oracle::extends_to_isomorphism(m.source(), h, iso.edge_map));
}

TEST_CASE("invalid cyclic bijection") {
  MorphismSpec s = load_morphism_spec(fixture_path("bad_G_H.json"));
  try {
    OrCycMorphism::from_ids(load_graph(s.source), load_graph(s.target), s.edge_map);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidCyclicBijection);
  }
}

TEST_CASE("cyclic bijection check against cycle enumeration") {
  std::mt19937_64 rng(1);
  int valid = 0;
  for (int trial = 0; trial < 150; ++trial) {
    Multigraph g = gen::random_orcyc_graph(rng, 5, 7);
    OrCycMorphism m = gen::random_morphism(rng, g);
    std::vector<EdgeIndex> map = m.edge_map();
    if (trial % 2) {
      // Perturb away from the base.
      std::vector<EdgeIndex> rest;
      for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        if (e != g.base_edge()) rest.push_back(e);
      std::shuffle(rest.begin(), rest.end(), rng);
      std::swap(map[rest[0]], map[rest[1]]);
    }
    bool lib = validate_cyclic_bijection(g, m.target(), map);
    CHECK(lib == oracle::is_cyclic_bijection(g, m.target(), map));
    valid += lib;
  }
  CHECK(valid > 75);
}

TEST_CASE("signs carry oriented cycles and ignore the cycle choices") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    Multigraph g = gen::random_orcyc_graph(rng, 6, 9);
    OrCycMorphism m = gen::random_morphism(rng, g);
    CHECK(oracle::signs_carry_cycles(g, m.target(), m.edge_map(), m.signs()));
    CHECK(m.sign(g.base_edge()) == 1);
    for (int k = 0; k < 3; ++k) CHECK(compute_signs(g, m.target(), m.edge_map(), &rng) == m.signs());
  }
}

TEST_CASE("composition") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Multigraph g = gen::random_orcyc_graph(rng, 6, 9);
    OrCycMorphism a = gen::random_morphism(rng, g);
    OrCycMorphism b = gen::random_morphism(rng, a.target());
    OrCycMorphism ba = compose(b, a);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      CHECK(ba(e) == b(a(e)));
      CHECK(ba.sign(e) == a.sign(e) * b.sign(a(e)));
    }
    OrCycMorphism same = compose(identity_morphism(a.target()), a);
    CHECK(same.edge_map() == a.edge_map());
    CHECK(same.signs() == a.signs());
    CHECK_THROWS_AS(compose(a, a), Error);
  }
}

TEST_CASE("transport agrees with pushing a tree chain") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    Multigraph g = gen::random_orcyc_graph(rng, 6, 9);
    OrCycMorphism m = gen::random_morphism(rng, g);
    Divisor d(g.vertex_count());
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) d[v] = std::uniform_int_distribution<int>(-2, 3)(rng);
    Divisor t = transport_divisor(m, d);
    CHECK(t.degree() == d.degree());
    CHECK(oracle::equivalent(m.target(), t, push_by_chain(m, d)));
    CHECK(transport_class(m, d) == class_of(m.target(), t));
  }
}

TEST_CASE("rigidity divisor: two routes and the diagram") {
  std::mt19937_64 rng(5);
  int rigid = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Multigraph g = gen::random_orcyc_graph(rng, 5, 8);
    OrCycMorphism m = gen::random_morphism(rng, g);
    const Multigraph& h = m.target();
    DivisorClass e = rigidity_divisor(m);
    CHECK(e.degree() == 0);
    CHECK(e == class_of(h, rigidity_divisor_via_cochains(m)));
    // φ_* c(U) − c(φ_O U) ~ E for every full orientation U, checked by oracle.
    for (int k = 0; k < 4; ++k) {
      PartialOrientation u = gen::random_orientation(rng, g);
      Divisor lhs = push_by_chain(m, oracle::chern(g, u)) - oracle::chern(h, pushforward_orientation(m, u));
      CHECK(oracle::equivalent(h, lhs, e.representative()));
      CHECK(pullback_orientation(m, pushforward_orientation(m, u)) == u);
    }
    CHECK(is_rigid(m) == diagram_commutes(m));
    CHECK(is_rigid(m) == theta_preserved(m));
    rigid += is_rigid(m);
  }
  CHECK(rigid > 0);
}

TEST_CASE("rigid morphisms lift, or the graphs are not isomorphic") {
  std::mt19937_64 rng(6);
  int lifted = 0;
  for (int trial = 0; trial < 80; ++trial) {
    Multigraph g = gen::random_orcyc_graph(rng, 5, 8);
    OrCycMorphism m = gen::random_morphism(rng, g);
    if (!is_rigid(m)) {
      CHECK(verify_witness(m, nonrigidity_witness(m)));
      continue;
    }
    try {
      GraphIsomorphism iso = lift_to_graph_isomorphism(m);
      CHECK(oracle::extends_to_isomorphism(g, m.target(), iso.edge_map));
      CHECK(is_series_fixing(m.target(), iso.psi));
      ++lifted;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotLiftable);
      CHECK_FALSE(oracle::isomorphic(g, m.target()));
    }
  }
  CHECK(lifted > 0);
}

TEST_CASE("Whitney moves are cyclic bijections") {
  Multigraph g = fixture("square_doubled_a.graph");
  int moves = 0;
  for (const Arch& x : find_arches(g)) {
    if (std::count(x.edges.begin(), x.edges.end(), g.base_edge())) continue;
    WhitneyMove w = whitney_move(g, x);
    CHECK(oracle::is_cyclic_bijection(g, w.graph, w.morphism.edge_map()));
    CHECK(oracle::signs_carry_cycles(g, w.graph, w.morphism.edge_map(), w.morphism.signs()));
    ++moves;
  }
  CHECK(moves > 0);
}
