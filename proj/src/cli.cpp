#include "rigidlift/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rigidlift/error.hpp"
#include "rigidlift/io.hpp"

#ifndef RIGIDLIFT_FIXTURE_DIR
#define RIGIDLIFT_FIXTURE_DIR "fixtures"
#endif

namespace rigidlift {

using nlohmann::json;

namespace {

json edge_ids(const Multigraph& g, const std::vector<EdgeIndex>& edges) {
  json out = json::array();
  for (EdgeIndex e : edges) out.push_back(g.edge_id(e));
  return out;
}

// Reduced at the base vertex, as text and as a sum.
json divisor_json(const Multigraph& g, const Divisor& d) {
  Divisor r = q_reduce(g, d, g.base_vertex());
  return {{"reduced", divisor_expression(g, r)}, {"div", format_divisor(g, r)}};
}

json morphism_side(const Multigraph& g) {
  return {{"vertices", g.vertex_count()},
          {"edges", g.edge_count()},
          {"genus", genus(g)},
          {"base_edge", g.edge_id(g.base_edge())},
          {"base_vertex", g.vertex_id(g.base_vertex())}};
}

Divisor read_divisor(const Multigraph& g, const std::string& text) {
  if (text.rfind("div", 0) == 0) return parse_divisor(g, text);
  return parse_divisor(g, "div " + text);
}

std::vector<EdgeIndex> read_edge_list(const Multigraph& g, const std::string& text) {
  std::vector<EdgeIndex> out;
  std::stringstream ss(text);
  std::string id;
  while (std::getline(ss, id, ','))
    if (!id.empty()) out.push_back(g.edge(id));
  return out;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Edge map of a map file: the morphism JSON shape, graph paths optional.
std::map<std::string, std::string> load_edge_map(const std::filesystem::path& p) {
  json j;
  try {
    j = json::parse(read_file(p));
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, p.string() + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("edge_map") || !j["edge_map"].is_object())
    fail(ErrorKind::ParseError, p.string() + ": missing edge_map object");
  std::map<std::string, std::string> out;
  for (auto& [k, v] : j["edge_map"].items()) {
    if (!v.is_string()) fail(ErrorKind::ParseError, p.string() + ": edge_map values must be strings");
    out[k] = v.get<std::string>();
  }
  return out;
}

std::vector<EdgeIndex> resolve_map(const Multigraph& g, const Multigraph& h,
                                   const std::map<std::string, std::string>& ids) {
  if (static_cast<int>(ids.size()) != g.edge_count())
    fail(ErrorKind::NotBijection, "edge map must list every source edge");
  std::vector<EdgeIndex> map(g.edge_count(), -1);
  for (const auto& [a, b] : ids) map[g.edge(a)] = h.edge(b);
  return map;
}

// Brute force over vertex bijections; fixture sized graphs only.
bool extends_to_isomorphism(const Multigraph& g, const Multigraph& h, const std::vector<EdgeIndex>& edge_map) {
  if (g.vertex_count() != h.vertex_count() || g.vertex_count() > 9) return false;
  std::vector<VertexIndex> perm(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) perm[v] = v;
  do {
    if (verify_graph_isomorphism(g, h, edge_map, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

json info_report(const Multigraph& g) {
  auto prof = connectivity_profile(g);
  json out = {{"vertices", g.vertex_count()},
              {"edges", g.edge_count()},
              {"genus", genus(g)},
              {"base_edge", g.edge_id(g.base_edge())},
              {"base_vertex", g.vertex_id(g.base_vertex())},
              {"two_connected", prof.two_connected},
              {"edge_connectivity", prof.edge_connectivity},
              {"spanning_trees", spanning_tree_count(g).str()}};
  if (prof.edge_connectivity >= 2) {
    json classes = json::array();
    for (const auto& c : series_classes(g)) classes.push_back(edge_ids(g, c));
    out["series_classes"] = classes;
  } else {
    out["series_classes"] = nullptr;
  }
  return out;
}

json isomorphism_json(const Multigraph& g, const Multigraph& h, const GraphIsomorphism& iso) {
  json psi = json::object(), composite = json::object(), vmap = json::object();
  for (EdgeIndex f = 0; f < h.edge_count(); ++f) psi[h.edge_id(f)] = h.edge_id(iso.psi[f]);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) composite[g.edge_id(e)] = h.edge_id(iso.edge_map[e]);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) vmap[g.vertex_id(v)] = h.vertex_id(iso.vertex_map[v]);
  return {{"psi", psi},
          {"composite", composite},
          {"vertex_map", vmap},
          {"unique", iso.unique},
          {"base_reversed", iso.base_reversed},
          {"series_fixing", is_series_fixing(h, iso.psi)},
          {"verified", verify_graph_isomorphism(g, h, iso.edge_map, iso.vertex_map)}};
}

json rigidity_report(const OrCycMorphism& m, const ReportOptions& opt) {
  const Multigraph& g = m.source();
  const Multigraph& h = m.target();
  json signs = json::object();
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) signs[g.edge_id(e)] = m.sign(e);

  Divisor cg = chern_class(g, PartialOrientation::reference(g));
  Divisor ch = chern_class(h, PartialOrientation::reference(h));
  json chern_g = divisor_json(g, cg);
  chern_g["divisor"] = divisor_expression(g, cg);
  json chern_h = divisor_json(h, ch);
  chern_h["divisor"] = divisor_expression(h, ch);

  const bool rigid = is_rigid(m);
  json out = {{"source", morphism_side(g)},
              {"target", morphism_side(h)},
              {"signs", signs},
              {"chern_source", chern_g},
              {"chern_target", chern_h},
              {"rigidity_divisor", divisor_json(h, rigidity_divisor(m).representative())},
              {"is_rigid", rigid},
              {"theta_preserved", theta_preserved(m, opt.max_classes)},
              {"abel_jacobi_image_preserved", abel_jacobi_image_preserved(m)},
              {"diagram_commutes", diagram_commutes(m)}};
  if (opt.witness && !rigid) {
    NonrigidityWitness w = nonrigidity_witness(m);
    out["witness"] = {{"source_points", divisor_expression(g, w.source_points)},
                      {"image", divisor_json(h, w.image)},
                      {"image_effective", is_effective_class(h, w.image)},
                      {"pivot", h.vertex_id(w.pivot)},
                      {"verified", verify_witness(m, w)}};
  }
  if (opt.lift && rigid) {
    try {
      out["lift"] = isomorphism_json(g, h, lift_to_graph_isomorphism(m));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotLiftable) throw;
      out["lift"] = {{"error", {{"kind", to_string(e.kind())}, {"message", e.message()}}}};
    }
  }
  return out;
}

json matroid_lift_report(const Multigraph& g, const Multigraph& h, const MatroidLift& lift) {
  json out = {{"liftable", lift.isomorphism.has_value()}, {"tried", edge_ids(h, lift.tried)}};
  out["isomorphism"] = lift.isomorphism ? isomorphism_json(g, h, *lift.isomorphism) : json(nullptr);
  return out;
}

json selftest_report(const std::filesystem::path& fixtures) {
  json checks = json::array();
  json discrepancies = json::array();
  auto check = [&](const std::string& name, const std::function<bool()>& fn) {
    bool ok = false;
    std::string detail;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    json c = {{"name", name}, {"passed", ok}};
    if (!detail.empty()) c["error"] = detail;
    checks.push_back(c);
  };
  auto load = [&](const std::string& file) {
    MorphismSpec s = load_morphism_spec(fixtures / file);
    return OrCycMorphism::from_ids(load_graph(s.source), load_graph(s.target), s.edge_map);
  };
  auto ref_chern = [](const Multigraph& g) { return chern_class(g, PartialOrientation::reference(g)); };
  auto is = [](const Multigraph& g, const Divisor& d, const std::string& text) { return d == read_divisor(g, text); };

  check("rigid pair: signs", [&] {
    auto m = load("G_H.json");
    return m.signs() == std::vector<int>{1, 1, -1, -1, 1, -1, 1};
  });
  check("rigid pair: Chern classes", [&] {
    auto m = load("G_H.json");
    return is(m.source(), ref_chern(m.source()), "v3:1 v4:1") && is(m.target(), ref_chern(m.target()), "w2:1 w5:1");
  });
  check("rigid pair: rigidity divisor is zero and all predicates agree", [&] {
    auto m = load("G_H.json");
    return rigidity_divisor(m).is_zero() && is_rigid(m) && theta_preserved(m) && abel_jacobi_image_preserved(m) &&
           diagram_commutes(m);
  });
  check("rigid pair: lift is a series-fixing graph isomorphism", [&] {
    auto m = load("G_H.json");
    auto iso = lift_to_graph_isomorphism(m);
    return verify_graph_isomorphism(m.source(), m.target(), iso.edge_map, iso.vertex_map) &&
           is_series_fixing(m.target(), iso.psi);
  });
  try {
    auto m = load("G_H.json");
    const Multigraph& h = m.target();
    auto iso = lift_to_graph_isomorphism(m);
    std::vector<EdgeIndex> swap(h.edge_count());
    for (EdgeIndex f = 0; f < h.edge_count(); ++f) swap[f] = f;
    std::swap(swap[h.edge("r3")], swap[h.edge("r7")]);
    std::vector<EdgeIndex> composite(m.source().edge_count());
    for (EdgeIndex e = 0; e < m.source().edge_count(); ++e) composite[e] = swap[m(e)];
    const bool swap_lifts = extends_to_isomorphism(m.source(), h, composite);
    json psi = json::object();
    for (EdgeIndex f = 0; f < h.edge_count(); ++f) psi[h.edge_id(f)] = h.edge_id(iso.psi[f]);
    if (!swap_lifts)
      discrepancies.push_back({{"claim", "psi swaps r3 and r7"}, {"reproduced", false}, {"computed_psi", psi}});
  } catch (const std::exception& e) {
    discrepancies.push_back({{"error", e.what()}});
  }

  check("non-rigid pair: signs", [&] {
    auto m = load("J_K.json");
    return m.signs() == std::vector<int>{1, 1, -1, 1, -1, 1};
  });
  check("non-rigid pair: Chern classes", [&] {
    auto m = load("J_K.json");
    return is(m.source(), ref_chern(m.source()), "v1:-1 v3:1 v4:2") &&
           is(m.target(), ref_chern(m.target()), "w3:1 w4:1");
  });
  check("non-rigid pair: all predicates report non-rigid", [&] {
    auto m = load("J_K.json");
    return !is_rigid(m) && !theta_preserved(m) && !abel_jacobi_image_preserved(m) && !diagram_commutes(m);
  });
  check("non-rigid pair: witness verifies", [&] {
    auto m = load("J_K.json");
    return verify_witness(m, nonrigidity_witness(m));
  });
  check("non-rigid pair: both rigidity divisor routes agree", [&] {
    auto m = load("J_K.json");
    return linearly_equivalent(m.target(), rigidity_divisor(m).representative(), rigidity_divisor_via_cochains(m));
  });
  check("K: reduce w2+3w3-4w4 at w4 gives w1+w3-2w4", [&] {
    Multigraph k = load_graph(fixtures / "K.graph");
    return q_reduce(k, read_divisor(k, "w2:1 w3:3 w4:-4"), k.vertex("w4")) == read_divisor(k, "w1:1 w3:1 w4:-2");
  });
  check("K: order w4 w3 w1 w2 gives an acyclic orientation with Chern class w1+w2+w3-w4", [&] {
    Multigraph k = load_graph(fixtures / "K.graph");
    auto u = orientation_from_order(k, {k.vertex("w4"), k.vertex("w3"), k.vertex("w1"), k.vertex("w2")});
    return is_acyclic(k, u) && chern_class(k, u) == read_divisor(k, "w1:1 w2:1 w3:1 w4:-1");
  });
  check("K: w1+w3-w4 gets a verified acyclic certificate", [&] {
    Multigraph k = load_graph(fixtures / "K.graph");
    Divisor q = read_divisor(k, "w1:1 w3:1 w4:-1");
    auto cert = effectiveness_certificate(k, q, k.vertex("w4"));
    return std::holds_alternative<AcyclicWitness>(cert) && verify_certificate(k, q, cert);
  });
  try {
    auto m = load("J_K.json");
    const Multigraph& h = m.target();
    Divisor claimed = read_divisor(h, "w2:1 w3:3 w4:-4");
    Divisor e = rigidity_divisor(m).representative();
    if (!linearly_equivalent(h, e, claimed))
      discrepancies.push_back({{"claim", "rigidity divisor ~ w2 + 3w3 - 4w4"},
                               {"reproduced", false},
                               {"computed", divisor_expression(h, e)}});
    auto w = nonrigidity_witness(m);
    const Multigraph& g = m.source();
    Divisor claimed_w = read_divisor(g, "v1:1 v4:1");
    NonrigidityWitness cw{claimed_w, class_of(g, claimed_w - Divisor::point(g, g.base_vertex(), 2)),
                          q_reduce(h, transport_divisor(m, claimed_w), h.base_vertex()), w.pivot};
    if (!verify_witness(m, cw))
      discrepancies.push_back({{"claim", "S2(v1+v4) witnesses non-rigidity"},
                               {"reproduced", false},
                               {"computed", divisor_expression(g, w.source_points)}});
  } catch (const std::exception& e) {
    discrepancies.push_back({{"error", e.what()}});
  }

  check("doubled K4: rigid, Abel-Jacobi image reflected, lift reverses the base edge", [&] {
    auto m = load("k4_doubled.json");
    return is_rigid(m) && !abel_jacobi_image_preserved(m) && lift_to_graph_isomorphism(m).base_reversed;
  });
  check("rigid pair of non-isomorphic graphs: lift refused", [&] {
    auto m = load("nonlift.json");
    if (!is_rigid(m)) return false;
    try {
      lift_to_graph_isomorphism(m);
    } catch (const Error& e) {
      return e.kind() == ErrorKind::NotLiftable;
    }
    return false;
  });
  check("theta graph: theta divisor has 2 classes", [&] {
    Multigraph t = load_graph(fixtures / "theta.graph");
    return theta_divisor(t, t.base_edge()).size() == 2;
  });
  check("doubled squares: a Whitney move turns one into the other", [&] {
    Multigraph a = load_graph(fixtures / "square_doubled_a.graph");
    Multigraph b = load_graph(fixtures / "square_doubled_b.graph");
    for (const Arch& x : find_arches(a)) {
      if (std::find(x.edges.begin(), x.edges.end(), a.base_edge()) != x.edges.end()) continue;
      Multigraph w = whitney_graph(a, x);
      if (w.edge_count() != b.edge_count()) continue;
      // The two files number their edges alike: e_i goes to r_i.
      std::vector<EdgeIndex> map(w.edge_count());
      for (EdgeIndex e = 0; e < w.edge_count(); ++e) map[e] = b.edge("r" + w.edge_id(e).substr(1));
      if (extends_to_isomorphism(w, b, map)) return true;
    }
    return false;
  });

  bool passed = true;
  for (const auto& c : checks) passed = passed && c["passed"].get<bool>();
  return {{"checks", checks}, {"unreproduced_claims", discrepancies}, {"passed", passed}};
}

namespace {

struct Globals {
  bool no_timings = false;
  std::size_t max_classes = kDefaultMaxClasses;
};

void emit(std::ostream& out, json report, const std::string& command, const Globals& gl,
          std::chrono::steady_clock::time_point start) {
  json full = {{"schema", "1"}, {"command", command}};
  for (auto& [k, v] : report.items()) full[k] = v;
  if (!gl.no_timings) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    full["timings"] = {{"total_ms", ms}};
  }
  out << full.dump(2) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph Jacobians, orientations and rigidity of cyclic bijections", "rigidlift"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_flag("--no-timings", gl.no_timings, "Omit timings so output is byte-stable");
  app.add_option("--max-classes", gl.max_classes, "Enumeration bound on divisor classes")
      ->envname("RIGIDLIFT_MAX_CLASSES");

  std::string graph_file, graph_file2, map_file, div1, div2, orient_text, q_vertex, unoriented, root, fixtures;
  bool witness = false, lift = false, expect_rigid = false;
  fixtures = RIGIDLIFT_FIXTURE_DIR;

  auto* info = app.add_subcommand("info", "Genus, connectivity, series classes, spanning trees");
  info->add_option("graph", graph_file)->required();

  auto* rig = app.add_subcommand("rigidity", "Rigidity analysis of a morphism file");
  rig->add_option("morphism", map_file)->required();
  rig->add_flag("--witness", witness, "Extract a non-rigidity witness");
  rig->add_flag("--lift", lift, "Lift a rigid morphism to a graph isomorphism");
  rig->add_flag("--expect-rigid", expect_rigid, "Exit 1 when the morphism is not rigid");

  auto* lm = app.add_subcommand("lift-matroid", "Lift a matroid isomorphism to a graph isomorphism");
  lm->add_option("source", graph_file)->required();
  lm->add_option("target", graph_file2)->required();
  lm->add_option("map", map_file)->required();

  auto* dv = app.add_subcommand("divisor", "Divisor arithmetic");
  dv->require_subcommand(1);
  auto* d_reduce = dv->add_subcommand("reduce", "q-reduced form");
  d_reduce->add_option("graph", graph_file)->required();
  d_reduce->add_option("divisor", div1)->required();
  d_reduce->add_option("--q", q_vertex, "Reduce at this vertex (default: base vertex)");
  auto* d_equiv = dv->add_subcommand("equiv", "Linear equivalence");
  d_equiv->add_option("graph", graph_file)->required();
  d_equiv->add_option("first", div1)->required();
  d_equiv->add_option("second", div2)->required();
  auto* d_eff = dv->add_subcommand("effective", "Is the class effective");
  d_eff->add_option("graph", graph_file)->required();
  d_eff->add_option("divisor", div1)->required();
  auto* d_cls = dv->add_subcommand("classify", "Special or nonspecial, degree g-1");
  d_cls->add_option("graph", graph_file)->required();
  d_cls->add_option("divisor", div1)->required();
  auto* d_theta = dv->add_subcommand("theta", "Theta divisor classes");
  d_theta->add_option("graph", graph_file)->required();

  auto* orv = app.add_subcommand("orient", "Partial orientations");
  orv->require_subcommand(1);
  auto* o_chern = orv->add_subcommand("chern", "Chern class of an orientation");
  o_chern->add_option("graph", graph_file)->required();
  o_chern->add_option("orientation", orient_text)->required();
  auto* o_lift = orv->add_subcommand("liftdiv", "Lift a divisor to a partial orientation");
  o_lift->add_option("graph", graph_file)->required();
  o_lift->add_option("divisor", div1)->required();
  o_lift->add_option("--unoriented", unoriented, "Comma-separated edges to leave unoriented");
  auto* o_cert = orv->add_subcommand("certify", "Effectiveness certificate");
  o_cert->add_option("graph", graph_file)->required();
  o_cert->add_option("divisor", div1)->required();
  o_cert->add_option("--root", root, "Reduction vertex for the acyclic branch");

  auto* st = app.add_subcommand("selftest", "Fixture reproductions");
  st->add_option("--fixtures", fixtures, "Fixture directory");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (info->parsed()) {
      emit(out, info_report(load_graph(graph_file)), "info", gl, start);
      return 0;
    }
    if (rig->parsed()) {
      MorphismSpec s = load_morphism_spec(map_file);
      auto m = OrCycMorphism::from_ids(load_graph(s.source), load_graph(s.target), s.edge_map);
      json r = rigidity_report(m, {witness, lift, gl.max_classes});
      emit(out, r, "rigidity", gl, start);
      if (r.contains("lift") && r["lift"].contains("error")) return 1;
      return expect_rigid && !r["is_rigid"].get<bool>() ? 1 : 0;
    }
    if (lm->parsed()) {
      Multigraph g = load_graph(graph_file);
      Multigraph h = load_graph(graph_file2);
      auto lift_result = lift_matroid_isomorphism(g, h, resolve_map(g, h, load_edge_map(map_file)));
      json r = matroid_lift_report(g, h, lift_result);
      if (!lift_result.isomorphism) r["error"] = {{"kind", "NotLiftable"}};
      emit(out, r, "lift-matroid", gl, start);
      return lift_result.isomorphism ? 0 : 1;
    }
    if (dv->parsed()) {
      Multigraph g = load_graph(graph_file);
      json r;
      std::string sub;
      if (d_reduce->parsed()) {
        sub = "reduce";
        VertexIndex q = q_vertex.empty() ? g.base_vertex() : g.vertex(q_vertex);
        Divisor d = read_divisor(g, div1);
        Divisor red = q_reduce(g, d, q);
        r = {{"q", g.vertex_id(q)}, {"input", divisor_expression(g, d)}, {"reduced", divisor_expression(g, red)},
             {"div", format_divisor(g, red)}};
      } else if (d_equiv->parsed()) {
        sub = "equiv";
        Divisor a = read_divisor(g, div1), b = read_divisor(g, div2);
        r = {{"equivalent", linearly_equivalent(g, a, b)}, {"first", divisor_json(g, a)}, {"second", divisor_json(g, b)}};
      } else if (d_eff->parsed()) {
        sub = "effective";
        Divisor d = read_divisor(g, div1);
        r = divisor_json(g, d);
        r["effective"] = is_effective_class(g, d);
      } else if (d_cls->parsed()) {
        sub = "classify";
        Divisor d = read_divisor(g, div1);
        r = divisor_json(g, d);
        r["speciality"] = classify_gminus1(g, d) == Speciality::Special ? "Special" : "Nonspecial";
      } else {
        sub = "theta";
        auto classes = theta_divisor(g, g.base_edge(), gl.max_classes);
        json list = json::array();
        for (const auto& c : classes) list.push_back(divisor_expression(g, c.representative()));
        r = {{"count", classes.size()}, {"classes", list}};
      }
      emit(out, r, "divisor " + sub, gl, start);
      return 0;
    }
    if (orv->parsed()) {
      Multigraph g = load_graph(graph_file);
      if (o_chern->parsed()) {
        std::string text = orient_text.rfind("orient", 0) == 0 ? orient_text : "orient " + orient_text;
        PartialOrientation u = parse_orientation(g, text);
        Divisor c = extended_chern_class(g, u);
        json r = divisor_json(g, c);
        r["divisor"] = divisor_expression(g, c);
        r["bioriented"] = u.has_bioriented();
        r["sourceless"] = is_sourceless(g, u);
        r["acyclic"] = is_acyclic(g, u);
        emit(out, r, "orient chern", gl, start);
        return 0;
      }
      if (o_lift->parsed()) {
        Divisor d = read_divisor(g, div1);
        auto res = lift_divisor_to_orientation(g, d, read_edge_list(g, unoriented), gl.max_classes);
        const char* status = res.status == LiftOutcome::Status::Lifted                   ? "Lifted"
                             : res.status == LiftOutcome::Status::NotPartiallyOrientable ? "NotPartiallyOrientable"
                                                                                         : "UnorientedSetInfeasible";
        json r = {{"status", status},
                  {"shifted", divisor_expression(g, res.shifted)},
                  {"reduced", divisor_expression(g, res.reduced)}};
        r["orientation"] = res.orientation ? json(format_orientation(g, *res.orientation)) : json(nullptr);
        emit(out, r, "orient liftdiv", gl, start);
        return res.orientation ? 0 : 1;
      }
      Divisor q = read_divisor(g, div1);
      std::optional<VertexIndex> r_vertex;
      if (!root.empty()) r_vertex = g.vertex(root);
      auto cert = effectiveness_certificate(g, q, r_vertex, gl.max_classes);
      json r = {{"effective", std::holds_alternative<SourcelessWitness>(cert)},
                {"verified", verify_certificate(g, q, cert)}};
      if (const auto* s = std::get_if<SourcelessWitness>(&cert)) {
        r["branch"] = "sourceless";
        r["orientation"] = format_orientation(g, s->orientation);
        r["effective_divisor"] = divisor_expression(g, s->effective);
      } else {
        const auto& a = std::get<AcyclicWitness>(cert);
        r["branch"] = "acyclic";
        r["orientation"] = format_orientation(g, a.orientation);
        r["chern"] = divisor_expression(g, chern_class(g, a.orientation));
        r["dominated"] = divisor_expression(g, a.dominated);
      }
      emit(out, r, "orient certify", gl, start);
      return 0;
    }
    json r = selftest_report(fixtures);
    emit(out, r, "selftest", gl, start);
    return r["passed"].get<bool>() ? 0 : 1;
  } catch (const Error& e) {
    json r = {{"schema", "1"}, {"error", {{"kind", to_string(e.kind())}, {"message", e.message()}}}};
    out << r.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return is_input_error(e.kind()) ? 2 : 1;
  }
}

}  // namespace rigidlift
