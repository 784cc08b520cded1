#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "generators.hpp"
#include "rigidlift/error.hpp"
#include "rigidlift/io.hpp"

using namespace rigidlift;

namespace {

std::string fixture_path(const char* name) { return std::string(RIGIDLIFT_TEST_FIXTURES) + "/" + name; }

ErrorKind parse_kind(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

std::string parse_message(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const Error& e) {
    return e.message();
  }
  return {};
}

}  // namespace

TEST_CASE("graph text") {
  Multigraph g = parse_graph("# comment\nedge b y x   # trailing\n\nedge a x y\nbase b\n");
  CHECK(g.edge_count() == 2);
  CHECK(g.base_edge() == g.edge("b"));
  CHECK(format_graph(g) == "edge a x y\nedge b y x\nbase b\n");
  CHECK(parse_graph(format_graph(g)) == g);
}

TEST_CASE("graph round trip on random graphs") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    Multigraph g = gen::random_orcyc_graph(rng, 7, 12);
    CHECK(parse_graph(format_graph(g)) == g);
  }
}

TEST_CASE("graph parse errors") {
  CHECK(parse_kind("edge a x y\n") == ErrorKind::MissingBaseEdge);
  CHECK(parse_kind("edge a x\nbase a\n") == ErrorKind::ParseError);
  CHECK(parse_kind("edge a x y\nbase a\nbase a\n") == ErrorKind::ParseError);
  CHECK(parse_kind("vertex x\n") == ErrorKind::ParseError);
  CHECK(parse_kind("edge a x x\nbase a\n") == ErrorKind::LoopEdge);
  CHECK(parse_message("edge a x y\nbogus\n").rfind("line 2:", 0) == 0);
}

TEST_CASE("load_graph names the file") {
  try {
    load_graph(fixture_path("missing.graph"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.message()).find("missing.graph") != std::string::npos);
  }
}

TEST_CASE("divisors") {
  Multigraph g = load_graph(fixture_path("G.graph"));
  Divisor d = parse_divisor(g, "div v1:2 v3:-1 v1:1");
  CHECK(d[g.vertex("v1")] == 3);
  CHECK(d[g.vertex("v3")] == -1);
  CHECK(format_divisor(g, d) == "div v1:3 v3:-1");
  CHECK(parse_divisor(g, format_divisor(g, d)) == d);
  CHECK(divisor_expression(g, d) == "3v1 - v3");
  CHECK(divisor_expression(g, -Divisor::point(g, 1)) == "-v2");
  CHECK(divisor_expression(g, Divisor::zero(g)) == "0");
  CHECK(format_divisor(g, Divisor::zero(g)) == "div");
  CHECK_THROWS_AS(parse_divisor(g, "div v9:1"), Error);
  CHECK_THROWS_AS(parse_divisor(g, "div v1:x"), Error);
  CHECK_THROWS_AS(parse_divisor(g, "div v1"), Error);
  CHECK_THROWS_AS(parse_divisor(g, "v1:1"), Error);
}

TEST_CASE("orientations") {
  Multigraph g = load_graph(fixture_path("theta.graph"));
  PartialOrientation u = parse_orientation(g, "orient a3:X a1:F a2:U");
  CHECK(u[g.edge("a1")] == EdgeState::Forward);
  CHECK(u[g.edge("a2")] == EdgeState::Unoriented);
  CHECK(u[g.edge("a3")] == EdgeState::Bioriented);
  CHECK(format_orientation(g, u) == "orient a1:F a2:U a3:X");
  CHECK(parse_orientation(g, format_orientation(g, u)) == u);
  CHECK_THROWS_AS(parse_orientation(g, "orient a1:F a2:F"), Error);
  CHECK_THROWS_AS(parse_orientation(g, "orient a1:F a2:F a3:Q"), Error);
  CHECK_THROWS_AS(parse_orientation(g, "orient a1:F a1:B a2:F a3:F"), Error);
}

TEST_CASE("cochains") {
  Multigraph g = load_graph(fixture_path("theta.graph"));
  Cochain x(g.edge_count());
  x[1] = Rational(2, 3);
  CHECK(format_cochain(g, x) == "cochain a2:2/3");
}

TEST_CASE("morphism specs resolve relative paths") {
  MorphismSpec s = load_morphism_spec(fixture_path("G_H.json"));
  CHECK(s.source == std::filesystem::path(fixture_path("G.graph")));
  CHECK(s.target == std::filesystem::path(fixture_path("H.graph")));
  CHECK(s.edge_map.size() == 7);
  CHECK(s.edge_map.at("e4") == "r4");

  auto dir = std::filesystem::temp_directory_path() / "rigidlift_io_test";
  std::filesystem::create_directories(dir);
  auto write = [&](const char* name, const char* text) {
    std::ofstream(dir / name) << text;
    return dir / name;
  };
  CHECK_THROWS_AS(load_morphism_spec(write("a.json", "{not json")), Error);
  CHECK_THROWS_AS(load_morphism_spec(write("b.json", R"({"source": "x"})")), Error);
  CHECK_THROWS_AS(load_morphism_spec(write("c.json", R"({"edge_map": {"e1": 3}})")), Error);
  std::filesystem::remove_all(dir);
}
