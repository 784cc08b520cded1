#include "rigidlift/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rigidlift/error.hpp"

namespace rigidlift {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream ss{std::string(line)};
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

std::pair<std::string, std::string> split_pair(const std::string& tok) {
  auto pos = tok.rfind(':');
  if (pos == std::string::npos || pos == 0 || pos + 1 == tok.size())
    fail(ErrorKind::ParseError, "expected <name>:<value>, got '" + tok + "'");
  return {tok.substr(0, pos), tok.substr(pos + 1)};
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) fail(ErrorKind::ParseError, "not an integer: '" + s + "'");
  return v;
}

// Body tokens after the keyword, for one-line formats.
std::vector<std::string> body(std::string_view text, const std::string& keyword) {
  auto t = tokens(text);
  if (t.empty() || t.front() != keyword) fail(ErrorKind::ParseError, "expected a line starting with '" + keyword + "'");
  t.erase(t.begin());
  return t;
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  std::vector<EdgeSpec> edges;
  std::string base;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto t = tokens(line);
    if (t.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (t[0] == "edge") {
      if (t.size() != 4) fail(ErrorKind::ParseError, where + "expected 'edge <id> <tail> <head>'");
      edges.push_back({t[1], t[2], t[3]});
    } else if (t[0] == "base") {
      if (t.size() != 2) fail(ErrorKind::ParseError, where + "expected 'base <edge-id>'");
      if (!base.empty()) fail(ErrorKind::ParseError, where + "second base line");
      base = t[1];
    } else {
      fail(ErrorKind::ParseError, where + "unknown record '" + t[0] + "'");
    }
  }
  if (base.empty()) fail(ErrorKind::MissingBaseEdge, "no base line");
  return Multigraph::build(edges, base);
}

Multigraph load_graph(const std::filesystem::path& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.message());
  }
}

std::string format_graph(const Multigraph& g) {
  std::ostringstream out;
  for (const auto& e : g.edge_specs()) out << "edge " << e.id << ' ' << e.tail << ' ' << e.head << '\n';
  out << "base " << g.edge_id(g.base_edge()) << '\n';
  return out.str();
}

Divisor parse_divisor(const Multigraph& g, std::string_view text) {
  Divisor d(g.vertex_count());
  for (const auto& tok : body(text, "div")) {
    auto [v, k] = split_pair(tok);
    if (!g.has_vertex(v)) fail(ErrorKind::UnknownVertex, "no vertex '" + v + "'");
    d[g.vertex(v)] += parse_int(k);
  }
  return d;
}

std::string format_divisor(const Multigraph& g, const Divisor& d) {
  std::string out = "div";
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (d[v] != 0) out += " " + g.vertex_id(v) + ":" + std::to_string(d[v]);
  return out;
}

std::string divisor_expression(const Multigraph& g, const Divisor& d) {
  std::string out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    std::int64_t k = d[v];
    if (k == 0) continue;
    if (out.empty()) {
      if (k < 0) out += "-";
    } else {
      out += k < 0 ? " - " : " + ";
    }
    std::int64_t a = k < 0 ? -k : k;
    if (a != 1) out += std::to_string(a);
    out += g.vertex_id(v);
  }
  return out.empty() ? "0" : out;
}

PartialOrientation parse_orientation(const Multigraph& g, std::string_view text) {
  std::vector<EdgeState> s(g.edge_count(), EdgeState::Forward);
  std::set<EdgeIndex> seen;
  for (const auto& tok : body(text, "orient")) {
    auto [e, k] = split_pair(tok);
    if (!g.has_edge(e)) fail(ErrorKind::UnknownEdge, "no edge '" + e + "'");
    EdgeIndex i = g.edge(e);
    if (!seen.insert(i).second) fail(ErrorKind::ParseError, "edge '" + e + "' listed twice");
    if (k == "F") {
      s[i] = EdgeState::Forward;
    } else if (k == "B") {
      s[i] = EdgeState::Backward;
    } else if (k == "U") {
      s[i] = EdgeState::Unoriented;
    } else if (k == "X") {
      s[i] = EdgeState::Bioriented;
    } else {
      fail(ErrorKind::ParseError, "edge state must be F, B, U or X, got '" + k + "'");
    }
  }
  if (static_cast<int>(seen.size()) != g.edge_count()) fail(ErrorKind::ParseError, "orientation must list every edge");
  return PartialOrientation(s);
}

std::string format_orientation(const Multigraph& g, const PartialOrientation& u) {
  std::string out = "orient";
  static const char* names[] = {"F", "B", "U", "X"};
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) out += " " + g.edge_id(e) + ":" + names[static_cast<int>(u[e])];
  return out;
}

std::string format_cochain(const Multigraph& g, const Cochain& x) {
  std::string out = "cochain";
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (x[e] == 0) continue;
    out += " " + g.edge_id(e) + ":" + numerator(x[e]).str() + "/" + denominator(x[e]).str();
  }
  return out;
}

MorphismSpec load_morphism_spec(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.message());
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
  MorphismSpec spec;
  auto dir = path.parent_path();
  auto resolve = [&](const char* key) -> std::filesystem::path {
    if (!j.contains(key)) return {};
    if (!j[key].is_string()) fail(ErrorKind::ParseError, path.string() + ": '" + key + "' must be a string");
    std::filesystem::path p = j[key].get<std::string>();
    return p.is_absolute() ? p : dir / p;
  };
  spec.source = resolve("source");
  spec.target = resolve("target");
  if (!j.contains("edge_map") || !j["edge_map"].is_object())
    fail(ErrorKind::ParseError, path.string() + ": missing 'edge_map' object");
  for (auto& [k, v] : j["edge_map"].items()) {
    if (!v.is_string()) fail(ErrorKind::ParseError, path.string() + ": edge_map values must be strings");
    spec.edge_map[k] = v.get<std::string>();
  }
  return spec;
}

}  // namespace rigidlift
