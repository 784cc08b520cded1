#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "rigidlift/divisor.hpp"
#include "rigidlift/homology.hpp"
#include "rigidlift/multigraph.hpp"
#include "rigidlift/orientation.hpp"

namespace rigidlift {

// `edge <id> <tail> <head>` and `base <edge-id>` lines, `#` comments.
// Errors: ParseError (with line number) plus the build_graph errors.
Multigraph parse_graph(std::string_view text);
Multigraph load_graph(const std::filesystem::path& path);
std::string format_graph(const Multigraph& g);

// `div v1:2 v3:-1`; vertices not named are zero.
Divisor parse_divisor(const Multigraph& g, std::string_view text);
std::string format_divisor(const Multigraph& g, const Divisor& d);
// Sparse human form such as "w1 + 2w3 - w4", "0" for the zero divisor.
std::string divisor_expression(const Multigraph& g, const Divisor& d);

// `orient e1:F e2:B e3:U e4:X`; every edge must be listed.
PartialOrientation parse_orientation(const Multigraph& g, std::string_view text);
std::string format_orientation(const Multigraph& g, const PartialOrientation& u);

std::string format_cochain(const Multigraph& g, const Cochain& x);

struct MorphismSpec {
  std::filesystem::path source;
  std::filesystem::path target;
  std::map<std::string, std::string> edge_map;
};

// JSON `{"source": path, "target": path, "edge_map": {...}}`; relative graph
// paths resolve against the JSON file's directory. Errors: ParseError.
MorphismSpec load_morphism_spec(const std::filesystem::path& path);

}  // namespace rigidlift
