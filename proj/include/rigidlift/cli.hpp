#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "rigidlift/orcyc.hpp"

namespace rigidlift {

struct ReportOptions {
  bool witness = false;
  bool lift = false;
  std::size_t max_classes = kDefaultMaxClasses;
};

// JSON reports shared by the command line and the Python module. None carry
// the "schema" or "timings" fields; run_cli adds those.
nlohmann::json info_report(const Multigraph& g);
nlohmann::json rigidity_report(const OrCycMorphism& m, const ReportOptions& opt);
nlohmann::json matroid_lift_report(const Multigraph& g, const Multigraph& h, const MatroidLift& lift);
nlohmann::json isomorphism_json(const Multigraph& g, const Multigraph& h, const GraphIsomorphism& iso);

// Runs the fixture reproductions found in `fixtures`. "passed" is true iff
// every check passed.
nlohmann::json selftest_report(const std::filesystem::path& fixtures);

// Entry point behind the rigidlift executable. args excludes argv[0].
// Returns the process exit code: 0 success, 1 domain error, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rigidlift
