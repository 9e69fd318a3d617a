#pragma once

#include <string>
#include <vector>

#include "gray2/twocat.hpp"

namespace gray2 {

// Shared knobs for the verification suites and the command line.
struct Config {
  int bound = 8;
  long long budget = 10'000'000;
  // Names from the default probe family; empty means all of them.
  std::vector<std::string> probe_names;
  // Inject a known fault into each suite so a working checker must fail.
  bool corrupt = false;
};

// The registered probe family: the seven small cell shapes, the cotensor of
// the 2-cell shape by the interval, and the two-chain poset bed.
std::vector<NamedProbe> default_probes();
// Subset of the family by name; throws std::invalid_argument on unknown names.
std::vector<NamedProbe> select_probes(const std::vector<std::string>& names);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RunReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass = true;

  void add(std::string name, bool ok, std::string detail);
};

RunReport run_segal(const Config& cfg);
RunReport run_graytenscolim(const Config& cfg);
RunReport run_phieq(const Config& cfg);
RunReport run_odot(const Config& cfg);
RunReport run_mates(const Config& cfg);

// Dispatch by suite name; "all" runs every suite in the order above.
std::vector<RunReport> run_suite(const std::string& name, const Config& cfg);

// Deterministic renderings: same reports, same bytes.
std::string report_text(const std::vector<RunReport>& reports);
std::string report_json(const std::vector<RunReport>& reports);

}  // namespace gray2
