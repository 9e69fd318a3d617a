#include <string>
#include <vector>

#include "doctest.h"

#include "gray2/json_io.hpp"
#include "gray2/suites.hpp"

using namespace gray2;

TEST_CASE("probe family") {
  const std::vector<NamedProbe> all = default_probes();
  REQUIRE(all.size() == 9);
  const std::vector<std::string> names = {"[0]()",    "[1](0)",   "[1](1)",
                                          "[2](0,0)", "[2](0,1)", "[2](1,0)",
                                          "[2](1,1)", "cell^[1]", "chains"};
  for (size_t i = 0; i < names.size(); ++i) CHECK(all[i].name == names[i]);

  const auto some = select_probes({"[1](0)", "chains"});
  REQUIRE(some.size() == 2);
  CHECK(some[0].name == "[1](0)");
  CHECK(some[1].name == "chains");

  CHECK_THROWS_AS(select_probes({"nothere"}), std::invalid_argument);
}

TEST_CASE("suites pass on the real constructions") {
  Config cfg;
  // small probes keep this fast; the full family runs in the binary checks
  cfg.probe_names = {"[1](0)", "[1](1)"};
  for (const char* name : {"graytenscolim", "phieq", "odot", "mates"}) {
    const std::vector<RunReport> reports = run_suite(name, cfg);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].suite == name);
    CHECK(reports[0].pass);
    CHECK(!reports[0].checks.empty());
    for (const CheckResult& c : reports[0].checks) CHECK(c.pass);
  }
}

TEST_CASE("corrupt runs fail and explain themselves") {
  Config cfg;
  cfg.probe_names = {"[1](0)", "[1](1)"};
  cfg.corrupt = true;
  for (const char* name : {"graytenscolim", "phieq", "odot", "mates"}) {
    const std::vector<RunReport> reports = run_suite(name, cfg);
    REQUIRE(reports.size() == 1);
    CHECK(!reports[0].pass);
    bool witnessed = false;
    for (const CheckResult& c : reports[0].checks)
      if (!c.pass && !c.detail.empty()) witnessed = true;
    CHECK(witnessed);
  }
}

TEST_CASE("report rendering") {
  Config cfg;
  cfg.probe_names = {"[1](0)"};
  const std::vector<RunReport> reports = run_suite("odot", cfg);

  const std::string text = report_text(reports);
  CHECK(text.find("suite odot: PASS") != std::string::npos);
  CHECK(text.find(": PASS (") != std::string::npos);

  const std::string js = report_json(reports);
  const nlohmann::json parsed = nlohmann::json::parse(js);
  REQUIRE(parsed.is_array());
  CHECK(parsed[0]["suite"] == "odot");
  CHECK(parsed[0]["pass"] == true);
  CHECK(parsed[0]["checks"].is_array());

  // same reports, same bytes
  CHECK(report_json(run_suite("odot", cfg)) == js);
  CHECK(report_text(run_suite("odot", cfg)) == text);
}

TEST_CASE("unknown suite name") {
  CHECK_THROWS_AS(run_suite("nothere", Config{}), std::invalid_argument);
}
