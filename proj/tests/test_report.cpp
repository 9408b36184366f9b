#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "polyext/report.hpp"

using namespace polyext;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream file(path);
  REQUIRE(file.good());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

struct TempPath {
  std::string path;
  explicit TempPath(const std::string& name) : path("./" + name) {}
  ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("levels parse and print") {
  CHECK(parse_level("orders") == VerifyLevel::orders);
  CHECK(parse_level("geometry") == VerifyLevel::geometry);
  CHECK(level_token(VerifyLevel::cgroup) == "cgroup");
  CHECK_THROWS_AS(parse_level("everything"), Error);
}

TEST_CASE("square job at relations level") {
  Job job;
  job.family = descriptor(Family::polygon, 2);
  job.s = 2;
  job.level = VerifyLevel::relations;
  JobOutcome outcome = run_job(job);
  CHECK_FALSE(outcome.fatal);
  CHECK(outcome.has_artifacts);

  const auto& r = outcome.report;
  CHECK(r["schema_version"] == kReportSchemaVersion);
  CHECK(r["job"]["name"] == "polygon(2)");
  CHECK(r["extension"]["order"] == "128");
  CHECK(r["extension"]["expected_order"] == "128");
  CHECK(r["halving"]["order"] == "64");
  for (const auto& layer : r["extension"]["layers"])
    CHECK(layer["status"] != "fail");
  CHECK(r["residues"]["extension"]["match"] == true);
  CHECK(r["residues"]["extension"]["vector"][0] == 4);
  CHECK(r["residues"]["halved"]["vector"][0] == 2);
  CHECK(r["fatal"] == false);
  CHECK_FALSE(r.contains("timings"));
}

TEST_CASE("orders level stays lightweight") {
  Job job;
  job.family = descriptor(Family::orthoplex, 3);
  job.s = 2;
  job.level = VerifyLevel::orders;
  JobOutcome outcome = run_job(job);
  CHECK_FALSE(outcome.fatal);
  const auto& r = outcome.report;
  CHECK(r["extension"]["layers"].size() == 1);
  CHECK(r["extension"]["layers"][0]["name"] == "L2");
  CHECK_FALSE(r.contains("cgroup"));
  CHECK_FALSE(r.contains("geometry"));
}

TEST_CASE("geometry level certifies the square job") {
  Job job;
  job.family = descriptor(Family::polygon, 2);
  job.s = 2;
  job.level = VerifyLevel::geometry;
  JobOutcome outcome = run_job(job);
  CHECK_FALSE(outcome.fatal);
  const auto& r = outcome.report;
  CHECK(r["cgroup"]["extension"]["status"] == "pass");
  CHECK(r["cgroup"]["halved"]["status"] == "pass");
  CHECK(r["geometry"]["extension"]["status"] == "pass");
  CHECK(r["geometry"]["halved"]["status"] == "pass");
}

TEST_CASE("reports are byte-identical across runs") {
  Job job;
  job.family = descriptor(Family::cube, 3);
  job.s = 2;
  job.level = VerifyLevel::relations;
  std::string first = report_text(run_job(job).report);
  std::string second = report_text(run_job(job).report);
  CHECK(first == second);
  CHECK(!first.empty());
  CHECK(first.back() == '\n');
}

TEST_CASE("timings appear only on request") {
  Job job;
  job.family = descriptor(Family::polygon, 2);
  job.s = 2;
  job.level = VerifyLevel::orders;
  job.timings = true;
  JobOutcome outcome = run_job(job);
  CHECK(outcome.report.contains("timings"));
}

TEST_CASE("presentation exports") {
  TempPath path("hexagon_family.txt");
  export_presentation(extension_family_presentation(descriptor(Family::polygon, 3), 2),
                      path.path);
  std::string text = slurp(path.path);
  CHECK(text.find("( r0 r1 ( r2 r1 )^2 )^4") != std::string::npos);
  Presentation back = import_presentation(path.path);
  CHECK(back.to_text() == text);

  TempPath halved("orthoplex4_halved.txt");
  export_presentation(halving_presentation(descriptor(Family::orthoplex, 4), 2), halved.path);
  CHECK(slurp(halved.path).find("( h0 r2 r3 r4 r3 r2 r1 )^4") != std::string::npos);

  TempPath bare("bare.txt");
  export_presentation(Presentation::over_involutions({"g0", "g1"}), bare.path);
  Presentation parsed = import_presentation(bare.path);
  CHECK(parsed.ngens() == 2);
  CHECK(parsed.canonical_relators().empty());
}

TEST_CASE("import failures") {
  CHECK_THROWS_AS(import_presentation("./no_such_file.txt"), Error);
}

TEST_CASE("120-cell jobs surface the recipe failure") {
  Job job;
  job.family = descriptor(Family::cell120);
  job.s = 2;
  job.level = VerifyLevel::orders;
  JobOutcome outcome = run_job(job);
  CHECK(outcome.fatal);
  CHECK_FALSE(outcome.has_artifacts);
  CHECK(outcome.report["fatal"] == true);
  REQUIRE(outcome.report.contains("error"));
  std::string what = outcome.report["error"].get<std::string>();
  CHECK(what.find("unreachable by powers of beta") != std::string::npos);
}
