#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "polyext/catalog.hpp"
#include "polyext/extend.hpp"
#include "polyext/halve.hpp"

namespace polyext {

inline constexpr int kReportSchemaVersion = 1;

enum class VerifyLevel { orders, relations, cgroup, geometry };

VerifyLevel parse_level(const std::string& token);
std::string level_token(VerifyLevel level);

struct JobLimits {
  std::size_t coset_limit = 4'000'000;
  std::size_t geometry_bound = 100'000;
  std::size_t intersection_limit = 50'000'000;
  std::size_t l4_vertex_bound = 100'000;
};

struct Job {
  FamilyDescriptor family;
  int s = 2;
  VerifyLevel level = VerifyLevel::relations;
  JobLimits limits;
  bool timings = false;  // off by default so reports stay byte-identical
};

struct JobOutcome {
  nlohmann::ordered_json report;
  bool fatal = false;
  ExtensionArtifact extension;   // populated when the build succeeded
  HalvingArtifact halving;       // populated when the halving succeeded
  bool has_artifacts = false;    // both artifacts above are usable
};

JobOutcome run_job(const Job& job);

std::string report_text(const nlohmann::ordered_json& report);

// Presentation exports in the fp text format.
void export_presentation(const Presentation& p, const std::string& path);
Presentation import_presentation(const std::string& path);

}  // namespace polyext
