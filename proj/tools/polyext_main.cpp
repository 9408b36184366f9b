#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polyext/report.hpp"
#include "polyext/suite.hpp"

namespace {

using namespace polyext;

struct JobArgs {
  std::string family = "polygon";
  int p = 2;
  int n = 3;
  int s = 2;
  std::string level = "relations";
  std::size_t coset_limit = JobLimits{}.coset_limit;
  std::size_t geometry_bound = JobLimits{}.geometry_bound;
  std::size_t intersection_limit = JobLimits{}.intersection_limit;
  bool json = false;
  bool timings = false;
};

void add_family_options(CLI::App* cmd, JobArgs& args) {
  cmd->add_option("--family", args.family,
                  "family token: polygon, orthoplex, cube, icosahedron, dodecahedron, "
                  "cell24, cell600, cell120")
      ->required();
  cmd->add_option("--p", args.p, "polygon parameter p >= 2");
  cmd->add_option("--n", args.n, "orthoplex/cube dimension n >= 3");
  cmd->add_option("--s", args.s, "extension parameter s >= 2");
}

void add_job_options(CLI::App* cmd, JobArgs& args) {
  add_family_options(cmd, args);
  cmd->add_option("--level", args.level, "orders | relations | cgroup | geometry")
      ->check(CLI::IsMember({"orders", "relations", "cgroup", "geometry"}));
  cmd->add_option("--coset-limit", args.coset_limit, "coset enumeration allocation limit");
  cmd->add_option("--geometry-bound", args.geometry_bound, "max group order for geometry checks");
  cmd->add_option("--intersection-limit", args.intersection_limit,
                  "node budget per subgroup intersection");
  cmd->add_flag("--json", args.json, "emit the full JSON report");
  cmd->add_flag("--timings", args.timings, "include wall-clock timings in the report");
}

Job make_job(const JobArgs& args, VerifyLevel level) {
  Job job;
  job.family = descriptor_by_name(args.family, args.p, args.n);
  job.s = args.s;
  job.level = level;
  job.limits.coset_limit = args.coset_limit;
  job.limits.geometry_bound = args.geometry_bound;
  job.limits.intersection_limit = args.intersection_limit;
  job.timings = args.timings;
  return job;
}

void print_layers(const nlohmann::ordered_json& layers) {
  for (const auto& layer : layers) {
    std::cout << "  " << layer["name"].get<std::string>() << " "
              << layer["status"].get<std::string>();
    const std::string detail = layer["detail"].get<std::string>();
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
  }
}

int print_outcome(const JobOutcome& outcome, bool json) {
  if (json) {
    std::cout << report_text(outcome.report);
    return outcome.fatal ? 1 : 0;
  }
  const auto& r = outcome.report;
  if (r.contains("error")) {
    std::cout << "error: " << r["error"].get<std::string>() << "\n";
    return 1;
  }
  std::cout << r["job"]["name"].get<std::string>() << " s=" << r["job"]["s"].get<int>()
            << " level=" << r["job"]["level"].get<std::string>() << "\n";
  std::cout << "extension: order " << r["extension"]["order"].get<std::string>() << " expected "
            << r["extension"]["expected_order"].get<std::string>() << " (degree "
            << r["extension"]["degree"].get<int>() << ")\n";
  print_layers(r["extension"]["layers"]);
  if (r["extension"].contains("recipe_matches_family"))
    std::cout << "  recipe matches family table: "
              << (r["extension"]["recipe_matches_family"].get<bool>() ? "yes" : "no") << "\n";
  if (r["halving"].contains("error")) {
    std::cout << "halving error: " << r["halving"]["error"].get<std::string>() << "\n";
  } else {
    std::cout << "halved: order " << r["halving"]["order"].get<std::string>() << " expected "
              << r["halving"]["expected_order"].get<std::string>() << "\n";
    print_layers(r["halving"]["layers"]);
  }
  if (r.contains("residues")) {
    const auto& res = r["residues"];
    std::cout << "residues:\n";
    for (const auto& [key, value] : res.items()) {
      std::cout << "  " << key;
      if (value.is_object() && value.contains("vector")) {
        if (value.contains("subgroup"))
          std::cout << " <" << value["subgroup"].get<std::string>() << ">";
        std::cout << " {4,4}_(" << value["vector"][0].get<int>() << ","
                  << value["vector"][1].get<int>() << ")";
        if (value.contains("match"))
          std::cout << (value["match"].get<bool>() ? " as expected" : " MISMATCH");
      } else {
        std::cout << " " << value.dump();
      }
      std::cout << "\n";
    }
  }
  if (r.contains("cgroup"))
    std::cout << "intersection property: extension "
              << r["cgroup"]["extension"]["status"].get<std::string>() << ", halved "
              << r["cgroup"]["halved"]["status"].get<std::string>() << "\n";
  if (r.contains("geometry"))
    std::cout << "geometry: extension " << r["geometry"]["extension"]["status"].get<std::string>()
              << ", halved " << r["geometry"]["halved"]["status"].get<std::string>() << "\n";
  std::cout << (outcome.fatal ? "FATAL" : "OK") << "\n";
  return outcome.fatal ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extension polytopes over point-reflection catalogs and their halved hypertopes"};
  app.require_subcommand(1);

  auto* catalog_cmd = app.add_subcommand("catalog", "list the base polytope catalog");
  int max_n = 6, max_p = 8;
  bool catalog_json = false;
  catalog_cmd->add_option("--max-n", max_n, "largest orthoplex/cube dimension");
  catalog_cmd->add_option("--max-p", max_p, "largest polygon parameter");
  catalog_cmd->add_flag("--json", catalog_json, "emit JSON rows");

  JobArgs build_args;
  auto* build_cmd = app.add_subcommand("build", "construct an extension and report the orders");
  add_job_options(build_cmd, build_args);

  JobArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "construct and verify an extension at the chosen level");
  add_job_options(verify_cmd, verify_args);

  JobArgs halve_args;
  auto* halve_cmd = app.add_subcommand("halve", "report the halved hypertope of an extension");
  add_job_options(halve_cmd, halve_args);

  JobArgs export_args;
  std::string export_what = "family";
  std::string export_out;
  auto* export_cmd = app.add_subcommand("export", "write a presentation in the text format");
  add_family_options(export_cmd, export_args);
  export_cmd->add_option("--what", export_what, "family | recipe | halved")
      ->check(CLI::IsMember({"family", "recipe", "halved"}));
  export_cmd->add_option("--out", export_out, "output path")->required();

  auto* suite_cmd = app.add_subcommand("suite", "run the acceptance suite");
  (void)suite_cmd;

  CLI11_PARSE(app, argc, argv);

  try {
    if (catalog_cmd->parsed()) {
      auto rows = polyext::catalog_all(max_n, max_p);
      if (catalog_json) {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& d : rows) {
          out.push_back({{"name", d.name},
                         {"schlafli", d.schlafli},
                         {"rank", d.rank},
                         {"vertex_count", d.vertex_count},
                         {"order", d.expected_order.str()},
                         {"alpha_exponent", d.alpha_exponent},
                         {"beta_transversal", d.beta_transversal}});
        }
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& d : rows) {
          std::cout << d.name << "  {";
          for (std::size_t i = 0; i < d.schlafli.size(); ++i)
            std::cout << (i ? "," : "") << d.schlafli[i];
          std::cout << "}  vertices " << d.vertex_count << "  order " << d.expected_order.str()
                    << "\n";
        }
      }
      return 0;
    }
    if (build_cmd->parsed())
      return print_outcome(run_job(make_job(build_args, VerifyLevel::orders)), build_args.json);
    if (verify_cmd->parsed())
      return print_outcome(run_job(make_job(verify_args, parse_level(verify_args.level))),
                           verify_args.json);
    if (halve_cmd->parsed())
      return print_outcome(run_job(make_job(halve_args, VerifyLevel::orders)), halve_args.json);
    if (export_cmd->parsed()) {
      FamilyDescriptor d = descriptor_by_name(export_args.family, export_args.p, export_args.n);
      Presentation pres;
      if (export_what == "family") {
        pres = extension_family_presentation(d, export_args.s);
      } else if (export_what == "halved") {
        pres = halving_presentation(d, export_args.s);
      } else {
        RealizedPolytope base = realize(d);
        DiagonalClassification diag = diagonal_classes(base);
        pres = extension_presentation(base, diag, export_args.s);
      }
      export_presentation(pres, export_out);
      std::cout << "wrote " << export_out << "\n";
      return 0;
    }
    if (suite_cmd->parsed()) return polyext::run_acceptance_suite(std::cout) == 0 ? 0 : 1;
  } catch (const polyext::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
