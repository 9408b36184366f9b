#include "polyext/report.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "polyext/verify.hpp"

namespace polyext {

using nlohmann::ordered_json;

VerifyLevel parse_level(const std::string& token) {
  if (token == "orders") return VerifyLevel::orders;
  if (token == "relations") return VerifyLevel::relations;
  if (token == "cgroup") return VerifyLevel::cgroup;
  if (token == "geometry") return VerifyLevel::geometry;
  throw Error("unknown verification level: " + token);
}

std::string level_token(VerifyLevel level) {
  switch (level) {
    case VerifyLevel::orders: return "orders";
    case VerifyLevel::relations: return "relations";
    case VerifyLevel::cgroup: return "cgroup";
    case VerifyLevel::geometry: return "geometry";
  }
  throw Error("unknown verification level");
}

namespace {

bool at_least(VerifyLevel level, VerifyLevel floor) {
  return static_cast<int>(level) >= static_cast<int>(floor);
}

const char* layer_status_token(LayerStatus status) {
  switch (status) {
    case LayerStatus::pass: return "pass";
    case LayerStatus::fail: return "fail";
    case LayerStatus::skip: return "skip";
  }
  return "?";
}

ordered_json layers_json(const LayeredReport& report) {
  ordered_json out = ordered_json::array();
  for (const auto& layer : report.layers) {
    ordered_json entry;
    entry["name"] = layer.name;
    entry["status"] = layer_status_token(layer.status);
    entry["detail"] = layer.detail;
    out.push_back(entry);
  }
  return out;
}

ordered_json relators_json(const Presentation& p) {
  ordered_json out = ordered_json::array();
  for (const auto& r : p.relators) out.push_back(r.render(p.labels));
  return out;
}

const char* check_status_token(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

}  // namespace

JobOutcome run_job(const Job& job) {
  JobOutcome out;
  ordered_json& report = out.report;
  report["schema_version"] = kReportSchemaVersion;
  report["job"] = {{"family", family_token(job.family.family)},
                   {"param", job.family.param},
                   {"name", job.family.name},
                   {"s", job.s},
                   {"level", level_token(job.level)},
                   {"limits",
                    {{"coset_limit", job.limits.coset_limit},
                     {"geometry_bound", job.limits.geometry_bound},
                     {"intersection_limit", job.limits.intersection_limit},
                     {"l4_vertex_bound", job.limits.l4_vertex_bound}}}};
  ordered_json timings;

  ExtensionArtifact E;
  auto start = std::chrono::steady_clock::now();
  try {
    E = build_extension(job.family, job.s);
  } catch (const Error& e) {
    report["error"] = e.what();
    report["fatal"] = true;
    out.fatal = true;
    return out;
  }
  timings["build_ms"] = elapsed_ms(start);

  const auto& d = E.base.descriptor;
  report["catalog"] = {{"name", d.name},
                       {"schlafli", d.schlafli},
                       {"rank", d.rank},
                       {"vertex_count", d.vertex_count},
                       {"base_order", d.expected_order.str()},
                       {"alpha_exponent", d.alpha_exponent},
                       {"beta_transversal", d.beta_transversal},
                       {"squared_exponents", d.squared_exponents}};

  {
    ordered_json classes = ordered_json::array();
    for (const auto& cls : E.diagonals.classes) classes.push_back(cls.size());
    report["diagonals"] = {{"class_count", E.diagonals.classes.size()},
                           {"class_sizes", classes},
                           {"antipodal_index", E.diagonals.antipodal_index},
                           {"computed_minima", E.diagonals.beta_reps},
                           {"published_transversal", d.beta_transversal}};
  }

  VerifyLimits vl{job.limits.coset_limit, job.limits.l4_vertex_bound};
  bool fatal = false;

  {
    ordered_json ext;
    ext["s"] = job.s;
    ext["degree"] = E.gens[0].degree();
    ext["q"] = E.q;
    ext["expected_order"] = E.expected_order.str();
    ext["order"] = E.group.order().str();
    ext["relators"] = relators_json(E.presentation);
    start = std::chrono::steady_clock::now();
    LayeredReport layers;
    if (job.level == VerifyLevel::orders) {
      LayerResult l2{"L2", LayerStatus::pass, ""};
      if (E.group.order() != E.expected_order) {
        l2.status = LayerStatus::fail;
        l2.detail = "concrete order " + E.group.order().str() + " != expected " +
                    E.expected_order.str();
      }
      layers.layers.push_back(l2);
    } else {
      layers = verify_extension(E, vl);
      ext["recipe_relators"] = relators_json(E.recipe);
      ext["recipe_matches_family"] = recipe_matches_family(E);
    }
    timings["extension_verify_ms"] = elapsed_ms(start);
    ext["layers"] = layers_json(layers);
    fatal = fatal || layers.has_failure();
    report["extension"] = ext;
  }

  start = std::chrono::steady_clock::now();
  HalvingArtifact H;
  bool have_halving = true;
  try {
    H = realize_halving(E);
  } catch (const Error& e) {
    report["halving"] = {{"error", e.what()}};
    fatal = true;
    have_halving = false;
  }
  if (have_halving) {
    ordered_json half;
    half["expected_order"] = H.expected_order.str();
    half["order"] = H.group.order().str();
    half["diagram"] = H.diagram;
    half["relators"] = relators_json(H.presentation);
    LayeredReport layers;
    if (job.level == VerifyLevel::orders) {
      LayerResult l2{"L2", LayerStatus::pass, ""};
      if (H.group.order() != H.expected_order) {
        l2.status = LayerStatus::fail;
        l2.detail = "concrete order " + H.group.order().str() + " != expected " +
                    H.expected_order.str();
      }
      layers.layers.push_back(l2);
    } else {
      layers = verify_halving(H, E, vl);
    }
    half["layers"] = layers_json(layers);
    fatal = fatal || layers.has_failure();
    report["halving"] = half;
  }
  timings["halving_ms"] = elapsed_ms(start);

  if (at_least(job.level, VerifyLevel::relations) && have_halving) {
    const int s2 = 2 * job.s;
    if (d.family == Family::polygon && d.param == 2) {
      ordered_json residues;
      try {
        auto ev = classify_torus_44(E.group, E.gens);
        bool match = ev == std::pair<int, int>(s2, 0);
        residues["extension"] = {{"vector", {ev.first, ev.second}},
                                 {"expected", {s2, 0}},
                                 {"match", match}};
        fatal = fatal || !match;
        std::vector<Permutation> hg{H.gens[0], H.gens[2], H.gens[1]};
        auto hv = classify_torus_44(PermGroup(hg), hg);
        match = hv == std::pair<int, int>(job.s, job.s);
        residues["halved"] = {{"vector", {hv.first, hv.second}},
                              {"expected", {job.s, job.s}},
                              {"match", match}};
        fatal = fatal || !match;
      } catch (const Error& e) {
        residues["error"] = e.what();
        fatal = true;
      }
      report["residues"] = residues;
    } else if (d.family == Family::cube) {
      ordered_json residues;
      try {
        std::vector<Permutation> eg{E.gens[0], E.gens[1], E.gens[2]};
        auto ev = classify_torus_44(PermGroup(eg), eg);
        residues["extension"] = {{"subgroup", "r0 r1 r2"}, {"vector", {ev.first, ev.second}}};
        std::vector<Permutation> hg{H.gens[0], H.gens[2], H.gens[1]};
        auto hv = classify_torus_44(PermGroup(hg), hg);
        residues["halved"] = {{"subgroup", "h0 r2 r1"}, {"vector", {hv.first, hv.second}}};
      } catch (const Error& e) {
        residues["error"] = e.what();
        fatal = true;
      }
      report["residues"] = residues;
    } else if (d.family == Family::cell24) {
      const int degree = E.gens[0].degree();
      Word chain{0, 1, 2, 3, 4, 3, 2, 1};
      Word word;
      for (int k = 0; k < s2; ++k) word.insert(word.end(), chain.begin(), chain.end());
      bool ext_holds = evaluate(word, E.gens, degree).is_identity();
      Word hchain{0, 2, 3, 4, 3, 2, 1};
      Word hword;
      for (int k = 0; k < s2; ++k) hword.insert(hword.end(), hchain.begin(), hchain.end());
      bool halved_holds = evaluate(hword, H.gens, degree).is_identity();
      report["residues"] = {{"chain_exponent", s2},
                            {"extension_chain_relator_holds", ext_holds},
                            {"halved_chain_relator_holds", halved_holds}};
    }
  }

  if (at_least(job.level, VerifyLevel::cgroup) && have_halving) {
    ordered_json cg;
    start = std::chrono::steady_clock::now();
    IntersectionPropertyResult er = intersection_property(E.gens, job.limits.intersection_limit);
    cg["extension"] = {{"status", check_status_token(er.status)}, {"witness", er.witness}};
    fatal = fatal || er.status == CheckStatus::fail;
    IntersectionPropertyResult hr = intersection_property(H.gens, job.limits.intersection_limit);
    cg["halved"] = {{"status", check_status_token(hr.status)}, {"witness", hr.witness}};
    fatal = fatal || hr.status == CheckStatus::fail;
    timings["cgroup_ms"] = elapsed_ms(start);
    report["cgroup"] = cg;
  }

  if (at_least(job.level, VerifyLevel::geometry) && have_halving) {
    ordered_json geometry;
    start = std::chrono::steady_clock::now();
    auto run_one = [&](const std::vector<Permutation>& gens, const Integer& order) {
      ordered_json entry;
      if (order > Integer(job.limits.geometry_bound)) {
        entry["status"] = "skipped";
        entry["detail"] = "group order exceeds geometry bound";
        return entry;
      }
      CosetGeometry geo = build_geometry(gens, GeometryLimits{job.limits.geometry_bound});
      GeometryProperties props = geometry_properties(geo);
      entry["status"] = props.thin && props.residually_connected && props.flag_transitive
                            ? "pass"
                            : "fail";
      entry["thin"] = props.thin;
      entry["residually_connected"] = props.residually_connected;
      entry["flag_transitive"] = props.flag_transitive;
      entry["chambers"] = props.chambers;
      return entry;
    };
    geometry["extension"] = run_one(E.gens, E.group.order());
    geometry["halved"] = run_one(H.gens, H.group.order());
    fatal = fatal || geometry["extension"]["status"] == "fail" ||
            geometry["halved"]["status"] == "fail";
    timings["geometry_ms"] = elapsed_ms(start);
    report["geometry"] = geometry;
  }

  if (job.timings) report["timings"] = timings;
  report["fatal"] = fatal;
  out.fatal = fatal;
  out.extension = std::move(E);
  if (have_halving) {
    out.halving = std::move(H);
    out.has_artifacts = true;
  }
  return out;
}

std::string report_text(const ordered_json& report) { return report.dump(2) + "\n"; }

void export_presentation(const Presentation& p, const std::string& path) {
  std::ofstream file(path);
  if (!file) throw Error("cannot open " + path + " for writing");
  file << p.to_text();
  if (!file) throw Error("failed writing " + path);
}

Presentation import_presentation(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return Presentation::from_text(buffer.str());
}

}  // namespace polyext
