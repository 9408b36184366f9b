#include <doctest.h>

#include <utility>
#include <vector>

#include "polyext/extend.hpp"
#include "polyext/halve.hpp"
#include "polyext/verify.hpp"

using namespace polyext;

namespace {

// {4,4} toroidal quotient groups, built independently by coset enumeration.
std::vector<Permutation> torus_gens(const Word& extra, int repeats, std::size_t expected) {
  Presentation p = Presentation::over_involutions({"g0", "g1", "g2"});
  p.add(RelExpr::pow(RelExpr::seq({RelExpr::atom(0), RelExpr::atom(1)}), 4));
  p.add(RelExpr::pow(RelExpr::seq({RelExpr::atom(1), RelExpr::atom(2)}), 4));
  p.add(RelExpr::pow(RelExpr::seq({RelExpr::atom(0), RelExpr::atom(2)}), 2));
  p.add(RelExpr::pow(RelExpr::word(extra), repeats));
  CosetTable t = todd_coxeter(p, {}, 200000);
  REQUIRE(t.status == CosetTable::Status::complete);
  REQUIRE(t.index == expected);
  return t.coset_permutations();
}

}  // namespace

TEST_CASE("torus classification from translation orders") {
  for (int a : {2, 3, 4}) {
    auto gens = torus_gens(Word{0, 1, 2, 1}, a, static_cast<std::size_t>(8) * a * a);
    CHECK(classify_torus_44(PermGroup(gens), gens) == std::pair<int, int>(a, 0));
  }
  for (int a : {2, 3, 4}) {
    auto gens = torus_gens(Word{0, 1, 2}, 2 * a, static_cast<std::size_t>(16) * a * a);
    CHECK(classify_torus_44(PermGroup(gens), gens) == std::pair<int, int>(a, a));
  }
}

TEST_CASE("torus classification rejects other types") {
  std::vector<Permutation> bad{Permutation::from_cycles(3, {{0, 1}}),
                               Permutation::from_cycles(3, {{1, 2}}),
                               Permutation::from_cycles(3, {{0, 2}})};
  CHECK_THROWS_AS(classify_torus_44(PermGroup(bad), bad), Error);
}

TEST_CASE("intersection property") {
  // A string Coxeter generating set passes.
  std::vector<Permutation> string{Permutation::from_cycles(3, {{0, 1}}),
                                  Permutation::from_cycles(3, {{1, 2}})};
  CHECK(intersection_property(string).status == CheckStatus::pass);

  // All three transpositions of S3 fail: <(01)> meets <(02),(12)> beyond <>.
  std::vector<Permutation> bad{Permutation::from_cycles(3, {{0, 1}}),
                               Permutation::from_cycles(3, {{0, 2}}),
                               Permutation::from_cycles(3, {{1, 2}})};
  IntersectionPropertyResult r = intersection_property(bad);
  CHECK(r.status == CheckStatus::fail);
  CHECK(!r.witness.empty());

  // The square extension's generators form a C-group.
  ExtensionArtifact E = build_extension(descriptor(Family::polygon, 2), 2);
  CHECK(intersection_property(E.gens).status == CheckStatus::pass);

  // A tiny node budget trips to skipped, never to fail.
  CHECK(intersection_property(bad, 1).status == CheckStatus::skipped);
}

TEST_CASE("coset geometry of the square extension") {
  ExtensionArtifact E = build_extension(descriptor(Family::polygon, 2), 2);
  CosetGeometry geo = build_geometry(E.gens);
  REQUIRE(geo.cosets.size() == 3);
  GeometryProperties props = geometry_properties(geo);
  CHECK(props.thin);
  CHECK(props.residually_connected);
  CHECK(props.flag_transitive);
  CHECK(props.chambers > 0);

  PermGroup borel = geo.parabolics[0];
  for (std::size_t i = 1; i < geo.parabolics.size(); ++i)
    borel = subgroup_intersection(borel, geo.parabolics[i]);
  CHECK(Integer(props.chambers) * borel.order() == E.group.order());
}

TEST_CASE("halved geometry certifies as well") {
  ExtensionArtifact E = build_extension(descriptor(Family::polygon, 2), 2);
  HalvingArtifact H = realize_halving(E);
  CosetGeometry geo = build_geometry(H.gens);
  GeometryProperties props = geometry_properties(geo);
  CHECK(props.thin);
  CHECK(props.residually_connected);
  CHECK(props.flag_transitive);
}

TEST_CASE("broken parabolic is detected") {
  ExtensionArtifact E = build_extension(descriptor(Family::polygon, 2), 2);
  CosetGeometry broken = build_geometry(E.gens, {}, 2, {E.gens[0]});
  GeometryProperties props = geometry_properties(broken);
  CHECK_FALSE((props.thin && props.residually_connected && props.flag_transitive));
}

TEST_CASE("geometry guards") {
  ExtensionArtifact E = build_extension(descriptor(Family::polygon, 2), 2);
  GeometryLimits tight;
  tight.group_bound = 10;
  CHECK_THROWS_AS(build_geometry(E.gens, tight), Error);

  // Override generators must lie in the group.
  std::vector<Permutation> outside{Permutation::from_cycles(E.gens[0].degree(), {{0, 1, 2}})};
  CHECK_THROWS_AS(build_geometry(E.gens, {}, 0, outside), Error);
}
