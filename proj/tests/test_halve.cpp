#include <doctest.h>

#include <string>
#include <vector>

#include "polyext/halve.hpp"

using namespace polyext;

namespace {

LayerStatus status_of(const LayeredReport& r, const std::string& name) {
  const LayerResult* layer = r.find(name);
  REQUIRE(layer != nullptr);
  return layer->status;
}

}  // namespace

TEST_CASE("halved square extension") {
  ExtensionArtifact E = build_extension(descriptor(Family::polygon, 2), 2);
  HalvingArtifact H = realize_halving(E);
  CHECK(H.group.order() == 64);
  CHECK(H.expected_order == 64);
  CHECK(H.gens.size() == 3);
  CHECK(H.gens[0] == compose(compose(E.gens[0], E.gens[1]), E.gens[0]));
  // String diagram h0-r2-r1 with both labels 4.
  std::vector<std::vector<int>> want{{1, 2, 4}, {2, 1, 4}, {4, 4, 1}};
  CHECK(H.diagram == want);

  LayeredReport r = verify_halving(H, E, VerifyLimits{});
  CHECK(status_of(r, "L1") == LayerStatus::pass);
  CHECK(status_of(r, "L2") == LayerStatus::pass);
  CHECK(status_of(r, "L3") == LayerStatus::pass);
}

TEST_CASE("halved octahedral extensions") {
  ExtensionArtifact E2 = build_extension(descriptor(Family::orthoplex, 3), 2);
  HalvingArtifact H2 = realize_halving(E2);
  CHECK(H2.group.order() == 1536);

  ExtensionArtifact E3 = build_extension(descriptor(Family::orthoplex, 3), 3);
  HalvingArtifact H3 = realize_halving(E3);
  CHECK(H3.group.order() == 5184);
  LayeredReport r = verify_halving(H3, E3, VerifyLimits{});
  CHECK(status_of(r, "L1") == LayerStatus::pass);
  CHECK(status_of(r, "L2") == LayerStatus::pass);
  CHECK(status_of(r, "L3") == LayerStatus::pass);
}

TEST_CASE("halved diagram matrices") {
  auto y4 = halved_diagram_matrix(descriptor(Family::orthoplex, 4));
  std::vector<std::vector<int>> want{{1, 2, 3, 2, 2},
                                     {2, 1, 3, 2, 2},
                                     {3, 3, 1, 3, 2},
                                     {2, 2, 3, 1, 4},
                                     {2, 2, 2, 4, 1}};
  CHECK(y4 == want);

  auto cube_y = halved_diagram_matrix(descriptor(Family::cube, 3));
  CHECK(cube_y[0][1] == 2);
  CHECK(cube_y[0][2] == 4);
  CHECK(cube_y[1][2] == 4);
  CHECK(cube_y[2][3] == 3);
}

TEST_CASE("halved presentations render the chain relator") {
  Presentation p = halving_presentation(descriptor(Family::orthoplex, 4), 2);
  bool found = false;
  for (const auto& rel : p.relators)
    if (rel.render(p.labels) == "( h0 r2 r3 r4 r3 r2 r1 )^4") found = true;
  CHECK(found);
  CHECK(p.labels == std::vector<std::string>{"h0", "r1", "r2", "r3", "r4"});
}

TEST_CASE("halving the icosahedral extension") {
  ExtensionArtifact E = build_extension(descriptor(Family::icosahedron), 2);
  HalvingArtifact H = realize_halving(E);
  CHECK(H.group.order() * 2 == E.group.order());
  CHECK(H.expected_order == 245760);
  auto want = halved_diagram_matrix(E.spec.base);
  CHECK(H.diagram == want);
  // Legs carry the base's first label 3, the tail keeps 5.
  CHECK(H.diagram[0][2] == 3);
  CHECK(H.diagram[1][2] == 3);
  CHECK(H.diagram[2][3] == 5);
}
