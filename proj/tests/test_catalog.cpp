#include <doctest.h>

#include <vector>

#include "polyext/catalog.hpp"

using namespace polyext;

namespace {

std::vector<std::vector<int>> string_matrix(const std::vector<int>& schlafli) {
  const int k = static_cast<int>(schlafli.size()) + 1;
  std::vector<std::vector<int>> m(k, std::vector<int>(k, 2));
  for (int i = 0; i < k; ++i) m[i][i] = 1;
  for (int i = 0; i + 1 < k; ++i) m[i][i + 1] = m[i + 1][i] = schlafli[i];
  return m;
}

}  // namespace

TEST_CASE("descriptor data") {
  FamilyDescriptor square = descriptor(Family::polygon, 2);
  CHECK(square.schlafli == std::vector<int>{4});
  CHECK(square.vertex_count == 4);
  CHECK(square.expected_order == 8);
  CHECK(square.alpha_exponent == 2);
  CHECK(square.beta_transversal == std::vector<int>{1, 2});
  CHECK(square.squared_exponents.empty());

  FamilyDescriptor oct = descriptor(Family::orthoplex, 3);
  CHECK(oct.schlafli == std::vector<int>{3, 4});
  CHECK(oct.vertex_count == 6);
  CHECK(oct.expected_order == 48);
  CHECK(oct.alpha_exponent == 3);
  CHECK(oct.beta_transversal == std::vector<int>{1, 3});

  FamilyDescriptor cube4 = descriptor(Family::cube, 4);
  CHECK(cube4.schlafli == std::vector<int>{4, 3, 3});
  CHECK(cube4.vertex_count == 16);
  CHECK(cube4.expected_order == 384);
  CHECK(cube4.beta_transversal == std::vector<int>{1, 2, 3, 4});
  CHECK(cube4.squared_exponents == std::vector<int>{2, 3});

  FamilyDescriptor c600 = descriptor(Family::cell600);
  CHECK(c600.schlafli == std::vector<int>{3, 3, 5});
  CHECK(c600.vertex_count == 120);
  CHECK(c600.expected_order == 14400);
  CHECK(c600.alpha_exponent == 15);
  CHECK(c600.beta_transversal == std::vector<int>{1, 4, 6, 7, 9, 10, 12, 15});

  CHECK_THROWS_AS(descriptor(Family::polygon, 1), Error);
  CHECK_THROWS_AS(descriptor(Family::cube, 2), Error);
}

TEST_CASE("descriptor_by_name") {
  CHECK(descriptor_by_name("polygon", 3, 0).name == "polygon(3)");
  CHECK(descriptor_by_name("cube", 0, 4).name == "cube(4)");
  CHECK(descriptor_by_name("icosahedron", 0, 0).vertex_count == 12);
  CHECK_THROWS_AS(descriptor_by_name("simplex", 0, 3), Error);
}

TEST_CASE("catalog_all covers the desk-scale corpus") {
  auto rows = catalog_all(6, 8);
  CHECK(rows.size() == 20);
  auto small = catalog_all(3, 2);
  CHECK(small.size() == 8);  // one polygon, one orthoplex, one cube, five fixed
}

TEST_CASE("square realization") {
  RealizedPolytope P = realize(descriptor(Family::polygon, 2));
  CHECK(P.taus.size() == 2);
  CHECK(P.taus[0].degree() == 4);
  CHECK(P.group.order() == 8);
  CHECK(P.F0 == 0);
  Permutation alpha = central_involution(P);
  CHECK(compose(alpha, alpha).is_identity());
  CHECK(alpha[P.F0] != P.F0);
}

TEST_CASE("cube(3) coordinate realization") {
  RealizedPolytope P = realize(descriptor(Family::cube, 3));
  CHECK(P.taus[0].degree() == 8);
  CHECK(P.group.order() == 48);
  CHECK(coxeter_matrix(P.taus) == string_matrix({4, 3}));

  // tau_0 flips the first coordinate: vertex 0 <-> vertex 1.
  CHECK(P.taus[0][0] == 1);
  // alpha negates everything: vertex 0 <-> vertex 7.
  CHECK(P.alpha[0] == 7);
}

TEST_CASE("cube(3) coset realization agrees with the coordinate one") {
  FamilyDescriptor d = descriptor(Family::cube, 3);
  Presentation p = coxeter_presentation(d.schlafli, {"t0", "t1", "t2"});
  CosetTable t = todd_coxeter(p, {Word{1}, Word{2}}, 100000);
  REQUIRE(t.status == CosetTable::Status::complete);
  CHECK(t.index == 8);
  auto taus = t.coset_permutations();
  CHECK(PermGroup(taus).order() == 48);
  CHECK(coxeter_matrix(taus) == string_matrix({4, 3}));

  RealizedPolytope coords = realize(d);
  CHECK(PermGroup(coords.taus).order() == PermGroup(taus).order());
}

TEST_CASE("icosahedron and 600-cell realizations") {
  RealizedPolytope ico = realize(descriptor(Family::icosahedron));
  CHECK(ico.taus[0].degree() == 12);
  CHECK(ico.group.order() == 120);
  CHECK(coxeter_matrix(ico.taus) == string_matrix({3, 5}));

  RealizedPolytope c600 = realize(descriptor(Family::cell600));
  CHECK(c600.taus[0].degree() == 120);
  CHECK(c600.group.order() == 14400);
}

TEST_CASE("central involutions act freely") {
  for (const auto& d : {descriptor(Family::polygon, 3), descriptor(Family::orthoplex, 4),
                        descriptor(Family::dodecahedron)}) {
    RealizedPolytope P = realize(d);
    Permutation alpha = central_involution(P);
    for (int v = 0; v < d.vertex_count; ++v) CHECK(alpha[v] != v);
    for (const auto& t : P.taus) CHECK(compose(alpha, t) == compose(t, alpha));
  }
}

TEST_CASE("coxeter_matrix rejects non-involutions") {
  std::vector<Permutation> gens{Permutation::from_cycles(3, {{0, 1, 2}})};
  CHECK_THROWS_AS(coxeter_matrix(gens), Error);
}
