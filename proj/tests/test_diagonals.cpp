#include <doctest.h>

#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "polyext/diagonals.hpp"

using namespace polyext;

namespace {

int class_of(const DiagonalClassification& D, int v) {
  for (std::size_t c = 0; c < D.classes.size(); ++c)
    for (int u : D.classes[c])
      if (u == v) return static_cast<int>(c);
  return -1;
}

std::size_t covered(const DiagonalClassification& D) {
  std::size_t total = 0;
  for (const auto& cls : D.classes) total += cls.size();
  return total;
}

}  // namespace

TEST_CASE("hexagon diagonal classes") {
  RealizedPolytope P = realize(descriptor(Family::polygon, 3));
  DiagonalClassification D = diagonal_classes(P);
  REQUIRE(D.classes.size() == 3);
  CHECK(covered(D) == 5);  // everything except the base vertex
  CHECK(D.classes[0].size() == 2);
  CHECK(D.classes[1].size() == 2);
  CHECK(D.classes[D.antipodal_index].size() == 1);
  CHECK(beta_representatives(P, D) == std::vector<int>{1, 2, 3});
  CHECK(antipodal_class(P, D) == D.antipodal_index);
}

TEST_CASE("octahedron has two diagonal classes") {
  RealizedPolytope P = realize(descriptor(Family::orthoplex, 3));
  DiagonalClassification D = diagonal_classes(P);
  REQUIRE(D.classes.size() == 2);
  CHECK(covered(D) == 5);
  CHECK(D.classes[D.antipodal_index].size() == 1);
  int other = 1 - D.antipodal_index;
  CHECK(D.classes[other].size() == 4);
  beta_representatives(P, D);  // validates {1, 3}
}

TEST_CASE("cube(3) diagonal classes by distance") {
  RealizedPolytope P = realize(descriptor(Family::cube, 3));
  DiagonalClassification D = diagonal_classes(P);
  REQUIRE(D.classes.size() == 3);
  CHECK(covered(D) == 7);
  CHECK(D.classes[D.antipodal_index].size() == 1);
  CHECK(beta_representatives(P, D) == std::vector<int>{1, 2, 3});
}

TEST_CASE("icosahedron: beta and beta^2 share a class") {
  RealizedPolytope P = realize(descriptor(Family::icosahedron));
  DiagonalClassification D = diagonal_classes(P);
  REQUIRE(D.classes.size() == 3);
  CHECK(covered(D) == 11);
  int b1 = D.beta[P.F0];
  int b2 = D.beta[b1];
  CHECK(class_of(D, b1) == class_of(D, b2));
  CHECK(beta_representatives(P, D) == std::vector<int>{1, 3, 5});
}

TEST_CASE("24-cell classification") {
  RealizedPolytope P = realize(descriptor(Family::cell24));
  DiagonalClassification D = diagonal_classes(P);
  REQUIRE(D.classes.size() == 4);
  CHECK(covered(D) == 23);
  CHECK(D.classes[D.antipodal_index].size() == 1);
  CHECK(beta_representatives(P, D).size() == 4);
}

TEST_CASE("600-cell classification") {
  RealizedPolytope P = realize(descriptor(Family::cell600));
  DiagonalClassification D = diagonal_classes(P);
  REQUIRE(D.classes.size() == 8);
  CHECK(covered(D) == 119);
  CHECK(D.classes[D.antipodal_index].size() == 1);
  auto minima = beta_representatives(P, D);
  CHECK(minima.size() == 8);
  CHECK(minima.front() == 1);
}

TEST_CASE("classes are invariant under the vertex stabilizer and inversion") {
  RealizedPolytope P = realize(descriptor(Family::dodecahedron));
  DiagonalClassification D = diagonal_classes(P);
  REQUIRE(D.classes.size() == 5);
  // Stabilizer generators tau_1, tau_2 must preserve every class.
  for (std::size_t g = 1; g < P.taus.size(); ++g)
    for (const auto& cls : D.classes)
      for (int v : cls) CHECK(class_of(D, P.taus[g][v]) == class_of(D, v));
}

TEST_CASE("120-cell classification outruns the beta walk") {
  RealizedPolytope P = realize(descriptor(Family::cell120));
  DiagonalClassification D = diagonal_classes(P);
  REQUIRE(D.classes.size() == 35);
  CHECK(covered(D) == 599);
  CHECK(D.classes[D.antipodal_index].size() == 1);

  // beta has order 30, so its powers visit 15 distinct classes at most
  // (exponents i and 30-i land in the same class).  They do hit 15 distinct
  // ones, but that leaves 20 classes with no representative of the form
  // {F0, F0 beta^i}, and the published exponent list cannot be a transversal.
  std::set<int> reached;
  std::vector<int> first_fifteen;
  int exponent = 0;
  for (int x = D.beta[P.F0]; x != P.F0; x = D.beta[x]) {
    ++exponent;
    reached.insert(class_of(D, x));
    if (exponent <= 15) first_fifteen.push_back(class_of(D, x));
  }
  CHECK(exponent == 29);
  CHECK(reached.size() == 15);
  CHECK(std::set<int>(first_fifteen.begin(), first_fifteen.end()).size() == 15);

  try {
    beta_representatives(P, D);
    FAIL("beta_representatives should reject the 120-cell classification");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("unreachable by powers of beta") != std::string::npos);
  }
}
