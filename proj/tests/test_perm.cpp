#include <doctest.h>

#include <set>
#include <vector>

#include "polyext/perm.hpp"

using namespace polyext;

TEST_CASE("composition applies left factor first") {
  Permutation p = Permutation::from_cycles(3, {{0, 1}});
  Permutation q = Permutation::from_cycles(3, {{1, 2}});
  CHECK(compose(p, q).images() == std::vector<int>{2, 0, 1});
  CHECK((p * q) == compose(p, q));
  CHECK(compose(q, p).images() == std::vector<int>{1, 2, 0});
}

TEST_CASE("basic permutation algebra") {
  Permutation id(5);
  CHECK(id.is_identity());
  CHECK(id.lowest_moved_point() == -1);
  CHECK(id.order() == 1);

  Permutation c = Permutation::from_cycles(4, {{0, 1, 2, 3}});
  CHECK(c.order() == 4);
  CHECK(c.inverse()[0] == 3);
  CHECK(compose(c, c.inverse()).is_identity());
  CHECK(c.lowest_moved_point() == 0);

  Permutation mixed = Permutation::from_cycles(6, {{0, 1}, {2, 3, 4}});
  CHECK(mixed.order() == 6);
}

TEST_CASE("from_cycles validates input") {
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), Error);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0}), Error);
}

TEST_CASE("orbits") {
  std::vector<Permutation> gens{Permutation::from_cycles(4, {{0, 1}}),
                                Permutation::from_cycles(4, {{1, 2}})};
  std::vector<int> orbit = orbit_of(gens, 0);
  CHECK(std::set<int>(orbit.begin(), orbit.end()) == std::set<int>{0, 1, 2});
  CHECK(orbit_of(gens, 3) == std::vector<int>{3});

  Orbit with_t = orbit_with_transversal(gens, 0);
  for (std::size_t i = 0; i < with_t.points.size(); ++i)
    CHECK(with_t.rep[i][with_t.root] == with_t.points[i]);
  CHECK(with_t.contains(2));
  CHECK_FALSE(with_t.contains(3));
}

TEST_CASE("group orders") {
  std::vector<Permutation> s4{Permutation::from_cycles(4, {{0, 1}}),
                              Permutation::from_cycles(4, {{0, 1, 2, 3}})};
  CHECK(PermGroup(s4).order() == 24);
  CHECK(generated_order(s4) == 24);

  std::vector<Permutation> s7{Permutation::from_cycles(7, {{0, 1}}),
                              Permutation::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}})};
  CHECK(PermGroup(s7).order() == 5040);

  CHECK(PermGroup::trivial(9).order() == 1);
  CHECK(PermGroup::trivial(9).is_trivial());
}

TEST_CASE("membership") {
  std::vector<Permutation> a4{Permutation::from_cycles(4, {{0, 1, 2}}),
                              Permutation::from_cycles(4, {{1, 2, 3}})};
  PermGroup G(a4);
  CHECK(G.order() == 12);
  CHECK(G.contains(Permutation::from_cycles(4, {{0, 2, 1}})));
  CHECK_FALSE(G.contains(Permutation::from_cycles(4, {{0, 1}})));
  CHECK(G.sift(Permutation::from_cycles(4, {{0, 1, 2}})).is_identity());
}

TEST_CASE("element enumeration") {
  std::vector<Permutation> s3{Permutation::from_cycles(3, {{0, 1}}),
                              Permutation::from_cycles(3, {{0, 2}})};
  PermGroup G(s3);
  int count = 0;
  CHECK(G.for_each_element([&](const Permutation&) {
    ++count;
    return true;
  }));
  CHECK(count == 6);
  count = 0;
  CHECK_FALSE(G.for_each_element([&](const Permutation&) { return ++count < 3; }));
  CHECK(count == 3);
}

TEST_CASE("minimal coset representatives") {
  PermGroup A(std::vector<Permutation>{Permutation::from_cycles(3, {{0, 1}})});
  Permutation x = Permutation::from_cycles(3, {{0, 2}});
  CHECK(A.minimal_coset_rep(x).images() == std::vector<int>{1, 2, 0});
  CHECK(A.minimal_coset_rep(Permutation(3)).is_identity());
  // Same coset, same representative.
  CHECK(A.minimal_coset_rep(compose(Permutation::from_cycles(3, {{0, 1}}), x)) ==
        A.minimal_coset_rep(x));
}

TEST_CASE("subgroup intersections") {
  PermGroup a(std::vector<Permutation>{Permutation::from_cycles(3, {{0, 1}})});
  std::vector<Permutation> s3{Permutation::from_cycles(3, {{0, 1}}),
                              Permutation::from_cycles(3, {{0, 2}})};
  PermGroup b(s3);
  CHECK(subgroup_intersection(a, b).order() == 2);
  CHECK(subgroup_intersection(b, b).order() == 6);

  PermGroup c(std::vector<Permutation>{Permutation::from_cycles(3, {{0, 2}})});
  CHECK(subgroup_intersection(a, c).order() == 1);

  PermGroup c4(std::vector<Permutation>{Permutation::from_cycles(4, {{0, 1, 2, 3}})});
  PermGroup klein(std::vector<Permutation>{Permutation::from_cycles(4, {{0, 2}, {1, 3}}),
                                           Permutation::from_cycles(4, {{0, 1}, {2, 3}})});
  CHECK(subgroup_intersection(c4, klein).order() == 2);

  PermGroup left(std::vector<Permutation>{Permutation::from_cycles(5, {{0, 1}})});
  PermGroup right(std::vector<Permutation>{Permutation::from_cycles(5, {{3, 4}})});
  CHECK(subgroup_intersection(left, right).order() == 1);

  CHECK_THROWS_AS(subgroup_intersection(b, b, IntersectionLimits{1}), Error);
}

TEST_CASE("degree mismatches are rejected") {
  std::vector<Permutation> mixed{Permutation(3), Permutation(4)};
  CHECK_THROWS_AS(PermGroup{mixed}, Error);
  CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), Error);
}
