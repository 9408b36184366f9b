#include <doctest.h>

#include <string>
#include <vector>

#include "polyext/fp.hpp"

using namespace polyext;

TEST_CASE("canonicalization") {
  CHECK(canonicalize(Word{0, 0}) == Word{});
  CHECK(canonicalize(Word{1, 0, 1}) == Word{0});
  CHECK(canonicalize(Word{0, 1, 1, 0}) == Word{});
  CHECK(canonicalize(Word{1, 0}) == Word{0, 1});
  CHECK(canonicalize(Word{2, 0, 1}) == Word{0, 1, 2});
}

TEST_CASE("relator expressions render structured powers") {
  std::vector<std::string> labels{"r0", "r1", "r2"};
  RelExpr inner = RelExpr::pow(RelExpr::seq({RelExpr::atom(2), RelExpr::atom(1)}), 2);
  RelExpr full =
      RelExpr::pow(RelExpr::seq({RelExpr::atom(0), RelExpr::atom(1), inner}), 4);
  CHECK(full.render(labels) == "( r0 r1 ( r2 r1 )^2 )^4");
  CHECK(full.flatten() == Word{0, 1, 2, 1, 2, 1, 0, 1, 2, 1, 2, 1, 0, 1, 2, 1, 2, 1, 0, 1, 2, 1,
                               2, 1});
  CHECK(RelExpr::atom(1).render(labels) == "r1");
  CHECK(RelExpr::pow(RelExpr::atom(1), 3).render(labels) == "( r1 )^3");
  CHECK(RelExpr::word(Word{0, 1}).flatten() == Word{0, 1});
}

TEST_CASE("presentation add dedups by canonical word") {
  Presentation p = Presentation::over_involutions({"a", "b"});
  CHECK(p.relators.size() == 2);
  p.add(RelExpr::pow(RelExpr::seq({RelExpr::atom(0), RelExpr::atom(1)}), 3));
  p.add(RelExpr::word(Word{0, 1, 0, 1, 0, 1}));  // same canonical word
  CHECK(p.relators.size() == 3);
  p.add(RelExpr::word(Word{0, 0}));  // canonically empty: skipped
  CHECK(p.relators.size() == 3);
  CHECK(p.canonical_relators() == std::vector<Word>{Word{0, 1, 0, 1, 0, 1}});
}

TEST_CASE("presentation text round trip") {
  Presentation p = Presentation::over_involutions({"r0", "r1", "r2"});
  p.add(RelExpr::pow(RelExpr::seq({RelExpr::atom(0), RelExpr::atom(1)}), 4));
  p.add(RelExpr::pow(RelExpr::seq({RelExpr::atom(0), RelExpr::atom(1),
                                   RelExpr::pow(RelExpr::seq({RelExpr::atom(2), RelExpr::atom(1)}),
                                                2)}),
                     4));
  std::string text = p.to_text();
  CHECK(text.find("( r0 r1 ( r2 r1 )^2 )^4") != std::string::npos);
  Presentation q = Presentation::from_text(text);
  CHECK(q.labels == p.labels);
  CHECK(q.canonical_relators() == p.canonical_relators());
  CHECK(q.to_text() == text);
}

TEST_CASE("presentation text parsing rejects malformed input") {
  CHECK_THROWS_AS(Presentation::from_text("nonsense"), Error);
  CHECK_THROWS_AS(Presentation::from_text("gens 2\n( a b\n"), Error);
  CHECK_THROWS_AS(Presentation::from_text("gens 2\na b )^0\n"), Error);
}

TEST_CASE("coset enumeration of a dihedral group") {
  Presentation p = Presentation::over_involutions({"a", "b"});
  p.add(RelExpr::pow(RelExpr::seq({RelExpr::atom(0), RelExpr::atom(1)}), 5));

  CosetTable whole = todd_coxeter(p, {}, 1000);
  CHECK(whole.status == CosetTable::Status::complete);
  CHECK(whole.index == 10);
  auto perms = whole.coset_permutations();
  REQUIRE(perms.size() == 2);
  CHECK(PermGroup(perms).order() == 10);
  CHECK(compose(perms[0], perms[1]).order() == 5);

  CosetTable cosets = todd_coxeter(p, {Word{0}}, 1000);
  CHECK(cosets.status == CosetTable::Status::complete);
  CHECK(cosets.index == 5);

  CosetTable aborted = todd_coxeter(p, {}, 3);
  CHECK(aborted.status == CosetTable::Status::aborted);
}

TEST_CASE("coset enumeration of [3,3,5] vertex cosets") {
  Presentation p = Presentation::over_involutions({"t0", "t1", "t2", "t3"});
  const int orders[3] = {3, 3, 5};
  for (int i = 0; i < 3; ++i)
    p.add(RelExpr::pow(RelExpr::seq({RelExpr::atom(i), RelExpr::atom(i + 1)}), orders[i]));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 2; j < 4; ++j)
      p.add(RelExpr::pow(RelExpr::seq({RelExpr::atom(i), RelExpr::atom(j)}), 2));
  CosetTable t = todd_coxeter(p, {Word{1}, Word{2}, Word{3}}, 100000);
  CHECK(t.status == CosetTable::Status::complete);
  CHECK(t.index == 120);
}

TEST_CASE("word evaluation") {
  std::vector<Permutation> images{Permutation::from_cycles(3, {{0, 1}}),
                                  Permutation::from_cycles(3, {{1, 2}})};
  CHECK(evaluate(Word{0, 1, 0}, images, 3) == Permutation::from_cycles(3, {{0, 2}}));
  CHECK(evaluate(Word{}, images, 3).is_identity());
  CHECK_THROWS_AS(evaluate(Word{5}, images, 3), Error);
}

TEST_CASE("epimorphism verification") {
  Presentation p = Presentation::over_involutions({"a", "b"});
  p.add(RelExpr::pow(RelExpr::seq({RelExpr::atom(0), RelExpr::atom(1)}), 3));
  std::vector<Permutation> good{Permutation::from_cycles(3, {{0, 1}}),
                                Permutation::from_cycles(3, {{1, 2}})};
  PermGroup s3(good);
  EpimorphismReport ok = verify_epimorphism(p, good, s3);
  CHECK(ok.ok());
  CHECK(ok.first_failed_relator.empty());

  std::vector<Permutation> bad{Permutation::from_cycles(4, {{0, 1}}),
                               Permutation::from_cycles(4, {{1, 2}, {0, 3}})};
  PermGroup target(bad);
  EpimorphismReport broken = verify_epimorphism(p, bad, target);
  CHECK_FALSE(broken.relators_hold);
  CHECK_FALSE(broken.first_failed_relator.empty());
}
