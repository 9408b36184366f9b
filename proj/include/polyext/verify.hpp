#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "polyext/perm.hpp"

namespace polyext {

enum class CheckStatus { pass, fail, skipped };

struct IntersectionPropertyResult {
  CheckStatus status = CheckStatus::skipped;
  std::string witness;  // failing pair of generator subsets, when status == fail
};

// Checks <g_i | i in I> ∩ <g_j | j in J> = <g_k | k in I∩J> over subset pairs,
// pruned by symmetry and subset absorption.  limit bounds each pairwise
// intersection search; tripping it yields skipped, not failure.
IntersectionPropertyResult intersection_property(const std::vector<Permutation>& gens,
                                                 std::size_t limit = 50'000'000);

struct CosetGeometry {
  PermGroup group;
  std::vector<Permutation> gens;
  std::vector<PermGroup> parabolics;            // G_i = all generators but the i-th
  std::vector<std::vector<Permutation>> cosets; // canonical coset representatives per type
  // incidence[i][a][j] = sorted list of type-j cosets incident with coset a of type i
  std::vector<std::vector<std::vector<std::vector<int>>>> incidence;
};

struct GeometryLimits {
  std::size_t group_bound = 100'000;
};

// Tits coset-geometry construction over the maximal parabolics; incidence is
// nonempty intersection of cosets.  An override replaces the generating set of
// one parabolic (used to build deliberately broken geometries).
CosetGeometry build_geometry(const std::vector<Permutation>& gens,
                             const GeometryLimits& limits = {},
                             int override_type = -1,
                             const std::vector<Permutation>& override_gens = {});

struct GeometryProperties {
  bool thin = false;
  bool residually_connected = false;
  bool flag_transitive = false;
  std::size_t chambers = 0;
};

GeometryProperties geometry_properties(const CosetGeometry& geometry);

// Classification of a {4,4} quotient: T = s0 s1 s2 s1, k = o(T); (k,0) when
// |G| = 8k^2, (k/2,k/2) when |G| = 4k^2; anything else is an error.
std::pair<int, int> classify_torus_44(const PermGroup& group,
                                      const std::vector<Permutation>& gens);

}  // namespace polyext
