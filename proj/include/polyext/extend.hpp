#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polyext/catalog.hpp"
#include "polyext/diagonals.hpp"
#include "polyext/fp.hpp"
#include "polyext/perm.hpp"

namespace polyext {

struct ExtensionSpec {
  FamilyDescriptor base;
  int s = 2;
};

enum class LayerStatus { pass, fail, skip };

struct LayerResult {
  std::string name;
  LayerStatus status = LayerStatus::skip;
  std::string detail;  // failure reason or skip reason; empty on pass
};

struct LayeredReport {
  std::vector<LayerResult> layers;
  bool all_passed_or_skipped() const;
  bool has_failure() const;
  const LayerResult* find(const std::string& name) const;
};

struct ExtensionArtifact {
  ExtensionSpec spec;
  RealizedPolytope base;
  DiagonalClassification diagonals;
  Presentation presentation;      // family relator table, labels r0..rn
  Presentation recipe;            // general extra-relator recipe, same labels
  std::vector<Permutation> gens;  // rho_0,...,rho_n
  PermGroup group;
  int q = 0;
  Integer expected_order;
  // Per antipodal pair: the two sigma generators (pair representative first)
  // and the representative vertex, with pairs ordered by representative.
  std::vector<std::pair<Permutation, Permutation>> sigma_pairs;
  std::vector<int> pair_reps;
};

// Relators of the theorem recipe: Coxeter relators of type {4,p_1,...,p_{n-1}}
// plus (r0 b^-i r0 b^i)^2 per validated non-edge, non-antipodal representative
// and (r0 b^a r0 b^a)^s for the antipodal exponent, with b = r1...rn.
Presentation extension_presentation(const RealizedPolytope& P,
                                    const DiagonalClassification& D, int s);

// Relator table of the family's published presentation.
Presentation extension_family_presentation(const FamilyDescriptor& d, int s);

// Permutation realization of degree |V|*s + |V|: one 2s-point block per
// antipodal pair carrying a dihedral action, plus the original vertex points.
struct ExtensionRealization {
  std::vector<Permutation> gens;  // rho_0..rho_n
  std::vector<std::pair<Permutation, Permutation>> sigma_pairs;
  std::vector<int> pair_reps;
};
ExtensionRealization realize_extension(const RealizedPolytope& P, int s);

ExtensionArtifact build_extension(const FamilyDescriptor& d, int s);

struct VerifyLimits {
  std::size_t tc_limit = 4'000'000;
  std::size_t l4_vertex_bound = 100'000;
};

// L1: presentation relators hold at the concrete generators.
// L2: concrete group order equals (2s)^q * |G(P)| and the generators generate it.
// L3: Todd-Coxeter of the presentation reaches the same order (skip on limit).
// L4: for even s and (2s)^q within bound, the explicit central candidate is a
//     central involution acting fixed-point-freely on the vertex cosets.
LayeredReport verify_extension(const ExtensionArtifact& E, const VerifyLimits& limits);

// True when the recipe relators and the family-table relators coincide
// word-for-word after canonicalization.
bool recipe_matches_family(const ExtensionArtifact& E);

}  // namespace polyext
