#pragma once

#include <vector>

#include "polyext/extend.hpp"

namespace polyext {

struct HalvingArtifact {
  ExtensionSpec spec;
  std::vector<Permutation> gens;  // h0 = r0 r1 r0, then r1,...,rn
  PermGroup group;
  Presentation presentation;  // family proposition table, labels h0,r1..rn
  Integer expected_order;     // |extension| / 2
  std::vector<std::vector<int>> diagram;
  std::vector<std::vector<int>> expected_diagram;  // Y-shape from the base type
};

// Y-shaped Coxeter matrix of the halved group: h0-r1 label 2, both legs
// h0-r2 and r1-r2 labeled p_1 of the base polytope, tail unchanged.
std::vector<std::vector<int>> halved_diagram_matrix(const FamilyDescriptor& d);

Presentation halving_presentation(const FamilyDescriptor& d, int s);

HalvingArtifact realize_halving(const ExtensionArtifact& E);

// L1: proposition relators hold at the halved generators.
// L2: concrete order equals half the extension order (index 2).
// L3: Todd-Coxeter of the proposition presentation reaches the same order.
LayeredReport verify_halving(const HalvingArtifact& H, const ExtensionArtifact& E,
                             const VerifyLimits& limits);

}  // namespace polyext
