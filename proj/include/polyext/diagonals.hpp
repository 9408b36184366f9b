#pragma once

#include <vector>

#include "polyext/catalog.hpp"
#include "polyext/perm.hpp"

namespace polyext {

struct DiagonalClassification {
  std::vector<std::vector<int>> classes;  // sorted vertex lists covering V\{F0}
  int antipodal_index = -1;               // class containing F0*alpha
  Permutation beta;                       // tau_0 tau_1 ... tau_{n-1}
  std::vector<int> beta_reps;             // smallest exponent per class, aligned with classes
};

// Diagonal classes via stabilizer orbits merged with the inverse rule: the
// class of F0*t equals the class of F0*t^{-1} for every group element t.
DiagonalClassification diagonal_classes(const RealizedPolytope& P);

// Smallest exponent i >= 1 per class with F0*beta^i in the class (class order);
// also validates the descriptor's published list as a transversal.
std::vector<int> beta_representatives(const RealizedPolytope& P,
                                      const DiagonalClassification& D);

int antipodal_class(const RealizedPolytope& P, const DiagonalClassification& D);

}  // namespace polyext
