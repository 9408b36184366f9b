#pragma once

#include <string>
#include <vector>

#include "polyext/fp.hpp"
#include "polyext/perm.hpp"

namespace polyext {

enum class Family {
  polygon,      // {2p}-gon, parameter p >= 2
  orthoplex,    // {3^{n-2},4}, parameter n >= 3
  cube,         // {4,3^{n-2}}, parameter n >= 3
  icosahedron,  // {3,5}
  dodecahedron, // {5,3}
  cell24,       // {3,4,3}
  cell600,      // {3,3,5}
  cell120       // {5,3,3}
};

std::string family_token(Family f);

struct FamilyDescriptor {
  Family family;
  int param = 0;              // p for polygon, n for orthoplex/cube, 0 otherwise
  std::string name;           // e.g. "polygon(2)", "cell600"
  std::vector<int> schlafli;  // p_1,...,p_{n-1}
  int rank = 0;               // number of generators tau_0..tau_{rank-1}
  int vertex_count = 0;
  int alpha_exponent = 0;     // alpha = (tau_0...tau_{n-1})^k
  Integer expected_order;
  std::vector<int> beta_transversal;   // published diagonal-class representatives
  std::vector<int> squared_exponents;  // transversal minus edge (1) and antipodal entries
};

FamilyDescriptor descriptor(Family f, int param = 0);
FamilyDescriptor descriptor_by_name(const std::string& token, int p, int n);
std::vector<FamilyDescriptor> catalog_all(int max_n = 6, int max_p = 8);

struct RealizedPolytope {
  FamilyDescriptor descriptor;
  std::vector<Permutation> taus;  // acting on vertices 0..vertex_count-1
  PermGroup group;
  int F0;
  Permutation alpha;
  Presentation presentation;  // Coxeter presentation in labels t0..t{n-1}
};

// Coxeter presentation of the string group [m_1,...,m_{k-1}] over the given
// labels: involutions, consecutive products of order m_i, commuting otherwise.
Presentation coxeter_presentation(const std::vector<int>& schlafli,
                                  const std::vector<std::string>& labels);

// Signed-coordinate generators of the n-cube symmetry group: tau_0 negates the
// first coordinate, tau_j swaps coordinates j and j+1; vertex index encodes
// the sign vector bitwise (bit j set iff coordinate j+1 is negative).
std::vector<Permutation> cube_coordinate_taus(int n);

RealizedPolytope realize(const FamilyDescriptor& d);
Permutation central_involution(const RealizedPolytope& p);
std::vector<std::vector<int>> coxeter_matrix(const std::vector<Permutation>& gens);

}  // namespace polyext
