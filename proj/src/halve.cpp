#include "polyext/halve.hpp"

#include <algorithm>

namespace polyext {

namespace {

std::vector<std::string> halved_labels(int rank) {  // h0, r1, ..., rn
  std::vector<std::string> labels{"h0"};
  for (int i = 1; i <= rank; ++i) labels.push_back("r" + std::to_string(i));
  return labels;
}

RelExpr halved_beta_expr(int rank) {  // h0 r2 ... rn
  std::vector<RelExpr> items{RelExpr::atom(0)};
  for (int i = 2; i <= rank; ++i) items.push_back(RelExpr::atom(i));
  return RelExpr::seq(std::move(items));
}

RelExpr halved_beta_inv_expr(int rank) {  // rn ... r2 h0
  std::vector<RelExpr> items;
  for (int i = rank; i >= 2; --i) items.push_back(RelExpr::atom(i));
  items.push_back(RelExpr::atom(0));
  return RelExpr::seq(std::move(items));
}

RelExpr beta_expr(int rank) {  // r1 r2 ... rn
  std::vector<RelExpr> items;
  for (int i = 1; i <= rank; ++i) items.push_back(RelExpr::atom(i));
  return RelExpr::seq(std::move(items));
}

// (bt^-i b^i)^k with bt the halved twin of b.
RelExpr halved_conjugate_relator(int rank, int i, int k) {
  return RelExpr::pow(
      RelExpr::seq({RelExpr::pow(halved_beta_inv_expr(rank), i), RelExpr::pow(beta_expr(rank), i)}),
      k);
}

// (bt^a b^a)^s
RelExpr halved_antipodal_relator(int rank, int a, int s) {
  return RelExpr::pow(
      RelExpr::seq({RelExpr::pow(halved_beta_expr(rank), a), RelExpr::pow(beta_expr(rank), a)}),
      s);
}

// ((h0 r2)^{j-1} h0 r1 (r2 r1)^{j-1})^k
RelExpr halved_skew_relator(int j, int k) {
  return RelExpr::pow(
      RelExpr::seq({RelExpr::pow(RelExpr::seq({RelExpr::atom(0), RelExpr::atom(2)}), j - 1),
                    RelExpr::atom(0), RelExpr::atom(1),
                    RelExpr::pow(RelExpr::seq({RelExpr::atom(2), RelExpr::atom(1)}), j - 1)}),
      k);
}

// h0 r2 r3 ... rn r{n-1} ... r2 r1
RelExpr halved_chain_expr(int rank) {
  std::vector<RelExpr> items{RelExpr::atom(0)};
  for (int i = 2; i <= rank; ++i) items.push_back(RelExpr::atom(i));
  for (int i = rank - 1; i >= 1; --i) items.push_back(RelExpr::atom(i));
  return RelExpr::seq(std::move(items));
}

}  // namespace

std::vector<std::vector<int>> halved_diagram_matrix(const FamilyDescriptor& d) {
  // Generators are indexed h0, r1, ..., rn where n = d.rank; the extension
  // type is {4, p1, p2, ...} with p1 = d.schlafli[0].
  const int k = d.rank + 1;
  std::vector<std::vector<int>> m(k, std::vector<int>(k, 2));
  for (int i = 0; i < k; ++i) m[i][i] = 1;
  m[0][2] = m[2][0] = d.schlafli[0];
  m[1][2] = m[2][1] = d.schlafli[0];
  for (int i = 2; i + 1 < k; ++i) m[i][i + 1] = m[i + 1][i] = d.schlafli[i - 1];
  return m;
}

Presentation halving_presentation(const FamilyDescriptor& d, int s) {
  if (s < 2) throw Error("extension requires s >= 2");
  const int rank = d.rank;
  const auto matrix = halved_diagram_matrix(d);
  Presentation p = Presentation::over_involutions(halved_labels(rank));
  for (int i = 0; i < rank + 1; ++i)
    for (int j = i + 1; j < rank + 1; ++j)
      p.add(RelExpr::pow(RelExpr::seq({RelExpr::atom(i), RelExpr::atom(j)}), matrix[i][j]));
  switch (d.family) {
    case Family::polygon: {
      const int pp = d.param;
      for (int j = 2; j <= pp - 1; ++j) p.add(halved_skew_relator(j, 2));
      p.add(halved_skew_relator(pp, s));
      break;
    }
    case Family::orthoplex:
      p.add(RelExpr::pow(halved_chain_expr(rank), 2 * s));
      break;
    default:
      for (int i : d.squared_exponents) p.add(halved_conjugate_relator(rank, i, 2));
      p.add(halved_antipodal_relator(rank, d.alpha_exponent, s));
      break;
  }
  return p;
}

HalvingArtifact realize_halving(const ExtensionArtifact& E) {
  HalvingArtifact H;
  H.spec = E.spec;
  const auto& d = E.spec.base;
  H.presentation = halving_presentation(d, E.spec.s);
  H.expected_order = E.expected_order / 2;
  H.expected_diagram = halved_diagram_matrix(d);

  const Permutation& r0 = E.gens[0];
  const Permutation& r1 = E.gens[1];
  H.gens.push_back(compose(compose(r0, r1), r0));
  for (std::size_t i = 1; i < E.gens.size(); ++i) H.gens.push_back(E.gens[i]);

  H.group = PermGroup(H.gens);
  if (H.group.order() * 2 != E.group.order())
    throw Error(d.name + ": halved subgroup does not have index 2");
  H.diagram = coxeter_matrix(H.gens);
  if (H.diagram != H.expected_diagram)
    throw Error(d.name + ": halved generators do not satisfy the expected diagram");
  return H;
}

LayeredReport verify_halving(const HalvingArtifact& H, const ExtensionArtifact& E,
                             const VerifyLimits& limits) {
  LayeredReport report;
  const int degree = H.gens.empty() ? 0 : H.gens[0].degree();

  {
    LayerResult l1{"L1", LayerStatus::pass, ""};
    for (const auto& r : H.presentation.relators)
      if (!evaluate(r.flatten(), H.gens, degree).is_identity()) {
        l1 = {"L1", LayerStatus::fail, "relator fails: " + r.render(H.presentation.labels)};
        break;
      }
    report.layers.push_back(l1);
  }

  {
    LayerResult l2{"L2", LayerStatus::pass, ""};
    if (H.group.order() != H.expected_order) {
      l2.status = LayerStatus::fail;
      l2.detail = "concrete order " + H.group.order().str() + " != expected " +
                  H.expected_order.str();
    } else if (H.group.order() * 2 != E.group.order()) {
      l2.status = LayerStatus::fail;
      l2.detail = "halved order is not half of the extension order";
    }
    report.layers.push_back(l2);
  }

  {
    LayerResult l3{"L3", LayerStatus::pass, ""};
    if (H.expected_order > Integer(limits.tc_limit)) {
      l3.status = LayerStatus::skip;
      l3.detail = "expected order exceeds coset limit";
    } else {
      CosetTable table = todd_coxeter(H.presentation, {}, limits.tc_limit);
      if (table.status != CosetTable::Status::complete) {
        l3.status = LayerStatus::skip;
        l3.detail = "enumeration hit coset limit";
      } else if (Integer(table.index) != H.expected_order) {
        l3.status = LayerStatus::fail;
        l3.detail = "presented order " + std::to_string(table.index) + " != expected " +
                    H.expected_order.str();
      }
    }
    report.layers.push_back(l3);
  }

  return report;
}

}  // namespace polyext
