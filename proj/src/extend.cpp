#include "polyext/extend.hpp"

#include <algorithm>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyext {

namespace {

std::vector<std::string> rho_labels(int count) {
  std::vector<std::string> labels;
  labels.reserve(count);
  for (int i = 0; i < count; ++i) labels.push_back("r" + std::to_string(i));
  return labels;
}

std::vector<int> extension_schlafli(const FamilyDescriptor& d) {
  std::vector<int> type{4};
  type.insert(type.end(), d.schlafli.begin(), d.schlafli.end());
  return type;
}

RelExpr beta_expr(int rank) {  // r1 r2 ... rn
  std::vector<RelExpr> items;
  for (int i = 1; i <= rank; ++i) items.push_back(RelExpr::atom(i));
  return RelExpr::seq(std::move(items));
}

RelExpr beta_inv_expr(int rank) {  // rn ... r2 r1
  std::vector<RelExpr> items;
  for (int i = rank; i >= 1; --i) items.push_back(RelExpr::atom(i));
  return RelExpr::seq(std::move(items));
}

// (r0 b^-i r0 b^i)^k
RelExpr beta_conjugate_relator(int rank, int i, int k) {
  return RelExpr::pow(RelExpr::seq({RelExpr::atom(0), RelExpr::pow(beta_inv_expr(rank), i),
                                    RelExpr::atom(0), RelExpr::pow(beta_expr(rank), i)}),
                      k);
}

// (r0 b^a r0 b^a)^s, the antipodal relator written with positive exponents.
RelExpr beta_antipodal_relator(int rank, int a, int s) {
  return RelExpr::pow(RelExpr::seq({RelExpr::atom(0), RelExpr::pow(beta_expr(rank), a),
                                    RelExpr::atom(0), RelExpr::pow(beta_expr(rank), a)}),
                      s);
}

// (r0 r1 (r2 r1)^{j-1})^k
RelExpr skew_relator(int j, int k) {
  return RelExpr::pow(RelExpr::seq({RelExpr::atom(0), RelExpr::atom(1),
                                    RelExpr::pow(RelExpr::seq({RelExpr::atom(2), RelExpr::atom(1)}),
                                                 j - 1)}),
                      k);
}

// r0 r1 r2 ... rn r{n-1} ... r2 r1, the cubic-toroid chain word.
RelExpr chain_expr(int rank) {
  std::vector<RelExpr> items;
  items.push_back(RelExpr::atom(0));
  for (int i = 1; i <= rank; ++i) items.push_back(RelExpr::atom(i));
  for (int i = rank - 1; i >= 1; --i) items.push_back(RelExpr::atom(i));
  return RelExpr::seq(std::move(items));
}

int positive_mod(int value, int modulus) { return ((value % modulus) + modulus) % modulus; }

std::vector<Permutation> base_vertex_transversal(const RealizedPolytope& P) {
  const int V = P.descriptor.vertex_count;
  std::vector<Permutation> t(V, Permutation(V));
  std::vector<bool> seen(V, false);
  std::vector<int> queue{P.F0};
  seen[P.F0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (const auto& g : P.taus) {
      int w = g[v];
      if (!seen[w]) {
        seen[w] = true;
        t[w] = compose(t[v], g);
        queue.push_back(w);
      }
    }
  }
  if (queue.size() != static_cast<std::size_t>(V))
    throw Error(P.descriptor.name + ": vertex action is not transitive");
  return t;
}

}  // namespace

Presentation extension_family_presentation(const FamilyDescriptor& d, int s) {
  if (s < 2) throw Error("extension requires s >= 2");
  const int rank = d.rank;
  Presentation p = coxeter_presentation(extension_schlafli(d), rho_labels(rank + 1));
  switch (d.family) {
    case Family::polygon: {
      const int pp = d.param;
      for (int j = 2; j <= pp - 1; ++j) p.add(skew_relator(j, 4));
      p.add(skew_relator(pp, 2 * s));
      break;
    }
    case Family::orthoplex:
      p.add(RelExpr::pow(chain_expr(rank), 2 * s));
      break;
    default:
      for (int i : d.squared_exponents) p.add(beta_conjugate_relator(rank, i, 2));
      p.add(beta_antipodal_relator(rank, d.alpha_exponent, s));
      break;
  }
  return p;
}

Presentation extension_presentation(const RealizedPolytope& P, const DiagonalClassification& D,
                                    int s) {
  if (s < 2) throw Error("extension requires s >= 2");
  const auto& d = P.descriptor;
  const int rank = d.rank;

  beta_representatives(P, D);  // validates the published transversal

  std::vector<int> class_of(d.vertex_count, -1);
  for (std::size_t c = 0; c < D.classes.size(); ++c)
    for (int v : D.classes[c]) class_of[v] = static_cast<int>(c);
  auto beta_power_image = [&](int i) {
    int x = P.F0;
    for (int k = 0; k < i; ++k) x = D.beta[x];
    return x;
  };

  // The antipodal representative must land in the antipodal class, exactly at
  // the antipode of the base vertex.
  if (beta_power_image(d.alpha_exponent) != P.alpha[P.F0])
    throw Error(d.name + ": beta^alpha_exponent does not reach the antipode");
  // Exponent 1 must represent the edge class (its relator collapses into the
  // leading Coxeter relator and is skipped).
  if (class_of[P.taus[0][P.F0]] != class_of[D.beta[P.F0]])
    throw Error(d.name + ": beta does not represent the edge class");

  std::vector<int> squared;
  for (int i : d.beta_transversal)
    if (i != 1 && i != d.alpha_exponent) squared.push_back(i);
  std::sort(squared.begin(), squared.end());
  if (squared != d.squared_exponents)
    throw Error(d.name + ": transversal does not split into edge/squared/antipodal parts");

  Presentation p = coxeter_presentation(extension_schlafli(d), rho_labels(rank + 1));
  for (int i : squared) p.add(beta_conjugate_relator(rank, i, 2));
  p.add(beta_antipodal_relator(rank, d.alpha_exponent, s));
  return p;
}

ExtensionRealization realize_extension(const RealizedPolytope& P, int s) {
  if (s < 2) throw Error("extension requires s >= 2");
  const auto& d = P.descriptor;
  const int V = d.vertex_count;
  const int block = 2 * s;
  const int degree = s * V + V;  // V/2 blocks of 2s points, then the vertices

  std::vector<int> block_of(V, -1);
  std::vector<int> pair_reps;
  for (int v = 0; v < V; ++v) {
    if (block_of[v] >= 0) continue;
    int mate = P.alpha[v];
    if (mate == v) throw Error(d.name + ": alpha fixes a vertex");
    block_of[v] = static_cast<int>(pair_reps.size());
    block_of[mate] = block_of[v];
    pair_reps.push_back(v);
  }

  auto sigma = [&](int F) {
    std::vector<int> im(degree);
    for (int x = 0; x < degree; ++x) im[x] = x;
    const int j = block_of[F];
    const int base = block * j;
    const bool rep = pair_reps[j] == F;
    for (int k = 0; k < block; ++k)
      im[base + k] = base + positive_mod(rep ? -k : 2 - k, block);
    return Permutation(std::move(im));
  };

  auto lift = [&](const Permutation& tau) {
    std::vector<int> im(degree);
    for (std::size_t j = 0; j < pair_reps.size(); ++j) {
      const int image_vertex = tau[pair_reps[j]];
      const int j2 = block_of[image_vertex];
      const bool aligned = pair_reps[j2] == image_vertex;
      for (int k = 0; k < block; ++k)
        im[block * static_cast<int>(j) + k] =
            block * j2 + (aligned ? k : positive_mod(1 - k, block));
    }
    for (int v = 0; v < V; ++v) im[s * V + v] = s * V + tau[v];
    return Permutation(std::move(im));
  };

  ExtensionRealization R;
  R.pair_reps = pair_reps;
  R.gens.push_back(sigma(P.F0));
  for (const auto& tau : P.taus) R.gens.push_back(lift(tau));
  for (std::size_t j = 0; j < pair_reps.size(); ++j) {
    int rep = pair_reps[j];
    R.sigma_pairs.emplace_back(sigma(rep), sigma(P.alpha[rep]));
  }

  // Construction self-checks.
  for (const auto& g : R.gens)
    if (g.is_identity() || !compose(g, g).is_identity())
      throw Error(d.name + ": extension generator is not an involution");
  for (const auto& [sr, sm] : R.sigma_pairs) {
    if (compose(sr, sm).order() != s)
      throw Error(d.name + ": antipodal sigma product does not have order s");
  }
  if (V <= 120) {
    for (int u = 0; u < V; ++u)
      for (int v = u + 1; v < V; ++v) {
        if (P.alpha[u] == v) continue;
        Permutation su = sigma(u), sv = sigma(v);
        if (compose(su, sv) != compose(sv, su))
          throw Error(d.name + ": non-antipodal sigma generators fail to commute");
      }
  }
  {
    std::vector<Permutation> t = base_vertex_transversal(P);
    Permutation A = lift(P.alpha);
    const Permutation& rho0 = R.gens[0];
    Permutation inner = compose(compose(compose(rho0, A), rho0), A);
    for (std::size_t j = 0; j < pair_reps.size(); ++j) {
      Permutation L = lift(t[pair_reps[j]]);
      Permutation lhs = compose(R.sigma_pairs[j].first, R.sigma_pairs[j].second);
      Permutation rhs = compose(compose(L.inverse(), inner), L);
      if (lhs != rhs)
        throw Error(d.name + ": block action disagrees with the conjugation identity");
    }
  }
  return R;
}

ExtensionArtifact build_extension(const FamilyDescriptor& d, int s) {
  ExtensionArtifact E;
  E.spec = ExtensionSpec{d, s};
  E.base = realize(d);
  E.diagonals = diagonal_classes(E.base);
  E.presentation = extension_family_presentation(d, s);
  E.recipe = extension_presentation(E.base, E.diagonals, s);
  ExtensionRealization R = realize_extension(E.base, s);
  E.gens = R.gens;
  E.sigma_pairs = std::move(R.sigma_pairs);
  E.pair_reps = std::move(R.pair_reps);
  E.group = PermGroup(E.gens);
  E.q = d.vertex_count / 2;
  E.expected_order = boost::multiprecision::pow(Integer(2 * s), E.q) * d.expected_order;
  return E;
}

bool LayeredReport::all_passed_or_skipped() const {
  for (const auto& layer : layers)
    if (layer.status == LayerStatus::fail) return false;
  return true;
}

bool LayeredReport::has_failure() const { return !all_passed_or_skipped(); }

const LayerResult* LayeredReport::find(const std::string& name) const {
  for (const auto& layer : layers)
    if (layer.name == name) return &layer;
  return nullptr;
}

namespace {

LayerResult relators_hold_layer(const std::string& name, const Presentation& pres,
                                const std::vector<Permutation>& gens, int degree) {
  for (const auto& r : pres.relators)
    if (!evaluate(r.flatten(), gens, degree).is_identity())
      return {name, LayerStatus::fail, "relator fails: " + r.render(pres.labels)};
  return {name, LayerStatus::pass, ""};
}

}  // namespace

LayeredReport verify_extension(const ExtensionArtifact& E, const VerifyLimits& limits) {
  LayeredReport report;
  const int degree = E.gens.empty() ? 0 : E.gens[0].degree();

  LayerResult l1 = relators_hold_layer("L1", E.presentation, E.gens, degree);
  if (l1.status == LayerStatus::pass) {
    LayerResult recipe_check = relators_hold_layer("L1", E.recipe, E.gens, degree);
    if (recipe_check.status != LayerStatus::pass) {
      l1.status = LayerStatus::fail;
      l1.detail = "recipe " + recipe_check.detail;
    }
  }
  report.layers.push_back(l1);

  {
    LayerResult l2{"L2", LayerStatus::pass, ""};
    if (E.group.order() != E.expected_order) {
      l2.status = LayerStatus::fail;
      l2.detail = "concrete order " + E.group.order().str() + " != expected " +
                  E.expected_order.str();
    }
    report.layers.push_back(l2);
  }

  {
    LayerResult l3{"L3", LayerStatus::pass, ""};
    if (E.expected_order > Integer(limits.tc_limit)) {
      l3.status = LayerStatus::skip;
      l3.detail = "expected order exceeds coset limit";
    } else {
      CosetTable table = todd_coxeter(E.presentation, {}, limits.tc_limit);
      if (table.status != CosetTable::Status::complete) {
        l3.status = LayerStatus::skip;
        l3.detail = "enumeration hit coset limit";
      } else if (Integer(table.index) != E.expected_order) {
        l3.status = LayerStatus::fail;
        l3.detail = "presented order " + std::to_string(table.index) + " != expected " +
                    E.expected_order.str();
      }
    }
    report.layers.push_back(l3);
  }

  {
    LayerResult l4{"L4", LayerStatus::pass, ""};
    const int s = E.spec.s;
    Integer vertex_count = boost::multiprecision::pow(Integer(2 * s), E.q);
    if (s % 2 != 0) {
      l4.status = LayerStatus::skip;
      l4.detail = "s odd: no central symmetry claim";
    } else if (vertex_count > Integer(limits.l4_vertex_bound)) {
      l4.status = LayerStatus::skip;
      l4.detail = "vertex count exceeds bound";
    } else {
      Permutation z(degree);
      for (const auto& [sr, sm] : E.sigma_pairs) {
        Permutation rot = compose(sr, sm);
        for (int k = 0; k < s / 2; ++k) z = compose(z, rot);
      }
      if (z.is_identity()) {
        l4 = {"L4", LayerStatus::fail, "central candidate is the identity"};
      } else if (!compose(z, z).is_identity()) {
        l4 = {"L4", LayerStatus::fail, "central candidate is not an involution"};
      } else {
        for (const auto& g : E.gens)
          if (compose(z, g) != compose(g, z)) {
            l4 = {"L4", LayerStatus::fail, "central candidate fails to commute"};
            break;
          }
      }
      if (l4.status == LayerStatus::pass) {
        // Enumerate the vertex cosets of <rho_1,...,rho_n> and check that z
        // moves every one of them.
        std::vector<Permutation> sub_gens(E.gens.begin() + 1, E.gens.end());
        PermGroup H(sub_gens);
        std::map<std::vector<int>, int> seen;
        std::vector<Permutation> reps;
        Permutation start = H.minimal_coset_rep(Permutation(degree));
        seen.emplace(start.images(), 0);
        reps.push_back(start);
        for (std::size_t head = 0; head < reps.size(); ++head) {
          Permutation current = reps[head];
          for (const auto& g : E.gens) {
            Permutation next = H.minimal_coset_rep(compose(current, g));
            if (seen.emplace(next.images(), static_cast<int>(reps.size())).second)
              reps.push_back(std::move(next));
          }
        }
        if (Integer(reps.size()) != vertex_count) {
          l4 = {"L4", LayerStatus::fail,
                "vertex coset count " + std::to_string(reps.size()) + " != expected " +
                    vertex_count.str()};
        } else {
          for (const auto& rep : reps) {
            if (H.minimal_coset_rep(compose(rep, z)) == rep) {
              l4 = {"L4", LayerStatus::fail, "central candidate fixes a vertex coset"};
              break;
            }
          }
        }
      }
      report.layers.push_back(l4);
      return report;
    }
    report.layers.push_back(l4);
  }

  return report;
}

bool recipe_matches_family(const ExtensionArtifact& E) {
  return E.presentation.canonical_relators() == E.recipe.canonical_relators();
}

}  // namespace polyext
