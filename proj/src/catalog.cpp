#include "polyext/catalog.hpp"

#include <algorithm>
#include <numeric>

namespace polyext {

namespace {

Integer signed_hyperoctahedral_order(int n) {
  Integer order = Integer(1) << n;
  for (int k = 2; k <= n; ++k) order *= k;
  return order;
}

std::vector<int> range_inclusive(int lo, int hi) {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

std::vector<std::string> tau_labels(int rank) {
  std::vector<std::string> labels;
  labels.reserve(rank);
  for (int i = 0; i < rank; ++i) labels.push_back("t" + std::to_string(i));
  return labels;
}

}  // namespace

std::string family_token(Family f) {
  switch (f) {
    case Family::polygon: return "polygon";
    case Family::orthoplex: return "orthoplex";
    case Family::cube: return "cube";
    case Family::icosahedron: return "icosahedron";
    case Family::dodecahedron: return "dodecahedron";
    case Family::cell24: return "cell24";
    case Family::cell600: return "cell600";
    case Family::cell120: return "cell120";
  }
  throw Error("unknown family");
}

FamilyDescriptor descriptor(Family f, int param) {
  FamilyDescriptor d;
  d.family = f;
  d.param = param;
  switch (f) {
    case Family::polygon: {
      const int p = param;
      if (p < 2) throw Error("polygon requires p >= 2");
      d.name = "polygon(" + std::to_string(p) + ")";
      d.schlafli = {2 * p};
      d.rank = 2;
      d.vertex_count = 2 * p;
      d.alpha_exponent = p;
      d.expected_order = 4 * p;
      d.beta_transversal = range_inclusive(1, p);
      d.squared_exponents = range_inclusive(2, p - 1);
      return d;
    }
    case Family::orthoplex: {
      const int n = param;
      if (n < 3) throw Error("orthoplex requires n >= 3");
      d.name = "orthoplex(" + std::to_string(n) + ")";
      d.schlafli.assign(n - 2, 3);
      d.schlafli.push_back(4);
      d.rank = n;
      d.vertex_count = 2 * n;
      d.alpha_exponent = n;
      d.expected_order = signed_hyperoctahedral_order(n);
      d.beta_transversal = {1, n};
      d.squared_exponents = {};
      return d;
    }
    case Family::cube: {
      const int n = param;
      if (n < 3) throw Error("cube requires n >= 3");
      d.name = "cube(" + std::to_string(n) + ")";
      d.schlafli = {4};
      d.schlafli.insert(d.schlafli.end(), n - 2, 3);
      d.rank = n;
      d.vertex_count = 1 << n;
      d.alpha_exponent = n;
      d.expected_order = signed_hyperoctahedral_order(n);
      d.beta_transversal = range_inclusive(1, n);
      d.squared_exponents = range_inclusive(2, n - 1);
      return d;
    }
    case Family::icosahedron:
      d.param = 0;
      d.name = "icosahedron";
      d.schlafli = {3, 5};
      d.rank = 3;
      d.vertex_count = 12;
      d.alpha_exponent = 5;
      d.expected_order = 120;
      d.beta_transversal = {1, 3, 5};
      d.squared_exponents = {3};
      return d;
    case Family::dodecahedron:
      d.param = 0;
      d.name = "dodecahedron";
      d.schlafli = {5, 3};
      d.rank = 3;
      d.vertex_count = 20;
      d.alpha_exponent = 5;
      d.expected_order = 120;
      d.beta_transversal = {1, 2, 3, 4, 5};
      d.squared_exponents = {2, 3, 4};
      return d;
    case Family::cell24:
      d.param = 0;
      d.name = "cell24";
      d.schlafli = {3, 4, 3};
      d.rank = 4;
      d.vertex_count = 24;
      d.alpha_exponent = 6;
      d.expected_order = 1152;
      d.beta_transversal = {1, 3, 4, 6};
      d.squared_exponents = {3, 4};
      return d;
    case Family::cell600:
      d.param = 0;
      d.name = "cell600";
      d.schlafli = {3, 3, 5};
      d.rank = 4;
      d.vertex_count = 120;
      d.alpha_exponent = 15;
      d.expected_order = 14400;
      d.beta_transversal = {1, 4, 6, 7, 9, 10, 12, 15};
      d.squared_exponents = {4, 6, 7, 9, 10, 12};
      return d;
    case Family::cell120:
      d.param = 0;
      d.name = "cell120";
      d.schlafli = {5, 3, 3};
      d.rank = 4;
      d.vertex_count = 600;
      d.alpha_exponent = 15;
      d.expected_order = 14400;
      d.beta_transversal = range_inclusive(1, 15);
      d.squared_exponents = range_inclusive(2, 14);
      return d;
  }
  throw Error("unknown family");
}

FamilyDescriptor descriptor_by_name(const std::string& token, int p, int n) {
  if (token == "polygon") return descriptor(Family::polygon, p);
  if (token == "orthoplex") return descriptor(Family::orthoplex, n);
  if (token == "cube") return descriptor(Family::cube, n);
  if (token == "icosahedron") return descriptor(Family::icosahedron);
  if (token == "dodecahedron") return descriptor(Family::dodecahedron);
  if (token == "cell24") return descriptor(Family::cell24);
  if (token == "cell600") return descriptor(Family::cell600);
  if (token == "cell120") return descriptor(Family::cell120);
  throw Error("unknown family '" + token + "'");
}

std::vector<FamilyDescriptor> catalog_all(int max_n, int max_p) {
  std::vector<FamilyDescriptor> out;
  for (int p = 2; p <= max_p; ++p) out.push_back(descriptor(Family::polygon, p));
  for (int n = 3; n <= max_n; ++n) out.push_back(descriptor(Family::orthoplex, n));
  for (int n = 3; n <= max_n; ++n) out.push_back(descriptor(Family::cube, n));
  out.push_back(descriptor(Family::icosahedron));
  out.push_back(descriptor(Family::dodecahedron));
  out.push_back(descriptor(Family::cell24));
  out.push_back(descriptor(Family::cell600));
  out.push_back(descriptor(Family::cell120));
  return out;
}

Presentation coxeter_presentation(const std::vector<int>& schlafli,
                                  const std::vector<std::string>& labels) {
  const int k = static_cast<int>(labels.size());
  if (static_cast<int>(schlafli.size()) != k - 1)
    throw Error("coxeter_presentation: type length must be rank - 1");
  Presentation p = Presentation::over_involutions(labels);
  for (int i = 0; i + 1 < k; ++i)
    p.add(RelExpr::pow(RelExpr::seq({RelExpr::atom(i), RelExpr::atom(i + 1)}), schlafli[i]));
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j)
      p.add(RelExpr::pow(RelExpr::seq({RelExpr::atom(i), RelExpr::atom(j)}), 2));
  return p;
}

std::vector<Permutation> cube_coordinate_taus(int n) {
  const int degree = 1 << n;
  std::vector<Permutation> taus;
  {
    std::vector<int> images(degree);
    for (int v = 0; v < degree; ++v) images[v] = v ^ 1;
    taus.push_back(Permutation(std::move(images)));
  }
  for (int j = 1; j < n; ++j) {
    std::vector<int> images(degree);
    for (int v = 0; v < degree; ++v) {
      int a = (v >> (j - 1)) & 1;
      int b = (v >> j) & 1;
      int w = v & ~((1 << (j - 1)) | (1 << j));
      images[v] = w | (b << (j - 1)) | (a << j);
    }
    taus.push_back(Permutation(std::move(images)));
  }
  return taus;
}

namespace {

Word alpha_word(const FamilyDescriptor& d) {
  Word w;
  for (int k = 0; k < d.alpha_exponent; ++k)
    for (int i = 0; i < d.rank; ++i) w.push_back(i);
  return w;
}

void check_alpha(const Permutation& alpha, const std::vector<Permutation>& taus,
                 const std::string& name) {
  if (alpha.is_identity()) throw Error(name + ": alpha is the identity");
  if (!compose(alpha, alpha).is_identity()) throw Error(name + ": alpha is not an involution");
  for (const auto& tau : taus)
    if (compose(alpha, tau) != compose(tau, alpha))
      throw Error(name + ": alpha is not central");
  for (int v = 0; v < alpha.degree(); ++v)
    if (alpha[v] == v) throw Error(name + ": alpha fixes a vertex");
}

}  // namespace

RealizedPolytope realize(const FamilyDescriptor& d) {
  Presentation pres = coxeter_presentation(d.schlafli, tau_labels(d.rank));
  std::vector<Permutation> taus;
  if (d.family == Family::cube) {
    taus = cube_coordinate_taus(d.param);
  } else {
    std::vector<Word> stabilizer_words;
    for (int i = 1; i < d.rank; ++i) stabilizer_words.push_back({i});
    CosetTable table = todd_coxeter(pres, stabilizer_words, 100'000);
    if (table.status != CosetTable::Status::complete)
      throw Error(d.name + ": vertex coset enumeration hit the limit");
    if (table.index != static_cast<std::size_t>(d.vertex_count))
      throw Error(d.name + ": vertex coset count does not match the expected vertex count");
    taus = table.coset_permutations();
  }
  if (!taus.empty() && taus.front().degree() != d.vertex_count)
    throw Error(d.name + ": vertex action degree mismatch");
  PermGroup group(taus);
  if (group.order() != d.expected_order)
    throw Error(d.name + ": realized order does not match the expected order");
  for (int i = 1; i < d.rank; ++i)
    if (taus[i][0] != 0) throw Error(d.name + ": stabilizer generator moves the base vertex");
  EpimorphismReport epi = verify_epimorphism(pres, taus, group);
  if (!epi.ok())
    throw Error(d.name + ": presentation relator fails on the vertex action (" +
                epi.first_failed_relator + ")");
  Permutation alpha = evaluate(alpha_word(d), taus, d.vertex_count);
  check_alpha(alpha, taus, d.name);
  return RealizedPolytope{d, taus, std::move(group), 0, std::move(alpha), std::move(pres)};
}

Permutation central_involution(const RealizedPolytope& p) {
  Permutation alpha = evaluate(alpha_word(p.descriptor), p.taus, p.descriptor.vertex_count);
  check_alpha(alpha, p.taus, p.descriptor.name);
  return alpha;
}

std::vector<std::vector<int>> coxeter_matrix(const std::vector<Permutation>& gens) {
  for (const auto& g : gens)
    if (g.is_identity() || !compose(g, g).is_identity())
      throw Error("coxeter_matrix: generators must be involutions");
  const int k = static_cast<int>(gens.size());
  std::vector<std::vector<int>> m(k, std::vector<int>(k, 1));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      int order = static_cast<int>(compose(gens[i], gens[j]).order());
      m[i][j] = order;
      m[j][i] = order;
    }
  return m;
}

}  // namespace polyext
