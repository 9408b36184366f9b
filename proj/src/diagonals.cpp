#include "polyext/diagonals.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace polyext {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

// Transversal of the vertex action: t[v] maps F0 to v.
std::vector<Permutation> vertex_transversal(const RealizedPolytope& P) {
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

DiagonalClassification diagonal_classes(const RealizedPolytope& P) {
  const int V = P.descriptor.vertex_count;
  const int F0 = P.F0;

  std::vector<Permutation> stab_gens(P.taus.begin() + 1, P.taus.end());
  for (const auto& g : stab_gens)
    if (g[F0] != F0) throw Error(P.descriptor.name + ": stabilizer generator moves F0");
  PermGroup G0(stab_gens);
  if (G0.order() * V != P.group.order())
    throw Error(P.descriptor.name + ": <tau_1,...> is not the full stabilizer of F0");

  UnionFind uf(V);
  for (const auto& g : stab_gens)
    for (int v = 0; v < V; ++v) uf.unite(v, g[v]);

  std::vector<Permutation> t = vertex_transversal(P);
  for (int v = 0; v < V; ++v) {
    if (v == F0) continue;
    int u = t[v].inverse()[F0];  // F0 * t_v^{-1}
    uf.unite(v, u);
  }

  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < V; ++v) {
    if (v == F0) continue;
    by_root[uf.find(v)].push_back(v);
  }
  if (by_root.count(uf.find(F0)))
    throw Error(P.descriptor.name + ": a diagonal class merged with the base vertex");

  DiagonalClassification D;
  for (auto& [root, members] : by_root) {
    std::sort(members.begin(), members.end());
    D.classes.push_back(std::move(members));
  }
  // std::map ordering by root == ordering by smallest member (roots are minima).

  std::vector<int> class_of(V, -1);
  for (std::size_t c = 0; c < D.classes.size(); ++c)
    for (int v : D.classes[c]) class_of[v] = static_cast<int>(c);

  Word beta_word;
  for (int i = 0; i < P.descriptor.rank; ++i) beta_word.push_back(i);
  D.beta = evaluate(beta_word, P.taus, V);

  D.antipodal_index = class_of[P.alpha[F0]];

  // Smallest exponent per class along the beta-cycle of F0.
  D.beta_reps.assign(D.classes.size(), -1);
  int x = F0;
  int e = 0;
  do {
    x = D.beta[x];
    ++e;
    if (x == F0) break;
    int c = class_of[x];
    if (D.beta_reps[c] < 0) D.beta_reps[c] = e;
  } while (true);

  return D;
}

std::vector<int> beta_representatives(const RealizedPolytope& P,
                                      const DiagonalClassification& D) {
  const auto& d = P.descriptor;
  for (std::size_t c = 0; c < D.classes.size(); ++c)
    if (D.beta_reps[c] < 0)
      throw Error(d.name + ": diagonal class " + std::to_string(c) +
                  " is unreachable by powers of beta");

  // Validate the published list as a transversal: each exponent hits a
  // distinct class and every class is hit.
  std::vector<int> class_of(d.vertex_count, -1);
  for (std::size_t c = 0; c < D.classes.size(); ++c)
    for (int v : D.classes[c]) class_of[v] = static_cast<int>(c);
  std::vector<bool> hit(D.classes.size(), false);
  for (int i : d.beta_transversal) {
    int x = P.F0;
    for (int k = 0; k < i; ++k) x = D.beta[x];
    if (x == P.F0)
      throw Error(d.name + ": published representative beta^" + std::to_string(i) +
                  " fixes the base vertex");
    int c = class_of[x];
    if (hit[c])
      throw Error(d.name + ": published representative beta^" + std::to_string(i) +
                  " repeats a diagonal class");
    hit[c] = true;
  }
  if (d.beta_transversal.size() != D.classes.size())
    throw Error(d.name + ": published transversal size differs from the class count");

  std::vector<int> reps = D.beta_reps;
  std::sort(reps.begin(), reps.end());
  return reps;
}

int antipodal_class(const RealizedPolytope& P, const DiagonalClassification& D) {
  if (D.antipodal_index < 0)
    throw Error(P.descriptor.name + ": antipodal vertex is unclassified");
  const auto& cls = D.classes[D.antipodal_index];
  // The stabilizer fixes F0*alpha (alpha is central), so the antipodal class
  // must be the singleton {F0*alpha}.
  if (cls.size() != 1 || cls[0] != P.alpha[P.F0])
    throw Error(P.descriptor.name + ": antipodal class is not the singleton {F0*alpha}");
  return D.antipodal_index;
}

}  // namespace polyext
