#include "polyext/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>

namespace polyext {

namespace {

std::string subset_text(int mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; mask >> i; ++i)
    if (mask & (1 << i)) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
  return out + "}";
}

std::string pair_witness(int I, int J) {
  return "I=" + subset_text(I) + " J=" + subset_text(J);
}

}  // namespace

IntersectionPropertyResult intersection_property(const std::vector<Permutation>& gens,
                                                 std::size_t limit) {
  const int n = static_cast<int>(gens.size());
  if (n == 0) return {CheckStatus::pass, ""};
  if (n > 16) throw Error("intersection property: too many generators");
  const int degree = gens[0].degree();
  const int full = (1 << n) - 1;

  std::vector<std::unique_ptr<PermGroup>> cache(1u << n);
  auto group_of = [&](int mask) -> const PermGroup& {
    auto& slot = cache[mask];
    if (!slot) {
      std::vector<Permutation> sub;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) sub.push_back(gens[i]);
      slot = std::make_unique<PermGroup>(sub.empty() ? PermGroup::trivial(degree)
                                                     : PermGroup(sub));
    }
    return *slot;
  };

  for (int I = 1; I < full; ++I)
    for (int J = I + 1; J < full; ++J) {
      const int meet = I & J;
      if (meet == I || meet == J) continue;  // nested: intersection is immediate
      const PermGroup* a = &group_of(I);
      const PermGroup* b = &group_of(J);
      if (a->order() > b->order()) std::swap(a, b);
      PermGroup crossing;
      try {
        crossing = subgroup_intersection(*a, *b, IntersectionLimits{limit});
      } catch (const Error&) {
        return {CheckStatus::skipped, pair_witness(I, J)};
      }
      if (crossing.order() != group_of(meet).order())
        return {CheckStatus::fail, pair_witness(I, J)};
    }
  return {CheckStatus::pass, ""};
}

CosetGeometry build_geometry(const std::vector<Permutation>& gens, const GeometryLimits& limits,
                             int override_type, const std::vector<Permutation>& override_gens) {
  if (gens.empty()) throw Error("geometry: no generators");
  const int degree = gens[0].degree();
  const int r = static_cast<int>(gens.size());

  CosetGeometry geo;
  geo.gens = gens;
  geo.group = PermGroup(gens);
  if (geo.group.order() > Integer(limits.group_bound))
    throw Error("geometry: group order exceeds bound");
  for (const auto& g : override_gens)
    if (!geo.group.contains(g)) throw Error("geometry: override generator outside the group");

  for (int i = 0; i < r; ++i) {
    std::vector<Permutation> sub;
    if (i == override_type) {
      sub = override_gens;
    } else {
      for (int k = 0; k < r; ++k)
        if (k != i) sub.push_back(gens[k]);
    }
    geo.parabolics.push_back(sub.empty() ? PermGroup::trivial(degree) : PermGroup(sub));
  }

  geo.cosets.resize(r);
  for (int i = 0; i < r; ++i) {
    std::map<std::vector<int>, int> seen;
    geo.group.for_each_element([&](const Permutation& e) {
      Permutation rep = geo.parabolics[i].minimal_coset_rep(e);
      seen.emplace(rep.images(), 0);
      return true;
    });
    for (const auto& [images, unused] : seen) {
      (void)unused;
      geo.cosets[i].emplace_back(images);
    }
    if (Integer(geo.cosets[i].size()) * geo.parabolics[i].order() != geo.group.order())
      throw Error("geometry: coset count disagrees with the subgroup index");
  }

  geo.incidence.resize(r);
  for (int i = 0; i < r; ++i)
    geo.incidence[i].assign(geo.cosets[i].size(),
                            std::vector<std::vector<int>>(static_cast<std::size_t>(r)));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (std::size_t a = 0; a < geo.cosets[i].size(); ++a)
        for (std::size_t b = 0; b < geo.cosets[j].size(); ++b) {
          Permutation t = compose(geo.cosets[i][a], geo.cosets[j][b].inverse());
          bool incident = !geo.parabolics[i].for_each_element([&](const Permutation& x) {
            return !geo.parabolics[j].contains(compose(x.inverse(), t));
          });
          if (incident) {
            geo.incidence[i][a][j].push_back(static_cast<int>(b));
            geo.incidence[j][b][i].push_back(static_cast<int>(a));
          }
        }
  return geo;
}

namespace {

bool flag_incident(const CosetGeometry& geo, int i, int a, int j, int b) {
  const auto& row = geo.incidence[i][a][j];
  return std::binary_search(row.begin(), row.end(), b);
}

// All flags over the ascending type list `types`: each flag assigns a coset id
// to every listed type, mutually incident.
std::vector<std::vector<int>> flags_over(const CosetGeometry& geo, const std::vector<int>& types) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(std::size_t)> dfs = [&](std::size_t pos) {
    if (pos == types.size()) {
      out.push_back(current);
      return;
    }
    const int t = types[pos];
    for (std::size_t b = 0; b < geo.cosets[t].size(); ++b) {
      bool ok = true;
      for (std::size_t k = 0; k < pos && ok; ++k)
        ok = flag_incident(geo, types[k], current[k], t, static_cast<int>(b));
      if (!ok) continue;
      current.push_back(static_cast<int>(b));
      dfs(pos + 1);
      current.pop_back();
    }
  };
  dfs(0);
  return out;
}

}  // namespace

GeometryProperties geometry_properties(const CosetGeometry& geo) {
  const int r = static_cast<int>(geo.gens.size());
  GeometryProperties props;

  std::vector<int> all_types(r);
  for (int i = 0; i < r; ++i) all_types[i] = i;
  props.chambers = flags_over(geo, all_types).size();

  // Thin: every flag missing exactly one type extends in exactly two ways.
  props.thin = true;
  for (int t = 0; t < r && props.thin; ++t) {
    std::vector<int> rest;
    for (int i = 0; i < r; ++i)
      if (i != t) rest.push_back(i);
    for (const auto& flag : flags_over(geo, rest)) {
      int extensions = 0;
      for (std::size_t b = 0; b < geo.cosets[t].size(); ++b) {
        bool ok = true;
        for (std::size_t k = 0; k < rest.size() && ok; ++k)
          ok = flag_incident(geo, rest[k], flag[k], t, static_cast<int>(b));
        if (ok) ++extensions;
      }
      if (extensions != 2) {
        props.thin = false;
        break;
      }
    }
  }

  // Residual connectedness: the residue of every flag of corank >= 2 is a
  // nonempty connected incidence graph (the empty flag covers the whole
  // geometry's connectivity).
  props.residually_connected = true;
  for (int mask = 0; mask < (1 << r) && props.residually_connected; ++mask) {
    std::vector<int> types;
    for (int i = 0; i < r; ++i)
      if (mask & (1 << i)) types.push_back(i);
    if (r - static_cast<int>(types.size()) < 2) continue;
    for (const auto& flag : flags_over(geo, types)) {
      std::vector<std::pair<int, int>> nodes;  // (type, coset)
      for (int j = 0; j < r; ++j) {
        if (mask & (1 << j)) continue;
        for (std::size_t b = 0; b < geo.cosets[j].size(); ++b) {
          bool ok = true;
          for (std::size_t k = 0; k < types.size() && ok; ++k)
            ok = flag_incident(geo, types[k], flag[k], j, static_cast<int>(b));
          if (ok) nodes.emplace_back(j, static_cast<int>(b));
        }
      }
      if (nodes.empty()) {
        props.residually_connected = false;
        break;
      }
      std::vector<int> component(nodes.size(), -1);
      std::vector<std::size_t> queue{0};
      component[0] = 0;
      while (!queue.empty()) {
        std::size_t at = queue.back();
        queue.pop_back();
        for (std::size_t other = 0; other < nodes.size(); ++other) {
          if (component[other] >= 0 || nodes[other].first == nodes[at].first) continue;
          if (flag_incident(geo, nodes[at].first, nodes[at].second, nodes[other].first,
                            nodes[other].second)) {
            component[other] = 0;
            queue.push_back(other);
          }
        }
      }
      if (std::count(component.begin(), component.end(), -1) > 0) {
        props.residually_connected = false;
        break;
      }
    }
  }

  // Flag transitivity: the coset action of the group reaches every flag of
  // every nonempty type subset from the first one.
  std::vector<std::map<std::vector<int>, int>> coset_index(r);
  for (int i = 0; i < r; ++i)
    for (std::size_t a = 0; a < geo.cosets[i].size(); ++a)
      coset_index[i].emplace(geo.cosets[i][a].images(), static_cast<int>(a));
  auto act = [&](int type, int coset, const Permutation& g) {
    Permutation rep =
        geo.parabolics[type].minimal_coset_rep(compose(geo.cosets[type][coset], g));
    return coset_index[type].at(rep.images());
  };
  props.flag_transitive = true;
  for (int mask = 1; mask < (1 << r) && props.flag_transitive; ++mask) {
    std::vector<int> types;
    for (int i = 0; i < r; ++i)
      if (mask & (1 << i)) types.push_back(i);
    auto flags = flags_over(geo, types);
    if (flags.empty()) continue;
    std::set<std::vector<int>> all(flags.begin(), flags.end());
    std::set<std::vector<int>> orbit{flags[0]};
    std::vector<std::vector<int>> queue{flags[0]};
    while (!queue.empty()) {
      std::vector<int> flag = queue.back();
      queue.pop_back();
      for (const auto& g : geo.gens) {
        std::vector<int> image(flag.size());
        for (std::size_t k = 0; k < flag.size(); ++k) image[k] = act(types[k], flag[k], g);
        if (orbit.insert(image).second) queue.push_back(image);
      }
    }
    if (orbit != all) props.flag_transitive = false;
  }

  return props;
}

std::pair<int, int> classify_torus_44(const PermGroup& group,
                                      const std::vector<Permutation>& gens) {
  if (gens.size() != 3) throw Error("torus classification needs exactly 3 generators");
  for (const auto& g : gens)
    if (g.is_identity() || !compose(g, g).is_identity())
      throw Error("torus classification: generators must be involutions");
  if (compose(gens[0], gens[1]).order() != 4 || compose(gens[1], gens[2]).order() != 4 ||
      compose(gens[0], gens[2]).order() != 2)
    throw Error("torus classification: generators are not of type {4,4}");

  Permutation T = compose(compose(compose(gens[0], gens[1]), gens[2]), gens[1]);
  const std::int64_t k = T.order();
  const Integer N = group.order();
  if (N == Integer(8) * k * k) return {static_cast<int>(k), 0};
  if (N == Integer(4) * k * k && k % 2 == 0)
    return {static_cast<int>(k / 2), static_cast<int>(k / 2)};
  throw Error("torus classification: order pattern matches neither (k,0) nor (k/2,k/2)");
}

}  // namespace polyext
