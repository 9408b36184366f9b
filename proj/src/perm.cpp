#include "polyext/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace polyext {

Permutation::Permutation(int degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v]) throw Error("permutation: image list is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= degree) throw Error("permutation: cycle point out of range");
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Permutation::lowest_moved_point() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return i;
  return -1;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

std::int64_t Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  std::int64_t result = 1;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::int64_t len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    std::int64_t g = std::gcd(result, len);
    if (result / g > (std::int64_t{1} << 50) / len) throw Error("permutation order: overflow");
    result = result / g * len;
  }
  return result;
}

std::string Permutation::cycle_string() const {
  std::vector<char> seen(images_.size(), 0);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    out << '(' << i;
    seen[i] = 1;
    for (int j = images_[i]; j != i; j = images_[j]) {
      seen[j] = 1;
      out << ' ' << j;
    }
    out << ')';
  }
  return any ? out.str() : std::string("()");
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw Error("compose: degree mismatch");
  std::vector<int> images(p.degree());
  const auto& pi = p.images();
  const auto& qi = q.images();
  for (int i = 0; i < p.degree(); ++i) images[i] = qi[pi[i]];
  return Permutation(std::move(images));
}

const Permutation& Orbit::transversal(int point) const {
  if (point < 0 || point >= static_cast<int>(slot.size()) || slot[point] < 0)
    throw Error("orbit: point has no transversal element");
  return rep[slot[point]];
}

std::vector<int> orbit_of(const std::vector<Permutation>& gens, int point) {
  return orbit_with_transversal(gens, point).points;
}

Orbit orbit_with_transversal(const std::vector<Permutation>& gens, int point) {
  if (gens.empty()) throw Error("orbit: empty generator list");
  int degree = gens.front().degree();
  if (point < 0 || point >= degree) throw Error("orbit: point out of range");
  Orbit orb;
  orb.root = point;
  orb.slot.assign(degree, -1);
  orb.points.push_back(point);
  orb.slot[point] = 0;
  orb.rep.push_back(Permutation(degree));
  for (std::size_t i = 0; i < orb.points.size(); ++i) {
    for (const auto& g : gens) {
      if (g.degree() != degree) throw Error("orbit: generator degree mismatch");
      int img = g[orb.points[i]];
      if (orb.slot[img] < 0) {
        orb.slot[img] = static_cast<int>(orb.points.size());
        orb.points.push_back(img);
        orb.rep.push_back(compose(orb.rep[i], g));
      }
    }
  }
  return orb;
}

PermGroup PermGroup::trivial(int degree) {
  PermGroup g;
  g.degree_ = degree;
  g.order_ = 1;
  return g;
}

PermGroup::PermGroup(std::vector<Permutation> generators) {
  if (generators.empty()) throw Error("perm group: empty generator list (use trivial)");
  degree_ = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree_) throw Error("perm group: generator degree mismatch");
  input_gens_ = std::move(generators);
  build();
}

std::size_t PermGroup::level_at(int point) {
  std::size_t lo = 0, hi = levels_.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (levels_[mid].point < point)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < levels_.size() && levels_[lo].point == point) return lo;
  Level lvl;
  lvl.point = point;
  lvl.slot.assign(degree_, -1);
  lvl.orbit.push_back(point);
  lvl.slot[point] = 0;
  lvl.rep.push_back(Permutation(degree_));
  lvl.rep_inv.push_back(Permutation(degree_));
  levels_.insert(levels_.begin() + lo, std::move(lvl));
  watermark_.insert(watermark_.begin() + lo, std::vector<std::size_t>{0});
  return lo;
}

void PermGroup::close_orbit(std::size_t level_index, std::size_t from_index) {
  Level& lvl = levels_[level_index];
  for (std::size_t i = from_index; i < lvl.orbit.size(); ++i) {
    for (const auto& sg : strong_) {
      if (sg.lmp < lvl.point) continue;
      int img = sg.perm[lvl.orbit[i]];
      if (lvl.slot[img] < 0) {
        lvl.slot[img] = static_cast<int>(lvl.orbit.size());
        lvl.orbit.push_back(img);
        lvl.rep.push_back(compose(lvl.rep[i], sg.perm));
        lvl.rep_inv.push_back(lvl.rep.back().inverse());
      }
    }
  }
  watermark_[level_index].resize(lvl.orbit.size(), 0);
}

void PermGroup::extend_orbit_with(std::size_t level_index, const Permutation& gen) {
  Level& lvl = levels_[level_index];
  std::size_t old_size = lvl.orbit.size();
  for (std::size_t i = 0; i < old_size; ++i) {
    int img = gen[lvl.orbit[i]];
    if (lvl.slot[img] < 0) {
      lvl.slot[img] = static_cast<int>(lvl.orbit.size());
      lvl.orbit.push_back(img);
      lvl.rep.push_back(compose(lvl.rep[i], gen));
      lvl.rep_inv.push_back(lvl.rep.back().inverse());
    }
  }
  close_orbit(level_index, old_size);
}

void PermGroup::sift_in(Permutation h) {
  while (!h.is_identity()) {
    int p = h.lowest_moved_point();
    std::size_t li = level_at(p);
    Level& lvl = levels_[li];
    int v = h[p];
    if (lvl.slot[v] >= 0) {
      h = compose(h, lvl.rep_inv[lvl.slot[v]]);
    } else {
      strong_.push_back(StrongGen{h, p});
      // The new generator fixes every point < p: it joins the effective set of
      // every level at a point <= p, possibly growing those orbits.
      for (std::size_t lj = 0; lj <= li; ++lj) extend_orbit_with(lj, h);
      return;
    }
  }
}

Permutation PermGroup::sift(const Permutation& p) const {
  if (p.degree() != degree_) throw Error("sift: degree mismatch");
  Permutation h = p;
  for (const auto& lvl : levels_) {
    int v = h[lvl.point];
    if (v == lvl.point) continue;
    if (lvl.slot[v] < 0) return h;
    h = compose(h, lvl.rep_inv[lvl.slot[v]]);
  }
  return h;
}

bool PermGroup::contains(const Permutation& p) const { return sift(p).is_identity(); }

bool PermGroup::level_has_unchecked(std::size_t li) const {
  const auto& wm = watermark_[li];
  if (wm.size() < levels_[li].orbit.size()) return true;
  for (std::size_t w : wm)
    if (w < strong_.size()) return true;
  return false;
}

void PermGroup::build() {
  for (const auto& g : input_gens_)
    if (!g.is_identity()) sift_in(g);

  // Schreier verification, deepest level first.  Each (orbit point, strong
  // generator) pair is checked exactly once: the strong generator list is
  // append-only and per-point watermarks index into it.  Checked pairs stay
  // valid because transversal entries are never rewritten, only appended.
  while (true) {
    std::size_t li = levels_.size();
    for (std::size_t i = levels_.size(); i-- > 0;) {
      if (level_has_unchecked(i)) {
        li = i;
        break;
      }
    }
    if (li == levels_.size()) break;

    const int point_snapshot = levels_[li].point;
    bool restart = false;
    for (std::size_t ui = 0; !restart && ui < levels_[li].orbit.size(); ++ui) {
      if (watermark_[li].size() < levels_[li].orbit.size())
        watermark_[li].resize(levels_[li].orbit.size(), 0);
      for (std::size_t k = watermark_[li][ui]; k < strong_.size(); ++k) {
        watermark_[li][ui] = k + 1;
        if (strong_[k].lmp < point_snapshot) continue;
        Permutation schreier;
        {
          const Level& lvl = levels_[li];
          int u = lvl.orbit[ui];
          int w = strong_[k].perm[u];
          schreier = compose(compose(lvl.rep[ui], strong_[k].perm), lvl.rep_inv[lvl.slot[w]]);
        }
        if (!schreier.is_identity()) {
          sift_in(std::move(schreier));
          // A level insertion shifts indices; restart the outer scan then.
          if (li >= levels_.size() || levels_[li].point != point_snapshot) {
            restart = true;
            break;
          }
        }
      }
    }
  }

  order_ = 1;
  for (const auto& lvl : levels_) order_ *= static_cast<unsigned>(lvl.orbit.size());
}

std::vector<int> PermGroup::base() const {
  std::vector<int> out;
  for (const auto& lvl : levels_)
    if (lvl.orbit.size() > 1) out.push_back(lvl.point);
  return out;
}

bool PermGroup::for_each_element(const std::function<bool(const Permutation&)>& fn) const {
  // Elements factor uniquely as rep_k(u_k) * ... * rep_1(u_1) over levels in
  // ascending order (deepest applied first); DFS over the orbit choices.
  const std::size_t depth_total = levels_.size();
  std::function<bool(std::size_t, const Permutation&)> walk =
      [&](std::size_t d, const Permutation& suffix) -> bool {
    if (d == depth_total) return fn(suffix);
    const Level& lvl = levels_[d];
    for (std::size_t i = 0; i < lvl.orbit.size(); ++i) {
      if (!walk(d + 1, compose(lvl.rep[i], suffix))) return false;
    }
    return true;
  };
  return walk(0, Permutation(degree_));
}

Permutation PermGroup::minimal_coset_rep(const Permutation& x) const {
  if (x.degree() != degree_) throw Error("minimal_coset_rep: degree mismatch");
  // Greedy lexicographic minimization of the image vector.  At each level the
  // remaining stabilizer fixes every smaller point, so earlier images are
  // frozen and the level's own image is minimized over its orbit.
  Permutation r = x;
  for (const auto& lvl : levels_) {
    if (lvl.orbit.size() == 1) continue;
    std::size_t best = 0;
    int best_img = r[lvl.orbit[0]];
    for (std::size_t i = 1; i < lvl.orbit.size(); ++i) {
      int img = r[lvl.orbit[i]];
      if (img < best_img) {
        best_img = img;
        best = i;
      }
    }
    if (best != 0) r = compose(lvl.rep[best], r);
  }
  return r;
}

namespace {

// Can some element of b agree with s on every point <= limit_point?
bool prefix_feasible(const PermGroup& b, const Permutation& s, int limit_point) {
  Permutation r = s;
  for (const auto& lvl : b.levels()) {
    if (lvl.point > limit_point) break;
    int v = r[lvl.point];
    if (v == lvl.point) continue;
    if (lvl.slot[v] < 0) return false;
    r = compose(r, lvl.rep_inv[lvl.slot[v]]);
  }
  for (int q = 0; q <= limit_point; ++q)
    if (r[q] != q) return false;
  return true;
}

}  // namespace

PermGroup subgroup_intersection(const PermGroup& a, const PermGroup& b,
                                const IntersectionLimits& limits) {
  if (a.degree() != b.degree()) throw Error("subgroup_intersection: degree mismatch");
  const int degree = a.degree();
  std::vector<Permutation> found;
  std::uint64_t nodes = 0;

  const auto& levels = a.levels();
  std::function<void(std::size_t, const Permutation&)> walk = [&](std::size_t d,
                                                                  const Permutation& s) {
    if (++nodes > limits.max_nodes) throw Error("subgroup_intersection: node limit exceeded");
    if (d == levels.size()) {
      if (!s.is_identity() && b.contains(s)) found.push_back(s);
      return;
    }
    const auto& lvl = levels[d];
    for (std::size_t i = 0; i < lvl.orbit.size(); ++i) {
      Permutation next = compose(lvl.rep[i], s);
      if (prefix_feasible(b, next, lvl.point)) walk(d + 1, next);
    }
  };
  walk(0, Permutation(degree));

  if (found.empty()) return PermGroup::trivial(degree);
  return PermGroup(std::move(found));
}

Integer generated_order(const std::vector<Permutation>& gens) {
  bool all_identity = true;
  for (const auto& g : gens)
    if (!g.is_identity()) all_identity = false;
  if (gens.empty() || all_identity) return 1;
  return PermGroup(gens).order();
}

}  // namespace polyext
