#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyext {

using Integer = boost::multiprecision::cpp_int;

// Named invariant violations and resource-limit overruns.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int degree);
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree) { return Permutation(degree); }
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int point) const { return images_[point]; }
  int operator[](int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  // -1 when the permutation is the identity.
  int lowest_moved_point() const;
  Permutation inverse() const;
  // Order of the element (lcm of cycle lengths); throws if it overflows.
  std::int64_t order() const;
  std::string cycle_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

private:
  std::vector<int> images_;
};

// compose(p, q): apply p first, then q.  x^(pq) = (x^p)^q.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

struct Orbit {
  int root = -1;
  std::vector<int> points;            // discovery order, points[0] == root
  std::vector<int> slot;              // degree-sized point -> index map, -1 if absent
  std::vector<Permutation> rep;       // root^rep[i] == points[i]

  bool contains(int point) const { return slot[point] >= 0; }
  const Permutation& transversal(int point) const;
};

std::vector<int> orbit_of(const std::vector<Permutation>& gens, int point);
Orbit orbit_with_transversal(const std::vector<Permutation>& gens, int point);

// Permutation group with a deterministic stabilizer chain.  Base points are
// visited in natural order 0,1,2,...: a chain level exists at every point that
// some strong generator has as its lowest moved point, so each level's
// generator set fixes every smaller point.  Immutable after construction.
class PermGroup {
public:
  struct Level {
    int point = -1;
    std::vector<int> orbit;        // discovery order, orbit[0] == point
    std::vector<int> slot;         // degree-sized point -> orbit index, -1 if absent
    std::vector<Permutation> rep;  // point^rep[i] == orbit[i]
    std::vector<Permutation> rep_inv;
  };

  PermGroup() = default;  // trivial group of degree 0
  static PermGroup trivial(int degree);
  explicit PermGroup(std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return input_gens_; }
  const Integer& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  bool contains(const Permutation& p) const;
  // Strip p through the chain; returns the residue (identity iff member).
  Permutation sift(const Permutation& p) const;
  const std::vector<Level>& levels() const { return levels_; }
  std::vector<int> base() const;

  // Enumerate all elements in a fixed deterministic order; stop early when the
  // callback returns false.  Returns false on early stop.
  bool for_each_element(const std::function<bool(const Permutation&)>& fn) const;

  // Lexicographically minimal element (by image vector) of the right coset
  // (this group) * x.  Canonical coset representative.
  Permutation minimal_coset_rep(const Permutation& x) const;

private:
  struct StrongGen {
    Permutation perm;
    int lmp;  // lowest moved point
  };

  void sift_in(Permutation h);
  void close_orbit(std::size_t level_index, std::size_t from_index);
  void extend_orbit_with(std::size_t level_index, const Permutation& gen);
  std::size_t level_at(int point);  // existing or freshly inserted
  bool level_has_unchecked(std::size_t level_index) const;
  void build();

  int degree_ = 0;
  std::vector<Permutation> input_gens_;
  std::vector<Level> levels_;  // ascending by point
  std::vector<StrongGen> strong_;  // append-only; ids are positions
  // Per level, per orbit index: strong generators with id < watermark have had
  // their Schreier product checked.
  std::vector<std::vector<std::size_t>> watermark_;
  Integer order_ = 1;
};

struct IntersectionLimits {
  std::uint64_t max_nodes = 10'000'000;
};

// Backtrack search for A ∩ B over A's stabilizer chain with prefix pruning
// against B's chain.  Throws Error when the node budget is exhausted.
PermGroup subgroup_intersection(const PermGroup& a, const PermGroup& b,
                                const IntersectionLimits& limits = {});

Integer generated_order(const std::vector<Permutation>& gens);

}  // namespace polyext
