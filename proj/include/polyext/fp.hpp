#pragma once

#include "polyext/perm.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace polyext {

// All generators are involutions throughout: a word is its own inverse read
// backwards, and inverse letters coincide with the letters themselves.
using Word = std::vector<int>;

// Free reduction (g^2 = id), then cyclic reduction, then lexicographically
// minimal rotation.
Word canonicalize(const Word& w);

// Structured relator expression, kept so exports can render powers the way
// they are written, e.g. ( r0 r1 ( r2 r1 )^2 )^4.
struct RelExpr {
  int gen = -1;                // leaf when >= 0
  std::vector<RelExpr> parts;  // sequence when gen < 0
  int power = 1;

  Word flatten() const;
  std::string render(const std::vector<std::string>& labels) const;

  static RelExpr atom(int g);
  static RelExpr seq(std::vector<RelExpr> items);
  static RelExpr word(const Word& w);
  static RelExpr pow(RelExpr base, int k);
};

struct Presentation {
  std::vector<std::string> labels;
  std::vector<RelExpr> relators;  // involution relators first, then the rest

  int ngens() const { return static_cast<int>(labels.size()); }

  // Presentation over involutory generators: ( g )^2 for every generator.
  static Presentation over_involutions(std::vector<std::string> labels);

  // Append a relator unless its canonical word is empty or already present.
  void add(RelExpr r);

  // Flat relator words in fixed order (involutions included).
  std::vector<Word> relator_words() const;
  // Canonical non-involution relator words, sorted and deduplicated.
  std::vector<Word> canonical_relators() const;

  std::string to_text() const;
  static Presentation from_text(const std::string& text);
};

struct CosetTable {
  enum class Status { complete, aborted };

  Status status = Status::aborted;
  std::size_t limit = 0;
  std::size_t cosets_allocated = 0;  // table rows at the end; compaction
                                     // reclaims rows merged away earlier
  int ngens = 0;
  std::size_t index = 0;  // live cosets when complete

  // action[g][c]: image of live coset c under generator g (complete only;
  // generators are involutions so the inverse action coincides).
  std::vector<std::vector<int>> action;

  std::vector<Permutation> coset_permutations() const;
};

// HLT-style coset enumeration over the subgroup generated by the given words.
// Deterministic: fixed relator order, first-undefined-entry filling, smallest
// coset index survives coincidences.  Hitting the limit yields status
// aborted — a value, not an error.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_gens,
                        std::size_t limit);

Permutation evaluate(const Word& w, const std::vector<Permutation>& images, int degree);

struct EpimorphismReport {
  bool relators_hold = false;
  bool generates_target = false;
  std::string first_failed_relator;  // render of the first violated relator, if any
  bool ok() const { return relators_hold && generates_target; }
};

EpimorphismReport verify_epimorphism(const Presentation& p,
                                     const std::vector<Permutation>& images,
                                     const PermGroup& target);

}  // namespace polyext
