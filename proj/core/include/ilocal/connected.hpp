#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ilocal/complex.hpp"
#include "ilocal/grading.hpp"
#include "ilocal/tower.hpp"

namespace ilocal {

enum class Sign { Plus, Minus };

struct SignedIndex {
  Sign sign = Sign::Plus;
  int index = 1;
  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

/// A signed multiset of indices, read as sum of +-X_i, kept sorted by
/// descending index with + before - on ties.
class LinearCombination {
 public:
  LinearCombination() = default;
  /// Sorts the terms; throws Error on a non-positive index.
  explicit LinearCombination(std::vector<SignedIndex> terms);

  const std::vector<SignedIndex>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  /// Set by simplify(); connected_homology refuses combinations without it.
  bool simplified() const { return simplified_; }
  /// True when some index occurs with both signs.
  bool has_cancelling_pair() const;

  LinearCombination negated() const;
  /// Concatenation (sorted, not simplified).
  friend LinearCombination operator+(const LinearCombination& a, const LinearCombination& b);

  /// Equality of terms; the simplified flag is bookkeeping only.
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

 private:
  friend LinearCombination simplify(const LinearCombination& lc);
  std::vector<SignedIndex> terms_;
  bool simplified_ = false;
};

/// Removes +X_i, -X_i pairs until none remain.
LinearCombination simplify(const LinearCombination& lc);

/// The combination together with its d-invariant.
struct LocalClass {
  LinearCombination combo;
  Grading d;
};

/// Tower placement for an arbitrary sorted term list (cancelling pairs
/// allowed). The first tower points down with head 0 for +, up with head 1
/// for -; each later head sits at the previous tail (signs differ), one
/// below it (both +), or one above it (both -).
FUModule place_towers(const std::vector<SignedIndex>& terms);

/// place_towers on a maximally simplified combination. Throws NotSimplified
/// unless the simplified flag is set.
FUModule connected_homology(const LinearCombination& lc);

/// connected_homology(combo) with gradings raised by d - 1.
FUModule hf_conn(const LocalClass& cls);

/// Representative split complex with 2n + 1 cells: starting from the
/// trivial complex, each +X_i doubles with parameter i and each -X_i halves.
/// Terms must be sorted by descending index; cancelling pairs are allowed.
SplitComplex representative(const LinearCombination& lc);

/// Recovers the combination from an unoriented torsion module in the
/// hf_conn frame and the d-invariant. Throws NotInXForm when the module is
/// not of the tower-placement shape.
LinearCombination decode(const FUModule& m, const Grading& d);

struct ConnectedClass {
  FUModule module;
  Grading d;
};

/// Decodes both classes, adds and simplifies, re-encodes with d1 + d2.
ConnectedClass connect_sum(const ConnectedClass& a, const ConnectedClass& b);

/// signed_rank(connected_homology(combo)) - d / 2.
Grading predict_mu_bar(const LocalClass& cls);
/// (rank of connected homology + d / 2) mod 2. Throws Error unless d / 2 is
/// an integer.
int predict_rokhlin_parity(const LocalClass& cls);

}  // namespace ilocal
