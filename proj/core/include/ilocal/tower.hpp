#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ilocal/grading.hpp"

namespace ilocal {

enum class Orientation { Unoriented, Down, Up };

/// A U-torsion tower T_top(length), or a free tower when `length` is empty.
///
/// A tower of length l occupies the gradings top, top - 2, ..., top - 2(l - 1).
/// For a Down tower the head is the element of maximal grading and the tail
/// the element of minimal grading; an Up tower swaps the two. Free towers are
/// always Unoriented.
struct Tower {
  Grading top;
  std::optional<std::int64_t> length;  // empty = free (infinite) tower
  Orientation orientation = Orientation::Unoriented;

  static Tower torsion(Grading top, std::int64_t length,
                       Orientation o = Orientation::Unoriented);
  static Tower free(Grading top);

  bool is_free() const { return !length.has_value(); }
  /// Lowest occupied grading. Only defined for torsion towers.
  Grading bottom() const;
  Grading head() const;
  Grading tail() const;

  friend bool operator==(const Tower&, const Tower&) = default;
};

/// Finite direct sum of towers. The tower order is kept as constructed; use
/// `isomorphic` (which ignores order and orientation) to compare modules.
class FUModule {
 public:
  FUModule() = default;
  FUModule(std::initializer_list<Tower> towers) : towers_(towers) {}
  explicit FUModule(std::vector<Tower> towers) : towers_(std::move(towers)) {}

  const std::vector<Tower>& towers() const { return towers_; }
  std::size_t size() const { return towers_.size(); }
  bool empty() const { return towers_.empty(); }
  void add(Tower t) { towers_.push_back(std::move(t)); }
  void append(const FUModule& other);

  std::size_t free_rank() const;
  /// Sum of the lengths of all torsion towers.
  std::int64_t torsion_rank() const;
  FUModule torsion() const;
  FUModule free_part() const;
  std::optional<Grading> free_top() const;

  /// Towers sorted by descending top, then descending length (free first).
  FUModule canonical() const;
  FUModule without_orientation() const;

  friend bool operator==(const FUModule&, const FUModule&) = default;

 private:
  std::vector<Tower> towers_;
};

/// Multiset equality of (top, length); orientations are ignored.
bool isomorphic(const FUModule& a, const FUModule& b);

/// True when every tower of `part` occurs in `whole` with at least the same
/// multiplicity (orientations ignored).
bool contains_summands(const FUModule& whole, const FUModule& part);

/// Bracket shift m[sigma]: every top t becomes t - sigma.
FUModule shift(const FUModule& m, const Grading& sigma);

/// Reflection of torsion gradings g -> 1 - g. Orientations flip.
/// Throws Error on a free tower.
FUModule reflect(const FUModule& m);

/// Sum of Down lengths minus sum of Up lengths. Throws Error when a torsion
/// tower is Unoriented.
std::int64_t signed_rank(const FUModule& m);

/// Homology of A (x) B over F[U] from H(A) and H(B): tensor part plus the
/// Tor part shifted up by one, canonically sorted and unoriented.
FUModule kunneth(const FUModule& a, const FUModule& b);

std::string to_string(Orientation o);
std::string to_string(const Tower& t);
std::string to_string(const FUModule& m);
std::ostream& operator<<(std::ostream& os, const Tower& t);
std::ostream& operator<<(std::ostream& os, const FUModule& m);

}  // namespace ilocal
