#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ilocal/complex.hpp"

namespace ilocal {

/// U^power * cell.
struct Term {
  int cell = 0;
  std::int64_t power = 0;
  friend auto operator<=>(const Term&, const Term&) = default;
};

/// An element of the free F[U]-module on the cells of a complex, with F2
/// coefficients: a set of terms, adding a term twice cancels it.
class FUChain {
 public:
  FUChain() = default;
  explicit FUChain(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  void toggle(Term t);
  FUChain& operator+=(const FUChain& o);
  friend FUChain operator+(FUChain a, const FUChain& b) { return a += b; }
  /// Multiplies every term by U^k.
  FUChain times_u(std::int64_t k) const;

  friend bool operator==(const FUChain&, const FUChain&) = default;

 private:
  std::vector<Term> terms_;  // sorted, unique
};

/// F[U]-differential: each face f of a cell e contributes
/// U^((gr(f) - gr(e)) / 2) f.
FUChain boundary(const GeometricComplex& c, const FUChain& x);

/// Homogeneous lift of an F2 chain into Maslov grading `maslov`; throws
/// Error if a cell would need a negative or fractional U-power.
FUChain lift(const GeometricComplex& c, const Chain& cells, const Grading& maslov);

/// Maslov grading of U^k y.
Grading term_grading(const GeometricComplex& c, const Term& t);

std::string describe(const GeometricComplex& c, const FUChain& x);

}  // namespace ilocal
