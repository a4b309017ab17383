#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ilocal/complex.hpp"
#include "ilocal/fu_chain.hpp"

namespace ilocal {

/// An F[U]-linear map given on generators: image[x] is the F[U]-chain in
/// `target` assigned to source cell x.
struct ChainMap {
  SplitComplex source;
  SplitComplex target;
  std::vector<FUChain> image;

  FUChain apply(const FUChain& x) const;
};

ChainMap identity_map(const SplitComplex& x);
ChainMap zero_map(const SplitComplex& source, const SplitComplex& target);

/// Lifts a cellular map of skeleta by the rule
///   f(x) = sum over y in cells[x] of U^((gr(y) - gr(x)) / 2) y.
/// Throws Error when some y has gr(y) < gr(x) or an odd gap.
ChainMap lift_cellular(const SplitComplex& source, const SplitComplex& target,
                       const std::vector<Chain>& cells);

/// g o f.
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Result of one structural check; `witness` names the first failing
/// generator.
struct MapCheck {
  bool ok = true;
  std::string witness;
  explicit operator bool() const { return ok; }
};

/// Every term U^k y of f(x) has M(y) - 2k = M(x).
MapCheck check_grading(const ChainMap& f);
/// bdry o f = f o bdry on every generator.
MapCheck check_chain_map(const ChainMap& f);
/// f(Jx) = J f(x) on every generator.
MapCheck check_j_equivariant(const ChainMap& f);

}  // namespace ilocal
