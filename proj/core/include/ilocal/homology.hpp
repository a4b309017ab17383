#pragma once

#include <cstdint>
#include <vector>

#include "ilocal/chain_map.hpp"
#include "ilocal/complex.hpp"
#include "ilocal/fu_chain.hpp"
#include "ilocal/tower.hpp"

namespace ilocal {

/// bdry(killer) = U^exponent * cycle; contributes T_{M(cycle)}(exponent).
struct TorsionPair {
  FUChain killer;
  FUChain cycle;
  std::int64_t exponent = 0;
};

/// U^power times the generator of tower `tower`.
struct Coordinate {
  std::size_t tower = 0;
  std::int64_t power = 0;
  friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

/// Homology of a geometric complex together with cycle representatives.
///
/// `module` lists the free towers first (matching `free_cycles`), then the
/// torsion towers (matching `torsion_pairs`). Representatives are not part
/// of the isomorphism class.
class ReductionResult {
 public:
  FUModule module;
  std::vector<FUChain> free_cycles;
  std::vector<TorsionPair> torsion_pairs;

  /// Class of a homogeneous cycle in the tower basis; classes that vanish
  /// (U-power at or past a tower's length) are omitted. Throws Error if `x`
  /// is not a homogeneous cycle.
  std::vector<Coordinate> express(const FUChain& x) const;

  const GeometricComplex& complex() const { return complex_; }

 private:
  friend ReductionResult homology(const GeometricComplex& c);

  GeometricComplex complex_;
  // Filtration-compatible F2 basis: basis_[p] has leading cell order_[p].
  std::vector<int> order_;
  std::vector<int> position_;
  std::vector<Chain> basis_;
  // Tower index for cycle basis elements, -1 for bounding-chain elements.
  std::vector<long> tower_of_;
};

/// Persistence-style reduction of the monomial boundary matrices.
ReductionResult homology(const GeometricComplex& c);
inline ReductionResult homology(const SplitComplex& c) { return homology(c.base()); }

/// For each free cycle z of `src`, the class of f(z) in the tower basis of
/// `tgt`. Throws NotChainMap when f is not a grading-preserving chain map.
std::vector<std::vector<Coordinate>> induced_map(const ChainMap& f, const ReductionResult& src,
                                                 const ReductionResult& tgt);

/// True iff f carries the free generator onto a nonzero multiple U^k of the
/// free generator. Throws Error unless both sides have free rank one.
bool is_u_localized_iso(const ChainMap& f);

}  // namespace ilocal
