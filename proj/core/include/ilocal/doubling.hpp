#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ilocal/chain_map.hpp"
#include "ilocal/complex.hpp"

namespace ilocal {

/// Deliberately wrong variants of the doubling construction, used only to
/// check that the verification machinery notices.
enum class DoublingMutation {
  None,
  /// gr(theta) = gr(eta) - 2 * delta + 2 (for delta >= 1).
  ThetaGrading,
  /// Skips the "+ theta" correction when bdry(b) contains eta.
  DropThetaTerm,
};

/// X^d(delta) together with the labels of its new cells.
struct DoubleResult {
  SplitComplex complex;
  int omega = -1;
  int j_omega = -1;
  int theta = -1;
  int eta = -1;      // fixed cell of the input complex
  Chain zeta;        // bdry(eta) = (1 + J) zeta, in the new complex's indices
  Splitting splitting;  // the input splitting plus omega
  /// Index of each input cell in the doubled complex; -1 for eta.
  std::vector<int> cell_map;
};

/// Replaces the fixed cell eta by a pair omega, J.omega (same boundary as
/// eta) joined by a new fixed cell theta one dimension up, with
/// gr(theta) = gr(eta) - 2 * delta. Throws WidthExceeded if 2 * delta >
/// width(x).
DoubleResult double_complex(const SplitComplex& x, std::int64_t delta, const Splitting& s,
                            DoublingMutation mutation = DoublingMutation::None);
inline DoubleResult double_complex(const SplitComplex& x, std::int64_t delta) {
  return double_complex(x, delta, canonical_splitting(x));
}

/// dual(double(dual(x), delta)): models x (x) dual(X_delta).
SplitComplex half(const SplitComplex& x, std::int64_t delta,
                  DoublingMutation mutation = DoublingMutation::None);

/// f: X^d(delta) -> X (x) X_delta.
ChainMap local_map_f(const SplitComplex& x, std::int64_t delta, const Splitting& s,
                     DoublingMutation mutation = DoublingMutation::None);
/// g: X (x) X_delta -> X^d(delta).
ChainMap local_map_g(const SplitComplex& x, std::int64_t delta, const Splitting& s,
                     DoublingMutation mutation = DoublingMutation::None);

struct LocalPairReport {
  bool chain_map = false;
  bool j_equivariant = false;
  bool gf_identity = false;
  bool u_localized_iso = false;
  std::optional<std::string> witness;

  bool passed() const { return chain_map && j_equivariant && gf_identity && u_localized_iso; }
};

/// Checks that f: A -> B and g: B -> A are grading-preserving, strictly
/// J-equivariant chain maps with g o f = id_A, both inducing isomorphisms
/// after inverting U. The witness describes the first failed check.
LocalPairReport verify_local_pair(const ChainMap& f, const ChainMap& g);

}  // namespace ilocal
