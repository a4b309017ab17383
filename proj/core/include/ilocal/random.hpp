#pragma once

#include <cstdint>
#include <random>

#include "ilocal/complex.hpp"
#include "ilocal/connected.hpp"

namespace ilocal {

/// Seeded generator; draws are reproducible across platforms because no
/// standard distribution is involved.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(int percent) { return uniform(0, 99) < percent; }

 private:
  std::mt19937_64 engine_;
};

struct SplitGenOptions {
  int max_cells = 10;
  int steps = 4;
  /// Probability (percent) that an incidence receives a zero gr gap.
  int zero_gap_percent = 5;
  bool fractional_offsets = true;
};

/// Random split complex whose F2 skeleton is built from the one-point
/// complex by J-equivariant elementary expansions, skeleton doublings and
/// dualization, so its U-localized homology has rank one.
SplitComplex random_split_complex(Rng& rng, const SplitGenOptions& opt = {});

/// Random splitting of x (one cell of each J-pair).
Splitting random_splitting(Rng& rng, const SplitComplex& x);

/// Random valid geometric complex with at most `max_cells` cells: a normal
/// form (isolated cells plus cancelling pairs) conjugated by random
/// grading-filtered changes of basis.
GeometricComplex random_complex(Rng& rng, int max_cells = 12);

/// Random maximally simplified combination with 0..max_terms terms and
/// indices in [1, max_index].
LinearCombination random_combination(Rng& rng, int max_terms, int max_index);

}  // namespace ilocal
