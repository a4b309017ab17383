#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ilocal/grading.hpp"

namespace ilocal {

/// An F2-chain on the skeleton: sorted cell indices, each appearing once.
using Chain = std::vector<int>;

/// Normalizes a list of indices into a Chain, cancelling repeated entries
/// in pairs.
Chain make_chain(std::vector<int> cells);
/// F2 sum of two chains.
Chain chain_sum(const Chain& a, const Chain& b);
bool chain_contains(const Chain& c, int cell);

struct Cell {
  std::string id;
  int dim = 0;
  Grading gr;

  /// M = gr + dim.
  Grading maslov() const { return gr + dim; }
};

/// The width of a complex in gr units; empty means infinite.
using Width = std::optional<std::int64_t>;

/// A free F[U]-complex presented by a finite F2 skeleton and a grading
/// function gr. The boundary of a cell e is the F2 sum of its faces; as an
/// F[U]-complex a face f contributes U^((gr(f) - gr(e)) / 2) f.
///
/// The skeleton need not be a literal cell complex: any F2 differential of
/// dimensional degree -1 is accepted. Construction validates bdry^2 = 0,
/// face dimensions, and that every gr-gap is a non-negative even integer.
class GeometricComplex {
 public:
  GeometricComplex() = default;
  GeometricComplex(std::vector<Cell> cells, std::vector<Chain> faces);

  std::size_t size() const { return cells_.size(); }
  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(int i) const { return cells_.at(static_cast<std::size_t>(i)); }
  const Chain& faces(int i) const { return faces_.at(static_cast<std::size_t>(i)); }
  std::optional<int> find(std::string_view id) const;
  int index_of(std::string_view id) const;  // throws if absent

  /// Coset representative of the Maslov gradings in [0, 1).
  const Grading& tau() const { return tau_; }
  int max_dim() const;
  int min_dim() const;

  /// F2 boundary of a chain.
  Chain boundary(const Chain& c) const;
  /// U-exponent of the incidence face -> cell.
  std::int64_t exponent(int cell, int face) const;

  std::string describe(const Chain& c) const;

 private:
  void validate() const;

  std::vector<Cell> cells_;
  std::vector<Chain> faces_;
  std::unordered_map<std::string, int> index_;
  Grading tau_;
};

/// A geometric complex with a cellular involution J that preserves gr and
/// dim, commutes with the boundary and fixes exactly one cell.
class SplitComplex {
 public:
  SplitComplex() = default;
  SplitComplex(GeometricComplex base, std::vector<int> involution);

  const GeometricComplex& base() const { return base_; }
  std::size_t size() const { return base_.size(); }
  int J(int cell) const { return involution_.at(static_cast<std::size_t>(cell)); }
  const std::vector<int>& involution() const { return involution_; }
  Chain apply_J(const Chain& c) const;
  int fixed() const { return fixed_; }

 private:
  GeometricComplex base_;
  std::vector<int> involution_;
  int fixed_ = -1;
};

/// One representative cell from each J-orbit pair; the fixed cell is never
/// chosen.
struct Splitting {
  std::vector<bool> chosen;
  bool contains(int cell) const { return chosen.at(static_cast<std::size_t>(cell)); }
};

/// Picks the lexicographically smallest id of every J-pair.
Splitting canonical_splitting(const SplitComplex& x);
/// Throws Error unless s picks exactly one cell of every pair.
void validate_splitting(const SplitComplex& x, const Splitting& s);

/// chain = a + (1 + J) b + eps * eta with a and b supported on s.chosen.
struct Decomposition {
  Chain a;
  Chain b;
  bool eps = false;
};
Decomposition decompose(const SplitComplex& x, const Chain& chain, const Splitting& s);

/// Basis complex X_i: alpha, J.alpha (dim 0, gr 0) and beta (dim 1,
/// gr -2i) with bdry(beta) = alpha + J.alpha. Throws Error unless i >= 1.
SplitComplex build_xi(int i);
/// Same construction allowing i = 0, used as the tensor factor of a
/// delta = 0 doubling.
SplitComplex basis_complex(int i);
/// The trivial complex: a single J-fixed 0-cell at gr 0.
SplitComplex build_trivial();
/// The misordered disk: 0-cells at gr 0, 1-cells at gr -2x, the fixed
/// 2-cell at gr -2(x + y). Throws Error unless 0 < x < y.
SplitComplex build_misordered(int x, int y);

/// Cellular product; cells are ordered so that (i, j) has index
/// i * rhs.size() + j and id "left⊗right".
GeometricComplex tensor(const GeometricComplex& lhs, const GeometricComplex& rhs);
SplitComplex tensor(const SplitComplex& lhs, const SplitComplex& rhs);

/// Dual complex with dim(e*) = n - dim(e), gr(e*) = -gr(e) - n where n is the
/// maximal dimension, so M(e*) = -M(e). Cell i of the dual is e_i*; the id
/// map toggles a trailing '*'.
GeometricComplex dual(const GeometricComplex& c);
SplitComplex dual(const SplitComplex& c);

Width width(const GeometricComplex& c);
inline Width width(const SplitComplex& c) { return width(c.base()); }
/// True when 2 * delta <= w.
bool admits(const Width& w, std::int64_t delta);
std::string to_string(const Width& w);

/// The boundary map from dimension `source_dim` to `source_dim - 1` as a
/// matrix of monomials: entry (r, c) is the exponent k of U^k, or empty.
struct MonomialMatrix {
  int source_dim = 0;
  std::vector<int> rows;  // target cells
  std::vector<int> cols;  // source cells
  std::vector<std::vector<std::optional<std::int64_t>>> entries;
};
/// One matrix per source dimension that has at least one incidence.
std::vector<MonomialMatrix> to_fu_matrices(const GeometricComplex& c);

std::string dual_id(std::string_view id);

}  // namespace ilocal
