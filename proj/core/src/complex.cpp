#include "ilocal/complex.hpp"

#include <algorithm>
#include <iterator>
#include <limits>

#include "ilocal/errors.hpp"

namespace ilocal {

Chain make_chain(std::vector<int> cells) {
  std::sort(cells.begin(), cells.end());
  Chain out;
  out.reserve(cells.size());
  for (int c : cells) {
    if (!out.empty() && out.back() == c) out.pop_back();
    else out.push_back(c);
  }
  return out;
}

Chain chain_sum(const Chain& a, const Chain& b) {
  Chain out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool chain_contains(const Chain& c, int cell) { return std::binary_search(c.begin(), c.end(), cell); }

// ---------------------------------------------------------------------------

GeometricComplex::GeometricComplex(std::vector<Cell> cells, std::vector<Chain> faces)
    : cells_(std::move(cells)), faces_(std::move(faces)) {
  if (faces_.size() != cells_.size()) throw InvalidComplex("face list count differs from cell count");
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].id.empty()) throw InvalidComplex("cell " + std::to_string(i) + " has an empty id");
    if (!index_.emplace(cells_[i].id, static_cast<int>(i)).second)
      throw InvalidComplex("duplicate cell id '" + cells_[i].id + "'");
  }
  validate();
  if (!cells_.empty()) tau_ = cells_.front().maslov().mod(1);
}

void GeometricComplex::validate() const {
  const int n = static_cast<int>(cells_.size());
  for (int i = 0; i < n; ++i) {
    const Chain& f = faces_[static_cast<std::size_t>(i)];
    if (!std::is_sorted(f.begin(), f.end()) || std::adjacent_find(f.begin(), f.end()) != f.end())
      throw InvalidComplex("faces of '" + cells_[i].id + "' are not a normalized chain");
    for (int j : f) {
      if (j < 0 || j >= n) throw InvalidComplex("face index out of range for '" + cells_[i].id + "'");
      const Cell& c = cells_[static_cast<std::size_t>(i)];
      const Cell& e = cells_[static_cast<std::size_t>(j)];
      const std::string pair = "('" + c.id + "', '" + e.id + "')";
      if (e.dim != c.dim - 1)
        throw InvalidComplex("boundary pair " + pair + " does not lower dimension by one");
      const Grading gap = e.gr - c.gr;
      if (gap < Grading(0))
        throw InvalidComplex("boundary pair " + pair + " violates monotonicity: gr gap " + gap.to_string());
      if (!gap.is_even_integer())
        throw InvalidComplex("boundary pair " + pair + " has gr gap " + gap.to_string() +
                             ", not an even integer");
    }
  }
  for (int i = 1; i < n; ++i) {
    if (!(cells_[static_cast<std::size_t>(i)].gr - cells_[0].gr).is_even_integer())
      throw InvalidComplex("cells ('" + cells_[0].id + "', '" + cells_[static_cast<std::size_t>(i)].id +
                           "') have gr values in different cosets of 2Z");
  }
  for (int i = 0; i < n; ++i) {
    const Chain dd = boundary(faces_[static_cast<std::size_t>(i)]);
    if (!dd.empty())
      throw InvalidComplex("bdry^2 != 0: pair ('" + cells_[static_cast<std::size_t>(i)].id + "', '" +
                           cells_[static_cast<std::size_t>(dd.front())].id + "')");
  }
}

std::optional<int> GeometricComplex::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int GeometricComplex::index_of(std::string_view id) const {
  auto i = find(id);
  if (!i) throw Error("no cell with id '" + std::string(id) + "'");
  return *i;
}

int GeometricComplex::max_dim() const {
  int m = 0;
  bool any = false;
  for (const auto& c : cells_) {
    m = any ? std::max(m, c.dim) : c.dim;
    any = true;
  }
  return m;
}

int GeometricComplex::min_dim() const {
  int m = 0;
  bool any = false;
  for (const auto& c : cells_) {
    m = any ? std::min(m, c.dim) : c.dim;
    any = true;
  }
  return m;
}

Chain GeometricComplex::boundary(const Chain& c) const {
  std::vector<int> all;
  for (int i : c) {
    const Chain& f = faces_.at(static_cast<std::size_t>(i));
    all.insert(all.end(), f.begin(), f.end());
  }
  return make_chain(std::move(all));
}

std::int64_t GeometricComplex::exponent(int cell, int face) const {
  return ((this->cell(face).gr - this->cell(cell).gr) / 2).to_integer();
}

std::string GeometricComplex::describe(const Chain& c) const {
  if (c.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += " + ";
    s += cell(c[k]).id;
  }
  return s;
}

// ---------------------------------------------------------------------------

SplitComplex::SplitComplex(GeometricComplex base, std::vector<int> involution)
    : base_(std::move(base)), involution_(std::move(involution)) {
  const int n = static_cast<int>(base_.size());
  if (static_cast<int>(involution_.size()) != n) throw NotSplit("involution size differs from cell count");
  int fixed_count = 0;
  for (int i = 0; i < n; ++i) {
    const int j = involution_[static_cast<std::size_t>(i)];
    const std::string& id = base_.cell(i).id;
    if (j < 0 || j >= n) throw NotSplit("involution image out of range for '" + id + "'");
    if (involution_[static_cast<std::size_t>(j)] != i)
      throw NotSplit("J^2 != 1 on '" + id + "'");
    if (base_.cell(j).dim != base_.cell(i).dim || base_.cell(j).gr != base_.cell(i).gr)
      throw NotSplit("J pair ('" + id + "', '" + base_.cell(j).id + "') does not preserve dim and gr");
    if (j == i) {
      ++fixed_count;
      fixed_ = i;
    }
  }
  if (fixed_count != 1)
    throw NotSplit("involution has " + std::to_string(fixed_count) + " fixed cells, expected exactly one");
  for (int i = 0; i < n; ++i) {
    if (apply_J(base_.faces(i)) != base_.faces(J(i)))
      throw NotSplit("J does not commute with bdry on pair ('" + base_.cell(i).id + "', '" +
                     base_.cell(J(i)).id + "')");
  }
}

Chain SplitComplex::apply_J(const Chain& c) const {
  std::vector<int> out;
  out.reserve(c.size());
  for (int i : c) out.push_back(J(i));
  return make_chain(std::move(out));
}

Splitting canonical_splitting(const SplitComplex& x) {
  Splitting s{std::vector<bool>(x.size(), false)};
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    const int j = x.J(i);
    if (j == i) continue;
    if (x.base().cell(i).id < x.base().cell(j).id) s.chosen[static_cast<std::size_t>(i)] = true;
  }
  return s;
}

void validate_splitting(const SplitComplex& x, const Splitting& s) {
  if (s.chosen.size() != x.size()) throw Error("splitting size differs from cell count");
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    const int j = x.J(i);
    if (i == j) {
      if (s.contains(i)) throw Error("splitting contains the fixed cell '" + x.base().cell(i).id + "'");
    } else if (s.contains(i) == s.contains(j)) {
      throw Error("splitting must pick exactly one of ('" + x.base().cell(i).id + "', '" +
                  x.base().cell(j).id + "')");
    }
  }
}

Decomposition decompose(const SplitComplex& x, const Chain& chain, const Splitting& s) {
  Decomposition d;
  std::vector<int> a, b;
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (!s.contains(i)) continue;
    const bool has_c = chain_contains(chain, i);
    const bool has_jc = chain_contains(chain, x.J(i));
    // coefficient of Jc is b_c; coefficient of c is a_c + b_c
    if (has_jc) b.push_back(i);
    if (has_c != has_jc) a.push_back(i);
  }
  d.a = make_chain(std::move(a));
  d.b = make_chain(std::move(b));
  d.eps = chain_contains(chain, x.fixed());
  return d;
}

// ---------------------------------------------------------------------------

SplitComplex basis_complex(int i) {
  if (i < 0) throw Error("basis complex index must be non-negative");
  std::vector<Cell> cells{{"alpha", 0, Grading(0)}, {"J.alpha", 0, Grading(0)}, {"beta", 1, Grading(-2 * i)}};
  std::vector<Chain> faces{{}, {}, {0, 1}};
  return SplitComplex(GeometricComplex(std::move(cells), std::move(faces)), {1, 0, 2});
}

SplitComplex build_xi(int i) {
  if (i <= 0) throw Error("X_i requires a positive index, got " + std::to_string(i));
  return basis_complex(i);
}

SplitComplex build_trivial() {
  return SplitComplex(GeometricComplex({{"eta", 0, Grading(0)}}, {{}}), {0});
}

SplitComplex build_misordered(int x, int y) {
  if (!(0 < x && x < y))
    throw Error("misordered complex requires 0 < x < y, got x=" + std::to_string(x) + " y=" + std::to_string(y));
  std::vector<Cell> cells{{"e0", 0, Grading(0)},
                          {"J.e0", 0, Grading(0)},
                          {"e1", 1, Grading(-2 * x)},
                          {"J.e1", 1, Grading(-2 * x)},
                          {"e2", 2, Grading(-2 * (x + y))}};
  std::vector<Chain> faces{{}, {}, {0, 1}, {0, 1}, {2, 3}};
  return SplitComplex(GeometricComplex(std::move(cells), std::move(faces)), {1, 0, 3, 2, 4});
}

GeometricComplex tensor(const GeometricComplex& lhs, const GeometricComplex& rhs) {
  const int m = static_cast<int>(rhs.size());
  std::vector<Cell> cells;
  std::vector<Chain> faces;
  cells.reserve(lhs.size() * rhs.size());
  faces.reserve(lhs.size() * rhs.size());
  for (int i = 0; i < static_cast<int>(lhs.size()); ++i) {
    for (int j = 0; j < m; ++j) {
      const Cell& x = lhs.cell(i);
      const Cell& y = rhs.cell(j);
      cells.push_back({x.id + "⊗" + y.id, x.dim + y.dim, x.gr + y.gr});
      std::vector<int> f;
      for (int fi : lhs.faces(i)) f.push_back(fi * m + j);
      for (int fj : rhs.faces(j)) f.push_back(i * m + fj);
      faces.push_back(make_chain(std::move(f)));
    }
  }
  return GeometricComplex(std::move(cells), std::move(faces));
}

SplitComplex tensor(const SplitComplex& lhs, const SplitComplex& rhs) {
  const int m = static_cast<int>(rhs.size());
  std::vector<int> inv(lhs.size() * rhs.size());
  for (int i = 0; i < static_cast<int>(lhs.size()); ++i)
    for (int j = 0; j < m; ++j) inv[static_cast<std::size_t>(i * m + j)] = lhs.J(i) * m + rhs.J(j);
  return SplitComplex(tensor(lhs.base(), rhs.base()), std::move(inv));
}

std::string dual_id(std::string_view id) {
  if (!id.empty() && id.back() == '*') return std::string(id.substr(0, id.size() - 1));
  return std::string(id) + "*";
}

GeometricComplex dual(const GeometricComplex& c) {
  const int n = c.max_dim();
  std::vector<Cell> cells;
  cells.reserve(c.size());
  for (const auto& e : c.cells()) cells.push_back({dual_id(e.id), n - e.dim, -e.gr - n});
  std::vector<std::vector<int>> cof(c.size());
  for (int b = 0; b < static_cast<int>(c.size()); ++b)
    for (int a : c.faces(b)) cof[static_cast<std::size_t>(a)].push_back(b);
  std::vector<Chain> faces;
  faces.reserve(c.size());
  for (auto& f : cof) faces.push_back(make_chain(std::move(f)));
  return GeometricComplex(std::move(cells), std::move(faces));
}

SplitComplex dual(const SplitComplex& c) { return SplitComplex(dual(c.base()), c.involution()); }

Width width(const GeometricComplex& c) {
  Width w;
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    for (int f : c.faces(i)) {
      const std::int64_t gap = (c.cell(f).gr - c.cell(i).gr).to_integer();
      if (!w || gap < *w) w = gap;
    }
  }
  return w;
}

bool admits(const Width& w, std::int64_t delta) { return delta >= 0 && (!w || 2 * delta <= *w); }

std::string to_string(const Width& w) { return w ? std::to_string(*w) : std::string("inf"); }

std::vector<MonomialMatrix> to_fu_matrices(const GeometricComplex& c) {
  std::vector<MonomialMatrix> out;
  if (c.size() == 0) return out;
  for (int dim = c.min_dim(); dim <= c.max_dim(); ++dim) {
    MonomialMatrix m;
    m.source_dim = dim;
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
      if (c.cell(i).dim == dim) m.cols.push_back(i);
      if (c.cell(i).dim == dim - 1) m.rows.push_back(i);
    }
    bool any = false;
    m.entries.assign(m.rows.size(), std::vector<std::optional<std::int64_t>>(m.cols.size()));
    for (std::size_t ci = 0; ci < m.cols.size(); ++ci) {
      for (int f : c.faces(m.cols[ci])) {
        const Grading gap = c.cell(f).gr - c.cell(m.cols[ci]).gr;
        if (gap < Grading(0) || !gap.is_even_integer())
          throw InvalidComplex("invalid gr gap on pair ('" + c.cell(m.cols[ci]).id + "', '" + c.cell(f).id + "')");
        const auto r = std::find(m.rows.begin(), m.rows.end(), f) - m.rows.begin();
        m.entries[static_cast<std::size_t>(r)][ci] = (gap / 2).to_integer();
        any = true;
      }
    }
    if (any) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace ilocal
