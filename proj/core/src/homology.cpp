#include "ilocal/homology.hpp"

#include <algorithm>
#include <numeric>

#include "ilocal/errors.hpp"

namespace ilocal {

namespace {

constexpr long kBounding = -1;  // basis element is a bounding chain
constexpr long kZeroClass = -2;  // cycle paired with exponent 0

// Sorted position sets with F2 addition.
using PosSet = std::vector<int>;

PosSet sym_diff(const PosSet& a, const PosSet& b) { return chain_sum(a, b); }

}  // namespace

ReductionResult homology(const GeometricComplex& c) {
  (void)to_fu_matrices(c);  // rejects odd or negative gaps

  const int n = static_cast<int>(c.size());
  ReductionResult r;
  r.complex_ = c;

  // Filtration order: decreasing gr, faces before cofaces at equal gr.
  r.order_.resize(static_cast<std::size_t>(n));
  std::iota(r.order_.begin(), r.order_.end(), 0);
  std::sort(r.order_.begin(), r.order_.end(), [&](int a, int b) {
    const Cell& x = c.cell(a);
    const Cell& y = c.cell(b);
    if (x.gr != y.gr) return x.gr > y.gr;
    if (x.dim != y.dim) return x.dim < y.dim;
    return a < b;
  });
  r.position_.assign(static_cast<std::size_t>(n), 0);
  for (int p = 0; p < n; ++p) r.position_[static_cast<std::size_t>(r.order_[static_cast<std::size_t>(p)])] = p;

  std::vector<PosSet> reduced(static_cast<std::size_t>(n));
  std::vector<PosSet> combo(static_cast<std::size_t>(n));
  std::vector<int> owner(static_cast<std::size_t>(n), -1);  // pivot row -> column
  for (int p = 0; p < n; ++p) {
    std::vector<int> col;
    for (int f : c.faces(r.order_[static_cast<std::size_t>(p)])) col.push_back(r.position_[static_cast<std::size_t>(f)]);
    PosSet& rp = reduced[static_cast<std::size_t>(p)];
    rp = make_chain(std::move(col));
    combo[static_cast<std::size_t>(p)] = {p};
    // Pivot is the lowest-gr face, i.e. the latest position.
    while (!rp.empty() && owner[static_cast<std::size_t>(rp.back())] != -1) {
      const int q = owner[static_cast<std::size_t>(rp.back())];
      rp = sym_diff(rp, reduced[static_cast<std::size_t>(q)]);
      combo[static_cast<std::size_t>(p)] = sym_diff(combo[static_cast<std::size_t>(p)], combo[static_cast<std::size_t>(q)]);
    }
    if (!rp.empty()) owner[static_cast<std::size_t>(rp.back())] = p;
  }

  auto to_cells = [&](const PosSet& s) {
    std::vector<int> cells;
    cells.reserve(s.size());
    for (int p : s) cells.push_back(r.order_[static_cast<std::size_t>(p)]);
    return make_chain(std::move(cells));
  };

  r.basis_.resize(static_cast<std::size_t>(n));
  r.tower_of_.assign(static_cast<std::size_t>(n), kBounding);
  std::vector<Tower> free_towers, torsion_towers;
  std::vector<int> free_pos, torsion_pos;
  for (int p = 0; p < n; ++p) {
    const auto up = static_cast<std::size_t>(p);
    if (!reduced[up].empty()) {
      r.basis_[up] = combo[up];
      continue;
    }
    const int killer = owner[up];
    const Cell& cell = c.cell(r.order_[up]);
    if (killer == -1) {
      r.basis_[up] = combo[up];
      free_pos.push_back(p);
      free_towers.push_back(Tower::free(cell.maslov()));
      r.free_cycles.push_back(lift(c, to_cells(combo[up]), cell.maslov()));
      continue;
    }
    const auto uk = static_cast<std::size_t>(killer);
    r.basis_[up] = reduced[uk];
    const Cell& kc = c.cell(r.order_[uk]);
    const std::int64_t exponent = ((cell.gr - kc.gr) / 2).to_integer();
    if (exponent == 0) {
      r.tower_of_[up] = kZeroClass;
      continue;
    }
    torsion_pos.push_back(p);
    torsion_towers.push_back(Tower::torsion(cell.maslov(), exponent));
    r.torsion_pairs.push_back(TorsionPair{lift(c, to_cells(combo[uk]), kc.maslov()),
                                          lift(c, to_cells(reduced[uk]), cell.maslov()), exponent});
  }
  for (std::size_t k = 0; k < free_pos.size(); ++k) r.tower_of_[static_cast<std::size_t>(free_pos[k])] = static_cast<long>(k);
  for (std::size_t k = 0; k < torsion_pos.size(); ++k)
    r.tower_of_[static_cast<std::size_t>(torsion_pos[k])] = static_cast<long>(free_pos.size() + k);
  free_towers.insert(free_towers.end(), torsion_towers.begin(), torsion_towers.end());
  r.module = FUModule(std::move(free_towers));
  return r;
}

std::vector<Coordinate> ReductionResult::express(const FUChain& x) const {
  if (x.empty()) return {};
  const Grading m = term_grading(complex_, x.terms().front());
  std::vector<int> pos;
  for (const auto& t : x.terms()) {
    if (term_grading(complex_, t) != m) throw Error("express: chain is not homogeneous");
    pos.push_back(position_.at(static_cast<std::size_t>(t.cell)));
  }
  PosSet v = make_chain(std::move(pos));
  std::vector<Coordinate> out;
  while (!v.empty()) {
    const int p = v.back();
    const auto up = static_cast<std::size_t>(p);
    v = sym_diff(v, basis_[up]);
    const long tower = tower_of_[up];
    if (tower == kBounding) throw Error("express: chain is not a cycle");
    if (tower == kZeroClass) continue;
    const Cell& lead = complex_.cell(order_[up]);
    const std::int64_t power = ((lead.maslov() - m) / 2).to_integer();
    const Tower& tw = module.towers()[static_cast<std::size_t>(tower)];
    if (!tw.is_free() && power >= *tw.length) continue;
    out.push_back(Coordinate{static_cast<std::size_t>(tower), power});
  }
  std::sort(out.begin(), out.end(), [](const Coordinate& a, const Coordinate& b) { return a.tower < b.tower; });
  return out;
}

std::vector<std::vector<Coordinate>> induced_map(const ChainMap& f, const ReductionResult& src,
                                                 const ReductionResult& tgt) {
  if (auto g = check_grading(f); !g) throw NotChainMap(g.witness);
  if (auto ch = check_chain_map(f); !ch) throw NotChainMap(ch.witness);
  std::vector<std::vector<Coordinate>> out;
  out.reserve(src.free_cycles.size());
  for (const auto& z : src.free_cycles) out.push_back(tgt.express(f.apply(z)));
  return out;
}

bool is_u_localized_iso(const ChainMap& f) {
  const ReductionResult src = homology(f.source);
  const ReductionResult tgt = homology(f.target);
  if (src.module.free_rank() != 1 || tgt.module.free_rank() != 1)
    throw Error("is_u_localized_iso: free rank must be one on both sides (source " +
                std::to_string(src.module.free_rank()) + ", target " + std::to_string(tgt.module.free_rank()) + ")");
  const auto images = induced_map(f, src, tgt);
  for (const auto& coord : images.front())
    if (coord.tower == 0) return true;  // free tower is listed first
  return false;
}

}  // namespace ilocal
