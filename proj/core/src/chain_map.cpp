#include "ilocal/chain_map.hpp"

#include "ilocal/errors.hpp"

namespace ilocal {

FUChain ChainMap::apply(const FUChain& x) const {
  FUChain out;
  for (const auto& t : x.terms()) out += image.at(static_cast<std::size_t>(t.cell)).times_u(t.power);
  return out;
}

ChainMap identity_map(const SplitComplex& x) {
  ChainMap f{x, x, {}};
  for (int i = 0; i < static_cast<int>(x.size()); ++i) f.image.push_back(FUChain({{i, 0}}));
  return f;
}

ChainMap zero_map(const SplitComplex& source, const SplitComplex& target) {
  return ChainMap{source, target, std::vector<FUChain>(source.size())};
}

ChainMap lift_cellular(const SplitComplex& source, const SplitComplex& target,
                       const std::vector<Chain>& cells) {
  if (cells.size() != source.size()) throw Error("cellular map must assign every source cell");
  ChainMap f{source, target, {}};
  f.image.reserve(cells.size());
  for (int x = 0; x < static_cast<int>(cells.size()); ++x) {
    const Cell& cx = source.base().cell(x);
    FUChain img;
    for (int y : cells[static_cast<std::size_t>(x)]) {
      const Grading gap = target.base().cell(y).gr - cx.gr;
      if (gap < Grading(0) || !gap.is_even_integer())
        throw Error("lift: '" + target.base().cell(y).id + "' cannot appear in the image of '" + cx.id +
                    "' (gr gap " + gap.to_string() + ")");
      img.toggle({y, (gap / 2).to_integer()});
    }
    f.image.push_back(std::move(img));
  }
  return f;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  ChainMap out{f.source, g.target, {}};
  out.image.reserve(f.image.size());
  for (const auto& img : f.image) out.image.push_back(g.apply(img));
  return out;
}

MapCheck check_grading(const ChainMap& f) {
  const auto& src = f.source.base();
  const auto& tgt = f.target.base();
  for (int x = 0; x < static_cast<int>(src.size()); ++x) {
    for (const auto& t : f.image[static_cast<std::size_t>(x)].terms()) {
      if (t.power < 0 || term_grading(tgt, t) != src.cell(x).maslov())
        return {false, "grading: f(" + src.cell(x).id + ") contains " + describe(tgt, FUChain({t})) + " in grading " +
                           term_grading(tgt, t).to_string() + ", expected " + src.cell(x).maslov().to_string()};
    }
  }
  return {};
}

MapCheck check_chain_map(const ChainMap& f) {
  const auto& src = f.source.base();
  const auto& tgt = f.target.base();
  for (int x = 0; x < static_cast<int>(src.size()); ++x) {
    const FUChain lhs = boundary(tgt, f.image[static_cast<std::size_t>(x)]);
    const FUChain rhs = f.apply(boundary(src, FUChain({{x, 0}})));
    if (lhs != rhs)
      return {false, "chain map: bdry f(" + src.cell(x).id + ") = " + describe(tgt, lhs) + " but f(bdry " +
                         src.cell(x).id + ") = " + describe(tgt, rhs)};
  }
  return {};
}

MapCheck check_j_equivariant(const ChainMap& f) {
  const auto& src = f.source;
  const auto& tgt = f.target;
  for (int x = 0; x < static_cast<int>(src.size()); ++x) {
    FUChain jfx;
    for (const auto& t : f.image[static_cast<std::size_t>(x)].terms()) jfx.toggle({tgt.J(t.cell), t.power});
    const FUChain& fjx = f.image[static_cast<std::size_t>(src.J(x))];
    if (jfx != fjx)
      return {false, "J-equivariance: J f(" + src.base().cell(x).id + ") = " + describe(tgt.base(), jfx) +
                         " but f(J " + src.base().cell(x).id + ") = " + describe(tgt.base(), fjx)};
  }
  return {};
}

}  // namespace ilocal
