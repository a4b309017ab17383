#include "ilocal/fu_chain.hpp"

#include <algorithm>

#include "ilocal/errors.hpp"

namespace ilocal {

FUChain::FUChain(std::vector<Term> terms) {
  for (const auto& t : terms) toggle(t);
}

void FUChain::toggle(Term t) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), t);
  if (it != terms_.end() && *it == t) terms_.erase(it);
  else terms_.insert(it, t);
}

FUChain& FUChain::operator+=(const FUChain& o) {
  for (const auto& t : o.terms_) toggle(t);
  return *this;
}

FUChain FUChain::times_u(std::int64_t k) const {
  FUChain out = *this;
  for (auto& t : out.terms_) t.power += k;
  return out;
}

FUChain boundary(const GeometricComplex& c, const FUChain& x) {
  FUChain out;
  for (const auto& t : x.terms())
    for (int f : c.faces(t.cell)) out.toggle({f, t.power + c.exponent(t.cell, f)});
  return out;
}

FUChain lift(const GeometricComplex& c, const Chain& cells, const Grading& maslov) {
  FUChain out;
  for (int e : cells) {
    const Grading gap = c.cell(e).maslov() - maslov;
    if (gap < Grading(0) || !gap.is_even_integer())
      throw Error("cannot lift '" + c.cell(e).id + "' (M = " + c.cell(e).maslov().to_string() +
                  ") into grading " + maslov.to_string());
    out.toggle({e, (gap / 2).to_integer()});
  }
  return out;
}

Grading term_grading(const GeometricComplex& c, const Term& t) { return c.cell(t.cell).maslov() - 2 * t.power; }

std::string describe(const GeometricComplex& c, const FUChain& x) {
  if (x.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < x.terms().size(); ++k) {
    const Term& t = x.terms()[k];
    if (k) s += " + ";
    if (t.power == 1) s += "U·";
    else if (t.power != 0) s += "U^" + std::to_string(t.power) + "·";
    s += c.cell(t.cell).id;
  }
  return s;
}

}  // namespace ilocal
