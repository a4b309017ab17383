#pragma once

#include <gtest/gtest.h>

#include "ilocal/complex.hpp"
#include "ilocal/connected.hpp"
#include "ilocal/tower.hpp"

namespace testing_support {

using ilocal::FUModule;
using ilocal::Grading;
using ilocal::Orientation;
using ilocal::Tower;

inline Tower T(Grading top, std::int64_t len, Orientation o = Orientation::Unoriented) {
  return Tower::torsion(top, len, o);
}
inline Tower Down(Grading top, std::int64_t len) { return Tower::torsion(top, len, Orientation::Down); }
inline Tower Up(Grading top, std::int64_t len) { return Tower::torsion(top, len, Orientation::Up); }
inline Tower Free(Grading top) { return Tower::free(top); }

inline ::testing::AssertionResult Iso(const FUModule& got, const FUModule& want) {
  if (ilocal::isomorphic(got, want)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "got " << got.canonical() << ", want " << want.canonical();
}

inline ilocal::LinearCombination Combo(std::initializer_list<int> signed_indices) {
  std::vector<ilocal::SignedIndex> t;
  for (int v : signed_indices) t.push_back({v > 0 ? ilocal::Sign::Plus : ilocal::Sign::Minus, v > 0 ? v : -v});
  return ilocal::LinearCombination(std::move(t));
}
inline ilocal::LinearCombination Simple(std::initializer_list<int> signed_indices) {
  return ilocal::simplify(Combo(signed_indices));
}

}  // namespace testing_support
