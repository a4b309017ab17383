#include <gtest/gtest.h>

#include "ilocal/complex.hpp"
#include "ilocal/errors.hpp"
#include "ilocal/fu_chain.hpp"

using namespace ilocal;

namespace {

GeometricComplex interval(Grading top, Grading bottom) {
  return GeometricComplex({{"a", 0, top}, {"b", 1, bottom}}, {{}, {0}});
}

std::optional<std::int64_t> entry(const MonomialMatrix& m, int row, int col) {
  const auto r = std::find(m.rows.begin(), m.rows.end(), row) - m.rows.begin();
  const auto c = std::find(m.cols.begin(), m.cols.end(), col) - m.cols.begin();
  return m.entries.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c));
}

}  // namespace

TEST(Chain, F2Arithmetic) {
  EXPECT_EQ(make_chain({3, 1, 3, 2, 3}), (Chain{1, 2, 3}));
  EXPECT_EQ(chain_sum({1, 2}, {2, 5}), (Chain{1, 5}));
  EXPECT_TRUE(chain_contains({1, 4}, 4));
}

TEST(GeometricComplex, ValidationMessagesNameThePair) {
  try {
    GeometricComplex({{"a", 0, Grading(-2)}, {"b", 1, Grading(0)}}, {{}, {0}});
    FAIL() << "monotonicity not enforced";
  } catch (const InvalidComplex& e) {
    EXPECT_NE(std::string(e.what()).find("('b', 'a')"), std::string::npos) << e.what();
  }
  EXPECT_THROW(interval(0, -1), InvalidComplex);            // odd gap
  EXPECT_THROW(GeometricComplex({{"a", 0, 0}, {"b", 2, -2}}, {{}, {0}}), InvalidComplex);  // dim jump
  EXPECT_THROW(GeometricComplex({{"a", 0, 0}, {"a", 1, -2}}, {{}, {0}}), InvalidComplex);  // duplicate id
  // bdry^2 != 0
  EXPECT_THROW(GeometricComplex({{"p", 0, 0}, {"e", 1, 0}, {"f", 2, 0}}, {{}, {0}, {1}}), InvalidComplex);
  // gr values in different cosets of 2Z
  EXPECT_THROW(GeometricComplex({{"p", 0, 0}, {"q", 0, 1}}, {{}, {}}), InvalidComplex);
}

TEST(GeometricComplex, TauIsTheMaslovCoset) {
  EXPECT_EQ(interval(0, -2).tau(), Grading(0));
  const GeometricComplex c({{"a", 0, Grading(-1, 4)}}, {{}});
  EXPECT_EQ(c.tau(), Grading(3, 4));
}

TEST(BuildXi, Cells) {
  const SplitComplex x2 = build_xi(2);
  ASSERT_EQ(x2.size(), 3u);
  EXPECT_EQ(x2.base().cell(2).maslov(), Grading(-3));
  EXPECT_EQ(x2.fixed(), 2);
  EXPECT_EQ(x2.J(0), 1);
  for (int i = 1; i <= 6; ++i) EXPECT_EQ(width(build_xi(i)), 2 * i);
  EXPECT_THROW(build_xi(0), Error);
  EXPECT_THROW(build_xi(-3), Error);
}

TEST(BuildXi, FUDifferential) {
  const SplitComplex x1 = build_xi(1);
  const FUChain d = boundary(x1.base(), FUChain({{2, 0}}));
  EXPECT_EQ(d, FUChain({{0, 1}, {1, 1}}));
  const auto mats = to_fu_matrices(build_xi(4).base());
  ASSERT_EQ(mats.size(), 1u);
  EXPECT_EQ(mats[0].cols, std::vector<int>{2});
  EXPECT_EQ(entry(mats[0], 0, 2), 4);
  EXPECT_EQ(entry(mats[0], 1, 2), 4);
}

TEST(BuildTrivial, Basics) {
  const SplitComplex t = build_trivial();
  EXPECT_EQ(t.size(), 1u);
  EXPECT_EQ(t.fixed(), 0);
  EXPECT_FALSE(width(t).has_value());
  EXPECT_EQ(to_string(width(t)), "inf");
  EXPECT_TRUE(to_fu_matrices(t.base()).empty());
}

TEST(BuildMisordered, Basics) {
  const SplitComplex m = build_misordered(1, 2);
  EXPECT_EQ(m.size(), 5u);
  EXPECT_EQ(m.fixed(), 4);
  EXPECT_EQ(width(m), 2);
  const auto mats = to_fu_matrices(m.base());
  ASSERT_EQ(mats.size(), 2u);
  EXPECT_EQ(mats[0].source_dim, 1);
  EXPECT_EQ(entry(mats[0], 0, 2), 1);
  EXPECT_EQ(entry(mats[0], 1, 3), 1);
  EXPECT_EQ(mats[1].source_dim, 2);
  EXPECT_EQ(entry(mats[1], 2, 4), 2);
  EXPECT_EQ(entry(mats[1], 3, 4), 2);
  EXPECT_THROW(build_misordered(2, 2), Error);
  EXPECT_THROW(build_misordered(0, 2), Error);
}

TEST(SplitComplex, RejectsBadInvolutions) {
  const GeometricComplex base = build_xi(1).base();
  EXPECT_THROW(SplitComplex(base, {0, 1, 2}), NotSplit);  // three fixed cells
  EXPECT_THROW(SplitComplex(base, {1, 2, 0}), NotSplit);  // not an involution
  const GeometricComplex two({{"a", 0, 0}, {"b", 0, -2}, {"c", 0, 0}}, {{}, {}, {}});
  EXPECT_THROW(SplitComplex(two, {1, 0, 2}), NotSplit);  // gr not preserved
  // J does not commute with bdry: edge e from a, edge Je from a as well
  const GeometricComplex edges({{"a", 0, 0}, {"Ja", 0, 0}, {"e", 1, -2}, {"Je", 1, -2}, {"p", 0, 0}},
                               {{}, {}, {0}, {0}, {}});
  EXPECT_THROW(SplitComplex(edges, {1, 0, 3, 2, 4}), NotSplit);
}

TEST(Splitting, CanonicalPicksSmallestId) {
  const SplitComplex x = build_xi(1);
  const Splitting s = canonical_splitting(x);
  // "J.alpha" < "alpha" in byte order
  EXPECT_FALSE(s.contains(0));
  EXPECT_TRUE(s.contains(1));
  EXPECT_FALSE(s.contains(2));
  EXPECT_NO_THROW(validate_splitting(x, s));
  EXPECT_THROW(validate_splitting(x, Splitting{{true, true, false}}), Error);
  EXPECT_THROW(validate_splitting(x, Splitting{{true, false, true}}), Error);
}

TEST(Decompose, Rules) {
  const SplitComplex x = build_xi(1);
  const Splitting s{{true, false, false}};  // {alpha}
  auto d = decompose(x, {0, 1}, s);
  EXPECT_TRUE(d.a.empty());
  EXPECT_EQ(d.b, Chain{0});
  EXPECT_FALSE(d.eps);
  d = decompose(x, {2}, s);
  EXPECT_TRUE(d.a.empty() && d.b.empty() && d.eps);
  d = decompose(x, {1}, s);
  EXPECT_EQ(d.a, Chain{0});
  EXPECT_EQ(d.b, Chain{0});
  d = decompose(x, {0}, s);
  EXPECT_EQ(d.a, Chain{0});
  EXPECT_TRUE(d.b.empty());
}

TEST(Tensor, CellsAndGradings) {
  const SplitComplex t = tensor(build_xi(2), build_xi(3));
  ASSERT_EQ(t.size(), 9u);
  EXPECT_EQ(t.base().cell(0).id, "alpha⊗alpha");
  EXPECT_EQ(t.base().cell(8).gr, Grading(-10));
  EXPECT_EQ(t.base().cell(8).dim, 2);
  EXPECT_EQ(t.fixed(), 8);
  EXPECT_EQ(t.J(1), 3);
  EXPECT_EQ(width(t), 4);
  EXPECT_EQ(width(tensor(build_xi(2).base(), build_trivial().base())), 4);
}

TEST(Dual, OfBasisComplex) {
  const SplitComplex d = dual(build_xi(3));
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d.base().cell(0).id, "alpha*");
  EXPECT_EQ(d.base().cell(2).id, "beta*");
  EXPECT_EQ(d.base().cell(2).dim, 0);
  EXPECT_EQ(d.base().cell(0).dim, 1);
  // del*(alpha*) = U^i beta*
  EXPECT_EQ(boundary(d.base(), FUChain({{0, 0}})), FUChain({{2, 3}}));
  EXPECT_EQ(boundary(d.base(), FUChain({{1, 0}})), FUChain({{2, 3}}));
  EXPECT_TRUE(boundary(d.base(), FUChain({{2, 0}})).empty());
  for (int k = 0; k < 3; ++k) EXPECT_EQ(d.base().cell(k).maslov(), -build_xi(3).base().cell(k).maslov());
  EXPECT_EQ(width(d), width(build_xi(3)));
}

TEST(Dual, IsInvolutiveWhenMinimalDimIsZero) {
  const SplitComplex m = build_misordered(1, 3);
  const SplitComplex dd = dual(dual(m));
  for (int i = 0; i < static_cast<int>(m.size()); ++i) {
    EXPECT_EQ(dd.base().cell(i).id, m.base().cell(i).id);
    EXPECT_EQ(dd.base().cell(i).dim, m.base().cell(i).dim);
    EXPECT_EQ(dd.base().cell(i).gr, m.base().cell(i).gr);
    EXPECT_EQ(dd.base().faces(i), m.base().faces(i));
  }
  EXPECT_EQ(dual_id("x*"), "x");
  EXPECT_EQ(dual_id("x"), "x*");
}

TEST(Width, Examples) {
  EXPECT_EQ(width(build_xi(3)), 6);
  EXPECT_EQ(width(build_misordered(1, 2)), 2);
  EXPECT_TRUE(admits(width(build_xi(2)), 2));
  EXPECT_FALSE(admits(width(build_xi(2)), 3));
  EXPECT_TRUE(admits(std::nullopt, 100));
  EXPECT_FALSE(admits(std::nullopt, -1));
}

TEST(FUChain, ToggleAndLift) {
  const GeometricComplex c = build_xi(2).base();
  FUChain x({{0, 1}, {0, 1}, {1, 0}});
  EXPECT_EQ(x, FUChain({{1, 0}}));
  x += FUChain({{1, 0}});
  EXPECT_TRUE(x.empty());
  EXPECT_EQ(lift(c, {0, 1}, -4), FUChain({{0, 2}, {1, 2}}));
  EXPECT_EQ(lift(c, {2}, -5), FUChain({{2, 1}}));
  EXPECT_THROW(lift(c, {0, 2}, -3), Error);  // parities differ
  EXPECT_THROW(lift(c, {2}, 0), Error);
  EXPECT_EQ(term_grading(c, {0, 2}), Grading(-4));
  EXPECT_EQ(describe(c, FUChain({{0, 2}, {2, 0}})), "U^2·alpha + beta");
}
