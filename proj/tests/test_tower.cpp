#include <gtest/gtest.h>

#include "ilocal/errors.hpp"
#include "ilocal/grading.hpp"
#include "ilocal/tower.hpp"
#include "support.hpp"

using namespace ilocal;
using namespace testing_support;

TEST(Grading, ParsesAndFormats) {
  EXPECT_EQ(Grading::parse("3/6"), Grading(1, 2));
  EXPECT_EQ(Grading::parse(" -4 "), Grading(-4));
  EXPECT_EQ(Grading(-4).to_fraction(), "-4/1");
  EXPECT_EQ(Grading(1, -2).to_fraction(), "-1/2");
  EXPECT_EQ(Grading(-7, 2).to_string(), "-7/2");
  EXPECT_THROW(Grading::parse("1/0"), Error);
  EXPECT_THROW(Grading::parse("x"), Error);
  EXPECT_THROW(Grading(1, 2).to_integer(), Error);
}

TEST(Grading, ModuloIsNonNegative) {
  EXPECT_EQ(Grading(-3).mod(2), Grading(1));
  EXPECT_EQ(Grading(-1, 4).mod(1), Grading(3, 4));
  EXPECT_EQ(Grading(5, 2).mod(2), Grading(1, 2));
  EXPECT_TRUE(Grading(-6).is_even_integer());
  EXPECT_FALSE(Grading(3).is_even_integer());
}

TEST(Tower, SpanHeadAndTail) {
  const Tower d = Down(0, 5);
  EXPECT_EQ(d.bottom(), Grading(-8));
  EXPECT_EQ(d.head(), Grading(0));
  EXPECT_EQ(d.tail(), Grading(-8));
  const Tower u = Up(-2, 4);
  EXPECT_EQ(u.head(), Grading(-8));
  EXPECT_EQ(u.tail(), Grading(-2));
  EXPECT_TRUE(Free(0).is_free());
  EXPECT_THROW(Tower::torsion(0, 0), Error);
}

TEST(Shift, Examples) {
  EXPECT_EQ(shift(FUModule{T(0, 5)}, -1), FUModule{T(1, 5)});
  EXPECT_EQ(shift(FUModule{T(0, 3)}, 0), FUModule{T(0, 3)});
  const Grading d = 0;
  EXPECT_EQ(shift(FUModule({T(0, 5), T(-2, 4)}), -(d - 1)), FUModule({T(-1, 5), T(-3, 4)}));
}

TEST(Shift, Composes) {
  const FUModule m{T(Grading(1, 2), 2), Free(3), Down(-4, 1)};
  EXPECT_EQ(shift(shift(m, 3), Grading(-5, 2)), shift(m, Grading(1, 2)));
}

TEST(Reflect, Examples) {
  for (int i = 1; i <= 6; ++i) EXPECT_TRUE(Iso(reflect(FUModule{T(0, i)}), FUModule{T(2 * i - 1, i)}));
  EXPECT_TRUE(Iso(reflect(FUModule{T(Grading(1, 2), 1)}), FUModule{T(Grading(1, 2), 1)}));
  EXPECT_TRUE(Iso(reflect(FUModule({T(0, 3), T(-5, 2)})), FUModule({T(5, 3), T(8, 2)})));
  EXPECT_THROW(reflect(FUModule{Free(0)}), Error);
}

TEST(Reflect, FlipsOrientationAndIsInvolutive) {
  const FUModule m{Down(0, 5), Up(-2, 4), Down(-2, 2)};
  const FUModule r = reflect(m);
  EXPECT_EQ(r.towers()[0].orientation, Orientation::Up);
  EXPECT_EQ(r.towers()[1].orientation, Orientation::Down);
  EXPECT_EQ(reflect(r), m);
}

TEST(SignedRank, Examples) {
  EXPECT_EQ(signed_rank(FUModule({Down(0, 5), Up(-2, 4), Down(-2, 2)})), 3);
  EXPECT_EQ(signed_rank(FUModule{}), 0);
  EXPECT_EQ(signed_rank(FUModule({Down(0, 4), Down(-7, 3), Down(-12, 2)})), 9);
  EXPECT_THROW(signed_rank(FUModule{T(0, 1)}), Error);
  EXPECT_EQ(signed_rank(FUModule({Free(0), Up(1, 2)})), -2);
}

TEST(Kunneth, Examples) {
  const FUModule x1{Free(0), T(0, 1)};
  EXPECT_TRUE(Iso(kunneth(x1, x1), FUModule({Free(0), T(0, 1), T(0, 1), T(0, 1), T(-1, 1)})));
  const FUModule m{Free(3), T(-1, 2), T(Grading(1, 2), 4)};
  EXPECT_TRUE(Iso(kunneth(FUModule{Free(0)}, m), m));
  EXPECT_TRUE(Iso(kunneth(FUModule{Free(0), T(0, 2)}, FUModule{Free(0), T(0, 3)}),
                  FUModule({Free(0), T(0, 2), T(0, 3), T(0, 2), T(-5, 2)})));
}

TEST(Kunneth, OutputIsCanonicalAndCommutative) {
  const FUModule a{Free(1), T(0, 2), T(-3, 1)};
  const FUModule b{Free(0), T(2, 3)};
  const FUModule ab = kunneth(a, b);
  EXPECT_EQ(ab, ab.canonical());
  EXPECT_EQ(ab, kunneth(b, a));
  for (const auto& t : ab.towers()) EXPECT_EQ(t.orientation, Orientation::Unoriented);
}

TEST(FUModule, IsomorphismIgnoresOrderAndOrientation) {
  EXPECT_TRUE(isomorphic(FUModule({Down(0, 1), T(-2, 3)}), FUModule({T(-2, 3), Up(0, 1)})));
  EXPECT_FALSE(isomorphic(FUModule({T(0, 1)}), FUModule({T(0, 1), T(0, 1)})));
  EXPECT_TRUE(contains_summands(FUModule({T(0, 1), T(0, 1), T(2, 2)}), FUModule({T(0, 1), T(0, 1)})));
  EXPECT_FALSE(contains_summands(FUModule({T(0, 1)}), FUModule({T(0, 1), T(0, 1)})));
}

TEST(FUModule, RanksAndParts) {
  const FUModule m{Free(0), T(0, 4), T(-7, 3)};
  EXPECT_EQ(m.free_rank(), 1u);
  EXPECT_EQ(m.torsion_rank(), 7);
  EXPECT_EQ(m.torsion().size(), 2u);
  EXPECT_EQ(m.free_top(), Grading(0));
  EXPECT_FALSE(FUModule{}.free_top());
}
