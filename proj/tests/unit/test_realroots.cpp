#include <gtest/gtest.h>

#include <random>

#include "multistat/error.hpp"
#include "multistat/fixtures.hpp"
#include "multistat/realroots.hpp"
#include "oracles.hpp"

using namespace multistat;

TEST(RealRoots, FrozenQuintic) {
  UniPoly p({1, -3, 0, 0, 0, 1});
  auto r = isolate_real_roots(p);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].to_decimal(12), "-1.38879198441");
  EXPECT_EQ(r[1].to_decimal(12), "0.334734141943");
  EXPECT_EQ(r[2].to_decimal(12), "1.21464804270");
  EXPECT_EQ(isolate_positive_roots(p).size(), 2u);
}

TEST(RealRoots, RationalAndRepeatedRoots) {
  UniPoly p = UniPoly({-1, 3}) * UniPoly({-1, 3}) * UniPoly({2, 1}) * UniPoly({1, 0, 1});
  auto r = isolate_real_roots(p);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(compare(r[0], AlgebraicNumber::rational(Rational(-2))), 0);
  EXPECT_EQ(compare(AlgebraicNumber::rational(Rational(1, 3)), r[1]), 0);
  EXPECT_EQ(compare(AlgebraicNumber::rational(Rational(1, 2)), r[1]), 1);
  EXPECT_EQ(compare(r[1], AlgebraicNumber::rational(Rational(1, 3))), 0);
  EXPECT_THROW(isolate_real_roots(UniPoly()), Error);
}

TEST(RealRoots, SignAtAndCompare) {
  auto sqrt2 = isolate_positive_roots(UniPoly({-2, 0, 1}))[0];
  auto cbrt3 = isolate_positive_roots(UniPoly({-3, 0, 0, 1}))[0];
  EXPECT_EQ(compare(sqrt2, cbrt3), -1);
  EXPECT_EQ(sign_at(UniPoly({-2, 0, 1}), sqrt2), 0);
  EXPECT_EQ(sign_at(UniPoly({-1, 1}), sqrt2), 1);
  EXPECT_EQ(sign_at(UniPoly({-3, 2}), sqrt2), -1);
  auto fine = refine(sqrt2, Rational(1, 1000000));
  EXPECT_LE(fine.interval().width(), Rational(1, 1000000));
}

TEST(RealRoots, CountsInIntervals) {
  UniPoly p({0, -1, 0, 1});  // roots -1, 0, 1
  EXPECT_EQ(count_roots_in(p, RatInterval(Rational(-1), Rational(1)), Openness::Closed), 3u);
  EXPECT_EQ(count_roots_in(p, RatInterval(Rational(-1), Rational(1)), Openness::Open), 1u);
  EXPECT_EQ(count_roots_in(p, RatInterval(Rational(-1), Rational(1)), Openness::LeftOpen), 2u);
  EXPECT_EQ(count_roots_between(p, Rational(0), std::nullopt), 1u);
}

TEST(RealRoots, SturmAgreesWithDescartesAndConstruction) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    auto k = oracle::random_known_roots(rng);
    if (k.poly.degree() < 1) continue;
    auto iso = isolate_real_roots(k.poly);
    ASSERT_EQ(iso.size(), k.real_roots) << k.poly.to_string();
    ASSERT_EQ(count_roots_between(k.poly, std::nullopt, std::nullopt), k.real_roots);
    ASSERT_EQ(isolate_positive_roots(k.poly).size(), k.positive_roots);
    ASSERT_EQ(count_roots_between(k.poly, Rational(0), std::nullopt), k.positive_roots);
    for (size_t i = 0; i + 1 < iso.size(); ++i) ASSERT_EQ(compare(iso[i], iso[i + 1]), -1);
  }
}

TEST(RealRoots, CoprimeBasisAndMerge) {
  auto basis = coprime_basis({UniPoly({-2, 1}) * UniPoly({-3, 1}), UniPoly({-3, 1}) * UniPoly({-5, 1})});
  unsigned deg = 0;
  for (const auto& b : basis) deg += b.degree();
  EXPECT_EQ(deg, 3u);
  auto m = merge_roots({isolate_real_roots(UniPoly({-2, 0, 1})), isolate_real_roots(UniPoly({-2, 1}))});
  EXPECT_EQ(m.size(), 3u);
}

TEST(RealRoots, BreakPointPolynomial) {
  UniPoly p = break_point_polynomial();
  EXPECT_EQ(p.degree(), 10);
  EXPECT_EQ(count_roots_in(p, RatInterval(Rational(409), Rational(410)), Openness::Open), 1u);
  auto pos = isolate_positive_roots(p);
  ASSERT_EQ(pos.size(), 1u);
  EXPECT_EQ(pos[0].to_decimal(6), "409.253");
}
