#include "ratgf/errors.hpp"
#include "ratgf/laurent.hpp"
#include "ratgf/rational.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace ratgf;
using testing_support::Rng;

namespace {

LaurentSeries one_minus_exp(long order) {
  auto e = series_exp_linear(1, order);
  std::vector<Rational> c(e.coefficients());
  for (auto& x : c) x = -x;
  c[0] += 1;
  return LaurentSeries(0, c);
}

}  // namespace

TEST(KthRoot, Examples) {
  EXPECT_EQ(kth_root_bound(354, 2, RootMode::Floor), 18);
  EXPECT_EQ(kth_root_bound(Rational(354, 5), 2, RootMode::Ceil), 9);
  EXPECT_EQ(kth_root_bound(0, 7, RootMode::Ceil), 0);
  EXPECT_EQ(kth_root_bound(0, 7, RootMode::Floor), 0);
  EXPECT_EQ(kth_root_bound(Rational(1, 3), 2, RootMode::Ceil), 1);
  EXPECT_EQ(kth_root_bound(Rational(1, 3), 2, RootMode::Floor), 0);
}

TEST(KthRoot, FloorCeilBracket) {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const unsigned long k = rng.range(1, 9);
    Rational q;
    if (i % 5 == 0) {
      q = pow(Integer(rng.range(0, 300)), k);  // perfect power
    } else {
      q = make_rational(rng.range(0, 1000000), rng.range(1, 1000));
    }
    Integer lo = kth_root_bound(q, k, RootMode::Floor);
    Integer hi = kth_root_bound(q, k, RootMode::Ceil);
    ASSERT_LE(Rational(pow(lo, k)), q);
    ASSERT_GT(Rational(pow(Integer(lo + 1), k)), q);
    ASSERT_GE(Rational(pow(hi, k)), q);
    if (hi > 0) ASSERT_LT(Rational(pow(Integer(hi - 1), k)), q);
    ASSERT_LE(lo, hi);
    ASSERT_LE(hi, lo + 1);
    const bool perfect = q.get_den() == 1 && Rational(pow(lo, k)) == q;
    ASSERT_EQ(lo == hi, perfect);
  }
}

TEST(KthRoot, LargeValues) {
  Integer big = pow(Integer(10), 60) + 12345;
  EXPECT_EQ(kth_root_bound(big, 3, RootMode::Floor), pow(Integer(10), 20));
  EXPECT_EQ(kth_root_bound(big, 3, RootMode::Ceil), pow(Integer(10), 20) + 1);
}

TEST(RationalText, RoundTrip) {
  EXPECT_EQ(to_string(make_rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(make_rational(-8, 4)), "-2");
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("+17"), 17);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    Rational q(rng.range(-100000, 100000), rng.range(1, 99999));
    q.canonicalize();
    EXPECT_EQ(parse_rational(to_string(q)), q);
  }
}

TEST(Series, ExpLinear) {
  EXPECT_EQ(series_exp_linear(1, 2), LaurentSeries(0, {1, 1, Rational(1, 2)}));
  EXPECT_EQ(series_exp_linear(0, 3).trimmed().coefficient(0), 1);
  for (long j = 1; j <= 3; ++j) EXPECT_EQ(series_exp_linear(0, 3).coefficient(j), 0);
  EXPECT_EQ(series_exp_linear(5, 1), LaurentSeries(0, {1, 5}));
  Rational c(-7, 3);
  auto s = series_exp_linear(c, 12);
  Rational fact = 1;
  for (long j = 0; j <= 12; ++j) {
    if (j > 0) fact *= j;
    EXPECT_EQ(s.coefficient(j), pow(c, j) / fact);
  }
}

TEST(Series, InvertOneMinusExp) {
  auto inv = laurent_invert(one_minus_exp(6), 3);
  EXPECT_EQ(inv.lowest(), -1);
  EXPECT_EQ(inv.coefficient(-1), -1);
  EXPECT_EQ(inv.coefficient(0), Rational(1, 2));
  EXPECT_EQ(inv.coefficient(1), Rational(-1, 12));
  EXPECT_EQ(inv.coefficient(2), 0);
  EXPECT_EQ(inv.coefficient(3), Rational(1, 720));
  auto prod = series_mul(one_minus_exp(6), inv);
  EXPECT_EQ(prod.coefficient(0), 1);
  for (long e = 1; e <= 3; ++e) EXPECT_EQ(prod.coefficient(e), 0);
  EXPECT_EQ(inverse_one_minus_exp(1, 3), inv);
}

TEST(Series, InvertSimple) {
  auto r = laurent_invert(LaurentSeries(0, {1, 1, 0}), 2);
  EXPECT_EQ(r, LaurentSeries(0, {1, -1, 1}));
  auto half = laurent_invert(LaurentSeries(0, {2}), 0);
  EXPECT_EQ(half.coefficient(0), Rational(1, 2));
  EXPECT_THROW(laurent_invert(LaurentSeries(0, {0, 0, 0}), 2), ZeroSeries);
}

TEST(Series, InvertRandom) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const long low = rng.range(-3, 3);
    const long n = rng.range(1, 8);
    std::vector<Rational> c;
    for (long j = 0; j < n; ++j) c.emplace_back(rng.range(-9, 9), rng.range(1, 5));
    if (c[0] == 0) c[0] = 1;
    for (auto& x : c) x.canonicalize();
    LaurentSeries s(low, c);
    const long order = -low + n - 1;
    auto r = laurent_invert(s, order);
    ASSERT_EQ(r.lowest(), -low);
    auto p = series_mul(s, r);
    ASSERT_GE(p.order(), 0);
    for (long e = p.lowest(); e <= p.order(); ++e) ASSERT_EQ(p.coefficient(e), e == 0 ? 1 : 0) << i << " " << e;
  }
}

TEST(Series, Multiply) {
  auto a = LaurentSeries::polynomial(0, {1, 1}, 2);
  auto b = LaurentSeries::polynomial(0, {1, -1}, 2);
  EXPECT_EQ(series_mul(a, b), LaurentSeries(0, {1, 0, -1}));
  auto inv_t = LaurentSeries::polynomial(-1, {1}, 0);
  auto t = LaurentSeries::polynomial(1, {1}, 1);
  auto one = series_mul(inv_t, t);
  EXPECT_EQ(one.coefficient(0), 1);
  auto c = LaurentSeries(-1, {-1, Rational(1, 2)});
  auto sq = series_mul(c, c);
  EXPECT_EQ(sq.lowest(), -2);
  EXPECT_EQ(sq.coefficient(-2), 1);
  EXPECT_EQ(sq.coefficient(-1), -1);
  // t^0 of the square needs the t^1 coefficient of c, which is unknown here.
  EXPECT_EQ(sq.order(), -1);
  auto c2 = LaurentSeries::polynomial(-1, {-1, Rational(1, 2)}, 1);
  EXPECT_EQ(series_mul(c2, c2).coefficient(0), Rational(1, 4));
}
