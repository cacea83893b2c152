#include "ratgf/cones.hpp"
#include "ratgf/errors.hpp"
#include "ratgf/evaluate.hpp"
#include "ratgf/genfun.hpp"
#include "ratgf/polynomial.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace ratgf;
using namespace testing_support;

namespace {

// g([0,4]; z) = 1/(1-z) - z^5/(1-z) from the pipeline.
GeneratingFunction g04() { return generating_function(interval(0, 4)); }

// Coefficients of z^0..z^n of a univariate generating function that is a
// polynomial, recovered by exact evaluation at n+1 points and interpolation.
std::vector<Rational> univariate_coefficients(const GeneratingFunction& g, long n) {
  std::vector<Rational> xs, ys;
  for (long i = 0; i <= n; ++i) {
    xs.push_back(Rational(i + 2, 1));
    ys.push_back(value_at(g, {xs.back()}));
  }
  // Newton divided differences, then expand.
  std::vector<Rational> c = ys;
  for (long j = 1; j <= n; ++j) {
    for (long i = n; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
  }
  std::vector<Rational> poly(n + 1, Rational(0));
  for (long j = n; j >= 0; --j) {
    // poly = poly * (x - xs[j]) + c[j]
    std::vector<Rational> next(n + 1, Rational(0));
    for (long k = 0; k < n; ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * xs[j];
    }
    next[0] += c[j];
    poly = next;
  }
  return poly;
}

}  // namespace

TEST(TermFromCone, Examples) {
  auto orth = term_from_cone({1, SimplicialCone::make({0, 0}, {{1, 0}, {0, 1}})}, {0, 0});
  EXPECT_EQ(orth.coefficient, 1);
  ASSERT_EQ(orth.numerator.size(), 1u);
  EXPECT_EQ(orth.numerator[0].exponent, (IntVector{0, 0}));
  EXPECT_EQ(orth.denominator.size(), 2u);

  auto one = term_from_cone({1, SimplicialCone::make({0}, {{1}})}, {0});
  EXPECT_EQ(one.coefficient, 1);
  EXPECT_EQ(one.numerator[0].exponent, IntVector{0});
  EXPECT_EQ(one.denominator[0].b, IntVector{1});
}

TEST(TermFromCone, NormalizesNegativeGenerator) {
  // z^4/(1 - z^{-1}) = -z^5/(1 - z).
  auto t = term_from_cone({1, SimplicialCone::make({4}, {{-1}})}, {4});
  EXPECT_EQ(t.coefficient, -1);
  EXPECT_EQ(t.numerator[0].exponent, IntVector{5});
  EXPECT_EQ(t.numerator[0].coeff, 1);
  EXPECT_EQ(t.denominator[0].b, IntVector{1});
  // A negative sign flips it back.
  auto u = term_from_cone({-1, SimplicialCone::make({4}, {{-1}})}, {4});
  EXPECT_EQ(u.coefficient, 1);
}

TEST(TermFromCone, IntervalPipelineMatchesTwoTermForm) {
  auto g = g04();
  ASSERT_EQ(g.terms().size(), 2u);
  // Terms in vertex order: 1/(1-z) at 0, then -z^5/(1-z) at 4.
  EXPECT_EQ(g.terms()[0].coefficient, 1);
  EXPECT_EQ(g.terms()[0].numerator[0].exponent, IntVector{0});
  EXPECT_EQ(g.terms()[1].coefficient, -1);
  EXPECT_EQ(g.terms()[1].numerator[0].exponent, IntVector{5});
  EXPECT_EQ(univariate_coefficients(g, 5), (std::vector<Rational>{1, 1, 1, 1, 1, 0}));
}

TEST(Normalize, PreservesValue) {
  Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = 1 + i % 3;
    GFTerm t;
    t.coefficient = make_rational(rng.range(-5, 5), rng.range(1, 3));
    const long nn = rng.range(1, 3);
    for (long k = 0; k < nn; ++k) {
      IntVector e(d);
      for (auto& x : e) x = rng.range(-3, 3);
      t.numerator.push_back({e, Rational(rng.range(-4, 4))});
    }
    const long nd = rng.range(1, 3);
    for (long k = 0; k < nd; ++k) {
      IntVector b(d);
      do {
        for (auto& x : b) x = rng.range(-2, 2);
      } while (std::all_of(b.begin(), b.end(), [](const Integer& x) { return x == 0; }));
      t.denominator.push_back({b, static_cast<unsigned>(rng.range(1, 2))});
    }
    bool all_zero = true;
    for (const auto& m : t.numerator) all_zero = all_zero && m.coeff == 0;
    if (all_zero) continue;
    GFTerm n = normalize_term(t);
    for (const auto& f : n.denominator) {
      std::size_t j = 0;
      while (f.b[j] == 0) ++j;
      ASSERT_GT(f.b[j], 0);
    }
    for (std::size_t a = 0; a + 1 < n.denominator.size(); ++a) ASSERT_NE(n.denominator[a].b, n.denominator[a + 1].b);
    RatVector z(d);
    for (std::size_t j = 0; j < d; ++j) z[j] = Rational(static_cast<long>(3 + j), static_cast<long>(11 + 2 * j));
    ASSERT_EQ(value_at(n, z), value_at(t, z)) << i;
  }
}

TEST(ApplyZdz, IntervalSeries) {
  auto once = apply_zdz(g04(), 0);
  EXPECT_EQ(univariate_coefficients(once, 5), (std::vector<Rational>{0, 1, 2, 3, 4, 0}));
  auto twice = apply_zdz(once, 0);
  EXPECT_EQ(univariate_coefficients(twice, 5), (std::vector<Rational>{0, 1, 4, 9, 16, 0}));
  EXPECT_EQ(evaluate_at_one(twice), 30);
}

TEST(ApplyZdz, GeometricSeries) {
  GeneratingFunction g(1, {GFTerm{1, {{{0}, 1}}, {{{1}, 1}}}});
  auto r = apply_zdz(g, 0);
  ASSERT_EQ(r.terms().size(), 1u);
  const auto& t = r.terms()[0];
  EXPECT_EQ(t.coefficient * t.numerator[0].coeff, 1);
  EXPECT_EQ(t.numerator[0].exponent, IntVector{1});
  EXPECT_EQ(t.denominator[0].b, IntVector{1});
  EXPECT_EQ(t.denominator[0].multiplicity, 2u);
}

TEST(ApplyZdz, CoordinatesCommuteAndGrowthIsBounded) {
  Rng rng(47);
  for (int i = 0; i < 20; ++i) {
    Polytope p = random_polytope(rng, 2);
    auto g = generating_function(p);
    auto ij = apply_zdz(apply_zdz(g, 0), 1);
    auto ji = apply_zdz(apply_zdz(g, 1), 0);
    EXPECT_EQ(evaluate_at_one(ij), evaluate_at_one(ji));
    // Per-term growth: one numerator derivative plus one term per factor.
    std::size_t bound = 0;
    for (const auto& t : g.terms()) bound += 1 + t.denominator.size();
    EXPECT_LE(apply_zdz(g, 0).terms().size(), bound);
    auto xy = poly(2, {{1, {1, 1}}});
    EXPECT_EQ(evaluate_at_one(ij), brute_sum(p, xy));
  }
}

TEST(ApplyOperator, Examples) {
  auto g = g04();
  EXPECT_EQ(evaluate_at_one(apply_operator(g, poly(1, {{1, {0}}}))), evaluate_at_one(g));
  EXPECT_EQ(evaluate_at_one(apply_operator(g, poly(1, {{1, {2}}}))), 30);
  auto g02 = generating_function(interval(0, 2));
  EXPECT_EQ(evaluate_at_one(apply_operator(g02, poly(1, {{1, {1}}, {1, {2}}}))), 8);
}

TEST(ApplyOperator, Linearity) {
  Rng rng(53);
  for (int i = 0; i < 20; ++i) {
    const std::size_t d = 2;
    Polytope p = random_polytope(rng, d);
    auto g = generating_function(p);
    auto random_h = [&] {
      SparsePolynomial h(d);
      for (int t = 0; t < 3; ++t) {
        Exponent e(d, 0);
        long deg = rng.range(0, 3);
        for (long k = 0; k < deg; ++k) ++e[rng.range(0, 1)];
        h.add_term(e, Rational(rng.range(-5, 5)));
      }
      return h;
    };
    auto h1 = random_h(), h2 = random_h();
    Rational sum = evaluate_at_one(apply_operator(g, h1 + h2));
    EXPECT_EQ(sum, evaluate_at_one(apply_operator(g, h1)) + evaluate_at_one(apply_operator(g, h2)));
    EXPECT_EQ(sum, brute_sum(p, h1 + h2));
  }
}

TEST(PolyPower, Examples) {
  auto x = poly(1, {{1, {1}}});
  EXPECT_EQ(poly_power(x, 2, 64), poly(1, {{1, {2}}}));
  auto xy = poly(2, {{1, {1, 0}}, {1, {0, 1}}});
  EXPECT_EQ(poly_power(xy, 2, 64), poly(2, {{1, {2, 0}}, {2, {1, 1}}, {1, {0, 2}}}));
  auto x2 = poly(1, {{1, {2}}});
  EXPECT_EQ(poly_power(x2, 3, 64), poly(1, {{1, {6}}}));
  EXPECT_EQ(poly_power(x2, 3, 64).degree(), 6u);
  EXPECT_THROW(poly_power(x2, 33, 64), DegreeBudgetExceeded);
  EXPECT_NO_THROW(poly_power(x2, 32, 64));
}

TEST(Polynomial, ComposeAffine) {
  // h(x, y) = x^2 y - 3 at (1, 2) + M mu with M = [[1, 1], [0, 2]].
  auto h = poly(2, {{1, {2, 1}}, {-3, {0, 0}}});
  auto c = compose_affine(h, {1, 2}, {{1, 0}, {1, 2}});
  Rng rng(59);
  for (int i = 0; i < 20; ++i) {
    long m0 = rng.range(-5, 5), m1 = rng.range(-5, 5);
    IntVector x{1 + m0 + m1, 2 + 2 * m1};
    EXPECT_EQ(c.evaluate(IntVector{m0, m1}), h.evaluate(x));
  }
}
