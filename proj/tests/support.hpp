#pragma once

// Shared helpers for the unit and acceptance tests.

#include "ratgf/genfun.hpp"
#include "ratgf/oracle.hpp"
#include "ratgf/polynomial.hpp"
#include "ratgf/polytope.hpp"
#include "ratgf/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace testing_support {

using namespace ratgf;

// splitmix64; the tests never touch <random> so sequences are identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [lo, hi].
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::uint64_t state_;
};

inline Polytope interval(const Rational& lo, const Rational& hi) { return make_box({lo}, {hi}); }

inline SparsePolynomial poly(std::size_t dim, const std::vector<std::pair<Rational, Exponent>>& terms) {
  SparsePolynomial f(dim);
  for (const auto& [c, e] : terms) f.add_term(e, c);
  return f;
}

inline Polytope triangle() {
  return Polytope(2, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 1}, 2}});
}

// Exact value of a generating function at a rational point z where no
// denominator vanishes.
inline Rational value_at(const GFTerm& t, const RatVector& z) {
  auto mono = [&](const IntVector& e) {
    Rational v = 1;
    for (std::size_t i = 0; i < e.size(); ++i) v *= pow(z[i], e[i].get_si());
    return v;
  };
  Rational num = 0;
  for (const auto& m : t.numerator) num += m.coeff * mono(m.exponent);
  Rational den = 1;
  for (const auto& f : t.denominator) den *= pow(1 - mono(f.b), static_cast<long>(f.multiplicity));
  return t.coefficient * num / den;
}

inline Rational value_at(const GeneratingFunction& g, const RatVector& z) {
  Rational v = 0;
  for (const auto& t : g.terms()) v += value_at(t, z);
  return v;
}

struct Instance {
  Polytope p;
  SparsePolynomial f;  // non-negative on P, integer coefficients, affine
  SparsePolynomial q;  // (m.x - r)^2 + s with integer data, non-negative everywhere
  SparsePolynomial h;  // arbitrary sign, degree <= 4
};

// Random polytope: a box with rows c x_j >= l, c' x_j <= u (c in [1,5],
// l, u in [-20,20]) cut by one to three rows with entries in [-20,20].
// Cuts that would leave no lattice point are redrawn.
inline Polytope random_polytope(Rng& rng, std::size_t d) {
  std::vector<Row> rows;
  for (std::size_t j = 0; j < d; ++j) {
    for (;;) {
      long c1 = rng.range(1, 5), l = rng.range(-20, 20);
      long c2 = rng.range(1, 5), u = rng.range(-20, 20);
      if (Rational(u, c2) - Rational(l, c1) < 1) continue;
      RatVector lo(d), hi(d);
      lo[j] = -c1;
      hi[j] = c2;
      rows.push_back({lo, Rational(-l)});
      rows.push_back({hi, Rational(u)});
      break;
    }
  }
  Polytope p(d, rows);
  const long cuts = rng.range(1, 3);
  for (long c = 0; c < cuts; ++c) {
    for (int attempt = 0; attempt < 50; ++attempt) {
      RatVector a(d);
      bool nonzero = false;
      for (auto& x : a) {
        x = rng.range(-20, 20);
        nonzero = nonzero || x != 0;
      }
      if (!nonzero) continue;
      Polytope q = p.with_row({a, Rational(rng.range(-20, 20))});
      if (!enumerate_points(q).empty()) {
        p = q;
        break;
      }
    }
  }
  return p;
}

inline std::vector<Instance> family(std::size_t n = 200, std::uint64_t seed = 20240917) {
  Rng rng(seed);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t d = 2 + i % 2;
    Polytope p = random_polytope(rng, d);
    // f = c0 + l.x with c0 making f >= 0 on the integer bounding box.
    Box box = bounding_box(p);
    RatVector l(d);
    Integer c0 = 0;
    for (std::size_t j = 0; j < d; ++j) {
      long lj = rng.range(-5, 5);
      l[j] = lj;
      c0 -= std::min(Integer(lj * box.lo[j]), Integer(lj * box.hi[j]));
    }
    c0 += rng.range(0, 3);
    SparsePolynomial f = SparsePolynomial::affine(Rational(c0), l);
    RatVector mvec(d);
    for (auto& x : mvec) x = rng.range(-3, 3);
    SparsePolynomial lin = SparsePolynomial::affine(Rational(-rng.range(-10, 10)), mvec);
    SparsePolynomial q = lin * lin + SparsePolynomial::constant(d, Rational(rng.range(0, 5)));
    SparsePolynomial h(d);
    const long terms = rng.range(1, 5);
    for (long t = 0; t < terms; ++t) {
      Exponent e(d, 0);
      long budget = rng.range(0, 4);
      for (long b = 0; b < budget; ++b) ++e[rng.range(0, static_cast<long>(d) - 1)];
      h.add_term(e, make_rational(rng.range(-9, 9), rng.range(1, 3)));
    }
    out.push_back({std::move(p), std::move(f), std::move(q), std::move(h)});
  }
  return out;
}

}  // namespace testing_support
