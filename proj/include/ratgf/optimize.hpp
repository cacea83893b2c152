#pragma once

#include "ratgf/evaluate.hpp"
#include "ratgf/polynomial.hpp"
#include "ratgf/polytope.hpp"
#include "ratgf/rational.hpp"

#include <optional>
#include <vector>

namespace ratgf {

struct BoundsRecord {
  unsigned k = 1;
  Integer count;  // N
  Rational sum;   // S_k
  Integer lower;  // ceil((S_k / N)^{1/k})
  Integer upper;  // floor(S_k^{1/k})
};

struct FptasResult {
  Rational epsilon;
  unsigned k = 1;
  BoundsRecord bounds;
  std::optional<IntVector> point;
  std::optional<Rational> value;
};

// Bounds from N >= 1 and S_k >= 0. Throws PreconditionError for S_k < 0,
// which means f is negative somewhere on P cap Z^d.
BoundsRecord bounds_from_sum(unsigned k, const Integer& n, const Rational& s);

// Throws EmptyPolytope when P has no lattice points.
BoundsRecord compute_bounds(const Polytope& p, const SparsePolynomial& f, unsigned k,
                            const EvalOptions& opts = {});
// Records for k = 1..kmax, sharing one cone expansion.
std::vector<BoundsRecord> bounds_sequence(const Polytope& p, const SparsePolynomial& f, unsigned kmax,
                                          const EvalOptions& opts = {});

// max(1, ceil((1 + 1/eps) ln N)), with ln N bracketed by exact rational
// bounds until the ceiling is determined.
unsigned choose_k(const Rational& eps, const Integer& n);

// Bounds at k = choose_k(eps, N), or at k_override when given.
FptasResult maximize(const Polytope& p, const SparsePolynomial& f, const Rational& eps, bool find_point,
                     const EvalOptions& opts = {}, std::optional<unsigned> k_override = std::nullopt);

// A lattice point x of P with f(x) >= (1 - eps) f*, found by bisecting the
// widest box coordinate and keeping the half with the larger lower bound.
IntVector bisect_find_point(const Polytope& p, const SparsePolynomial& f, const Rational& eps,
                            const EvalOptions& opts = {});

}  // namespace ratgf
