#pragma once

#include "ratgf/genfun.hpp"
#include "ratgf/polynomial.hpp"
#include "ratgf/polytope.hpp"
#include "ratgf/rational.hpp"

#include <memory>
#include <vector>

namespace ratgf {

struct EvalOptions {
  unsigned threads = 1;
  unsigned degree_cap = 64;
  // First moment-curve parameter tried by generic_direction.
  unsigned long first_t = 1;
};

// lambda with lambda . b != 0 for every denominator b it was chosen for.
struct Direction {
  IntVector lambda;
};

// First lambda = (1, t, ..., t^{d-1}), t >= first_t, that is generic for g.
Direction generic_direction(const GeneratingFunction& g, unsigned long first_t = 1);
Direction generic_direction(const std::vector<IntVector>& vectors, std::size_t dim,
                            unsigned long first_t = 1);

// Constant term in t of the term after z_i = e^{lambda_i t}.
// Throws NonGenericDirection if lambda . b = 0 for some denominator.
Rational term_constant(const GFTerm& t, const Direction& dir);

// Sum of term constants under one shared direction (0 for no terms).
Rational evaluate_at_one(const GeneratingFunction& g, unsigned long first_t = 1);

// One piece sign * z^a / prod_j (1 - z^{u_j}) of g(P; z), unimodular.
struct UnimodularTerm {
  int sign = 1;
  IntVector a;
  std::vector<IntVector> generators;
};

// g(P; z) as a list of unimodular pieces, in canonical vertex order.
struct ConeExpansion {
  std::size_t dim = 0;
  std::vector<UnimodularTerm> terms;
  std::vector<RatVector> vertices;
};

// vertices -> dual cones of active normals -> triangulation -> signed
// unimodular decomposition -> back to primal cones with numerator points.
// Throws Unbounded.
ConeExpansion expand_polytope(const Polytope& p, const EvalOptions& opts = {});
GeneratingFunction to_generating_function(const ConeExpansion& e);
GeneratingFunction generating_function(const Polytope& p, const EvalOptions& opts = {});

// |P cap Z^d| through the generating function.
Integer count(const Polytope& p, const EvalOptions& opts = {});
Integer count(const ConeExpansion& e);

// Sum of h over P cap Z^d. The default route substitutes each unimodular
// cone's parametrization into h and specializes in cone coordinates; the
// symbolic route applies D_h to g(P; z) term by term. Both are exact.
Rational weighted_sum(const Polytope& p, const SparsePolynomial& h, const EvalOptions& opts = {});
Rational weighted_sum(const ConeExpansion& e, const SparsePolynomial& h, const EvalOptions& opts = {});
Rational weighted_sum_symbolic(const Polytope& p, const SparsePolynomial& h,
                               const EvalOptions& opts = {});

// Power sums S_k = sum f(x)^k over P cap Z^d for one polytope and objective,
// sharing the cone expansion across k. For affine objectives the generating
// function is specialized along the objective instead: either to the counts
// of lattice points on each level set (narrow value ranges) or to a single
// exponential series per cone.
class PowerSums {
 public:
  PowerSums(const Polytope& p, SparsePolynomial f, EvalOptions opts = {});
  PowerSums(ConeExpansion e, SparsePolynomial f, EvalOptions opts = {});
  ~PowerSums();
  PowerSums(PowerSums&&) noexcept;
  PowerSums& operator=(PowerSums&&) noexcept;

  const Integer& count() const { return count_; }
  // Throws DegreeBudgetExceeded when k * deg f exceeds the cap.
  Rational sum(unsigned k);

 private:
  struct State;
  void prepare_levels();
  std::unique_ptr<State> state_;
  Integer count_;
};

}  // namespace ratgf
