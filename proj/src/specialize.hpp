#pragma once

#include "ratgf/evaluate.hpp"
#include "ratgf/laurent.hpp"

#include <vector>

namespace ratgf::detail {

// Coefficients g_{-1}, g_0, g_1, ... of 1/(1 - e^x) through x^order.
class InverseExpTable {
 public:
  explicit InverseExpTable(long order);
  long order() const { return order_; }
  // g_i for -1 <= i <= order.
  const Rational& operator[](long i) const { return g_[static_cast<std::size_t>(i + 1)]; }

 private:
  long order_;
  std::vector<Rational> g_;
};

// Contribution sign * [t^0] of sum_{mu >= 0} p(mu) e^{<lambda, a + U mu> t}
// for one unimodular piece; p is a polynomial in the cone coordinates mu.
// The table must reach order 2 deg p + dim.
Rational cone_weighted_constant(const UnimodularTerm& term, const IntVector& lambda,
                                const SparsePolynomial& p, const InverseExpTable& g);

// Contributions of one piece to S_0, ..., S_K for the affine objective
// c0 + l . x, where S_k = sum f(x)^k. The table must reach order K + 3 * dim.
std::vector<Rational> cone_affine_power_sums(const UnimodularTerm& term, const IntVector& lambda,
                                             const Rational& c0, const RatVector& l, unsigned K,
                                             const InverseExpTable& g);

}  // namespace ratgf::detail

namespace ratgf::detail {

// Adds the piece's contribution to counts[v - vmin], vmin <= v <= vmax, where
// the totals over all pieces are the numbers of lattice points x of P with
// l . x = v. Requires vmin <= l . x for every vertex x of the piece's polytope.
void accumulate_level_counts(const UnimodularTerm& term, const IntVector& lambda, const IntVector& l,
                             const Integer& vmin, const Integer& vmax, std::vector<Rational>& counts);

}  // namespace ratgf::detail
