#pragma once

#include "ratgf/rational.hpp"

#include <map>
#include <vector>

namespace ratgf {

using Exponent = std::vector<unsigned>;

// Sparse multivariate polynomial with rational coefficients. Terms are kept
// in a map keyed by exponent vector, so they are always distinct, nonzero and
// in lexicographic exponent order.
class SparsePolynomial {
 public:
  explicit SparsePolynomial(std::size_t dim) : dim_(dim) {}

  static SparsePolynomial constant(std::size_t dim, const Rational& c);
  static SparsePolynomial monomial(const Exponent& e, const Rational& c);
  // The affine form c0 + sum_i l_i x_i.
  static SparsePolynomial affine(const Rational& c0, const RatVector& l);

  std::size_t dim() const { return dim_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree; 0 for constants and for the zero polynomial.
  unsigned degree() const;

  void add_term(const Exponent& e, const Rational& c);

  Rational evaluate(const IntVector& x) const;
  Rational evaluate(const RatVector& x) const;

  SparsePolynomial scaled(const Rational& c) const;
  friend SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) = default;

 private:
  std::size_t dim_;
  std::map<Exponent, Rational> terms_;
};

// f^k with like terms combined. Throws DegreeBudgetExceeded when
// k * deg(f) > degree_cap.
SparsePolynomial poly_power(const SparsePolynomial& f, unsigned k, unsigned degree_cap);

// Throws DegreeBudgetExceeded unless k * degree <= degree_cap.
void check_degree_budget(unsigned degree, unsigned long k, unsigned degree_cap);

// h(offset + M mu) as a polynomial in mu, where M has the given columns
// (mu has columns.size() variables).
SparsePolynomial compose_affine(const SparsePolynomial& h, const IntVector& offset,
                                const std::vector<IntVector>& columns);

}  // namespace ratgf
