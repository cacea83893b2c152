#pragma once

#include "ratgf/rational.hpp"

#include <vector>

namespace ratgf {

// Truncated Laurent series in one formal variable t:
//   sum_{e = lowest}^{order} c_e t^e  +  O(t^{order + 1}).
// The truncation order travels with the value, so products know which of
// their coefficients are still exact.
class LaurentSeries {
 public:
  // The zero series known through t^order.
  static LaurentSeries zero(long order);
  // Coefficients for t^lowest, t^(lowest+1), ...; known through the last one.
  LaurentSeries(long lowest, std::vector<Rational> coeffs);
  // Exact polynomial data padded with zeros so it is carried through t^order.
  static LaurentSeries polynomial(long lowest, std::vector<Rational> coeffs, long order);

  long lowest() const { return lowest_; }
  long order() const { return lowest_ + static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  // Coefficient of t^e; zero below lowest(). Throws PreconditionError if e > order().
  Rational coefficient(long e) const;

  bool is_zero() const;

  // Drops leading zero coefficients; order() is unchanged.
  LaurentSeries trimmed() const;
  // Keeps coefficients up to t^new_order (no-op if already shorter).
  LaurentSeries truncated(long new_order) const;

  LaurentSeries scaled(const Rational& c) const;
  // Multiplies by t^shift.
  LaurentSeries shifted(long shift) const;

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

 private:
  long lowest_ = 0;
  std::vector<Rational> coeffs_;
};

// sum_{j=0}^{order} c^j / j! t^j, the expansion of e^{c t}.
LaurentSeries series_exp_linear(const Rational& c, long order);

// Reciprocal of s, computed through t^order or as far as the precision of s
// allows, whichever is lower. Throws ZeroSeries if s has no nonzero coefficient.
LaurentSeries laurent_invert(const LaurentSeries& s, long order);

// Cauchy product; the result is carried to the lowest order at which both
// factors still determine it exactly.
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b);

// Termwise sum, truncated to the common order.
LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b);

// s^n for n >= 1.
LaurentSeries series_pow(const LaurentSeries& s, unsigned n);

// Expansion of 1/(1 - e^{c t}) for c != 0, carried through t^order.
LaurentSeries inverse_one_minus_exp(const Rational& c, long order);

}  // namespace ratgf
