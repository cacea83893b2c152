#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ratgf {

// Arbitrary-precision scalars. mpq_class values are kept canonical
// (gcd(num, den) = 1, den > 0) by every helper in this library.
using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

enum class RootMode { Floor, Ceil };

// Largest r with r^k <= q (Floor) or smallest r with r^k >= q (Ceil), for q >= 0.
// Computed by integer bisection with exact comparison r^k * den vs num.
Integer kth_root_bound(const Rational& q, unsigned long k, RootMode mode);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

// Canonical rational with the given numerator and denominator (den != 0).
Rational make_rational(const Integer& num, const Integer& den);

// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts the grammar produced by to_string: optional sign, digits, optional
// "/digits" with a nonzero denominator. Throws ParseError otherwise.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

// Integer powers; exponent may be negative for rationals (base != 0 then).
Rational pow(const Rational& base, long exponent);
Integer pow(const Integer& base, unsigned long exponent);

int sign(const Rational& q);
int sign(const Integer& z);

// Bit length of |n| (0 for n = 0).
std::size_t bit_length(const Integer& n);

}  // namespace ratgf
