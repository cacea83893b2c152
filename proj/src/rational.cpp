#include "ratgf/rational.hpp"

#include "ratgf/errors.hpp"

#include <cctype>

namespace ratgf {

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent >= 0) {
    auto e = static_cast<unsigned long>(exponent);
    return make_rational(pow(Integer(base.get_num()), e), pow(Integer(base.get_den()), e));
  }
  if (base == 0) throw PreconditionError("negative power of zero");
  auto e = static_cast<unsigned long>(-exponent);
  return make_rational(pow(Integer(base.get_den()), e), pow(Integer(base.get_num()), e));
}

int sign(const Rational& q) { return sgn(q); }
int sign(const Integer& z) { return sgn(z); }

std::size_t bit_length(const Integer& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

Integer kth_root_bound(const Rational& q, unsigned long k, RootMode mode) {
  if (k == 0) throw PreconditionError("kth_root_bound: k must be positive");
  if (q < 0) throw PreconditionError("kth_root_bound: negative argument " + to_string(q));
  if (q == 0) return 0;

  const Integer num = q.get_num();
  const Integer den = q.get_den();
  // r^k <= q  <=>  r^k * den <= num
  auto at_most = [&](const Integer& r) { return pow(r, k) * den <= num; };

  // Invariant: at_most(lo) holds, at_most(hi) fails. The upper end starts at
  // 1 + ceil(q) but is first narrowed by bit length, which keeps bisection
  // short for the huge power sums the optimizer produces.
  Integer lo = 0;
  Integer hi = ceil_of(q) + 1;
  const std::size_t bits = bit_length(ceil_of(q));
  Integer narrowed = Integer(1) << static_cast<mp_bitcnt_t>(bits / k + 1);
  if (narrowed < hi) hi = narrowed;
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (at_most(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (mode == RootMode::Floor) return lo;
  return pow(lo, k) * den == num ? lo : lo + 1;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_signed_digits(std::string_view s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer digits_to_integer(std::string_view s) {
  std::string buf(s);
  if (!buf.empty() && buf[0] == '+') buf.erase(0, 1);
  return Integer(buf, 10);
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_signed_digits(text, true)) throw ParseError("not an integer: '" + std::string(text) + "'");
  return digits_to_integer(text);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_signed_digits(num, true) || !is_signed_digits(den, false)) {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  Integer d = digits_to_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rational(digits_to_integer(num), d);
}

}  // namespace ratgf
