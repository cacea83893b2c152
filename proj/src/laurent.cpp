#include "ratgf/laurent.hpp"

#include "ratgf/errors.hpp"

#include <algorithm>
#include <utility>

namespace ratgf {

LaurentSeries::LaurentSeries(long lowest, std::vector<Rational> coeffs)
    : lowest_(lowest), coeffs_(std::move(coeffs)) {}

LaurentSeries LaurentSeries::zero(long order) { return LaurentSeries(order + 1, {}); }

LaurentSeries LaurentSeries::polynomial(long lowest, std::vector<Rational> coeffs, long order) {
  long have = lowest + static_cast<long>(coeffs.size()) - 1;
  if (order < have) {
    coeffs.resize(static_cast<std::size_t>(std::max<long>(order - lowest + 1, 0)));
  } else {
    coeffs.resize(static_cast<std::size_t>(order - lowest + 1));
  }
  return LaurentSeries(lowest, std::move(coeffs));
}

Rational LaurentSeries::coefficient(long e) const {
  if (e > order()) {
    throw PreconditionError("coefficient of t^" + std::to_string(e) + " beyond truncation order " +
                            std::to_string(order()));
  }
  if (e < lowest_) return 0;
  return coeffs_[static_cast<std::size_t>(e - lowest_)];
}

bool LaurentSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

LaurentSeries LaurentSeries::trimmed() const {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  return LaurentSeries(lowest_ + static_cast<long>(first),
                       std::vector<Rational>(coeffs_.begin() + static_cast<long>(first), coeffs_.end()));
}

LaurentSeries LaurentSeries::truncated(long new_order) const {
  if (new_order >= order()) return *this;
  if (new_order < lowest_) return zero(new_order);
  return LaurentSeries(lowest_, std::vector<Rational>(coeffs_.begin(),
                                                      coeffs_.begin() + (new_order - lowest_ + 1)));
}

LaurentSeries LaurentSeries::scaled(const Rational& c) const {
  std::vector<Rational> out(coeffs_);
  for (auto& x : out) x *= c;
  return LaurentSeries(lowest_, std::move(out));
}

LaurentSeries LaurentSeries::shifted(long shift) const { return LaurentSeries(lowest_ + shift, coeffs_); }

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries x = a.trimmed();
  LaurentSeries y = b.trimmed();
  return x.order() == y.order() && x.lowest_ == y.lowest_ && x.coeffs_ == y.coeffs_;
}

LaurentSeries series_exp_linear(const Rational& c, long order) {
  if (order < 0) throw PreconditionError("series_exp_linear: negative order");
  std::vector<Rational> out(static_cast<std::size_t>(order + 1));
  out[0] = 1;
  for (long j = 1; j <= order; ++j) {
    out[static_cast<std::size_t>(j)] = out[static_cast<std::size_t>(j - 1)] * c / j;
  }
  return LaurentSeries(0, std::move(out));
}

LaurentSeries laurent_invert(const LaurentSeries& s, long order) {
  LaurentSeries t = s.trimmed();
  if (t.coefficients().empty()) throw ZeroSeries("laurent_invert: series has no nonzero coefficient");
  const auto& c = t.coefficients();
  const long low = -t.lowest();
  const long reliable = low + static_cast<long>(c.size()) - 1;
  const long top = std::min(order, reliable);
  if (top < low) return LaurentSeries::zero(top);

  const std::size_t n = static_cast<std::size_t>(top - low + 1);
  std::vector<Rational> r(n);
  const Rational inv0 = 1 / c[0];
  r[0] = inv0;
  for (std::size_t i = 1; i < n; ++i) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= i && j < c.size(); ++j) acc += c[j] * r[i - j];
    r[i] = -acc * inv0;
  }
  return LaurentSeries(low, std::move(r));
}

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) {
  const long low = a.lowest() + b.lowest();
  const long top = std::min(a.order() + b.lowest(), b.order() + a.lowest());
  if (top < low) return LaurentSeries::zero(top);
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<Rational> out(static_cast<std::size_t>(top - low + 1));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size() && i + j < out.size(); ++j) {
      out[i + j] += x[i] * y[j];
    }
  }
  return LaurentSeries(low, std::move(out));
}

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b) {
  const long low = std::min(a.lowest(), b.lowest());
  const long top = std::min(a.order(), b.order());
  if (top < low) return LaurentSeries::zero(top);
  std::vector<Rational> out(static_cast<std::size_t>(top - low + 1));
  for (long e = low; e <= top; ++e) {
    out[static_cast<std::size_t>(e - low)] = a.coefficient(e) + b.coefficient(e);
  }
  return LaurentSeries(low, std::move(out));
}

LaurentSeries series_pow(const LaurentSeries& s, unsigned n) {
  if (n == 0) throw PreconditionError("series_pow: exponent must be positive");
  LaurentSeries r = s;
  for (unsigned i = 1; i < n; ++i) r = series_mul(r, s);
  return r;
}

LaurentSeries inverse_one_minus_exp(const Rational& c, long order) {
  if (c == 0) throw ZeroSeries("1 - e^{0 t} vanishes identically");
  // 1 - e^{ct} = -ct (1 + ct/2 + ...); one extra coefficient per order step.
  const long needed = order + 2;
  LaurentSeries e = series_exp_linear(c, std::max<long>(needed, 1));
  std::vector<Rational> coeffs(e.coefficients());
  coeffs[0] = 0;
  for (std::size_t i = 1; i < coeffs.size(); ++i) coeffs[i] = -coeffs[i];
  return laurent_invert(LaurentSeries(0, std::move(coeffs)), order);
}

}  // namespace ratgf
