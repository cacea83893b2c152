#include "specialize.hpp"

#include "ratgf/errors.hpp"
#include "ratgf/linalg.hpp"

#include <map>

namespace ratgf::detail {

InverseExpTable::InverseExpTable(long order) : order_(order) {
  LaurentSeries s = inverse_one_minus_exp(1, order);
  for (long i = -1; i <= order; ++i) g_.push_back(s.coefficient(i));
}

namespace {

// Falling factorial x (x - 1) ... (x - n + 1).
Integer falling(long x, unsigned n) {
  Integer r = 1;
  for (unsigned i = 0; i < n; ++i) r *= x - static_cast<long>(i);
  return r;
}

// Expansion in t of (d/ds)^gamma 1/(1 - e^s) at s = c t, through t^order:
// coefficient of t^n is g_{n+gamma} (n+gamma)_gamma c^n.
LaurentSeries derivative_series(const Integer& c, unsigned gamma, long order, const InverseExpTable& g) {
  const long low = -static_cast<long>(gamma) - 1;
  std::vector<Rational> coeffs;
  Rational cpow = pow(Rational(c), low);
  const Rational cr(c);
  for (long n = low; n <= order; ++n) {
    const long i = n + gamma;
    Integer ff = falling(i, gamma);
    coeffs.push_back(ff == 0 ? Rational(0) : Rational(g[i] * ff * cpow));
    cpow *= cr;
  }
  return LaurentSeries(low, std::move(coeffs));
}

// Accumulates a*s into acc (both Laurent series); acc starts empty.
void accumulate(LaurentSeries& acc, bool& empty, const LaurentSeries& s) {
  if (empty) {
    acc = s;
    empty = false;
  } else {
    acc = series_add(acc, s);
  }
}

using TermIt = std::map<Exponent, Rational>::const_iterator;

// Contracts the terms in [begin, end), which share exponents below `level`,
// against the per-generator derivative series.
LaurentSeries contract(TermIt begin, TermIt end, std::size_t level,
                       const std::vector<std::vector<LaurentSeries>>& phi) {
  const std::size_t d = phi.size();
  LaurentSeries acc = LaurentSeries::zero(0);
  bool empty = true;
  if (level + 1 == d) {
    for (auto it = begin; it != end; ++it) {
      accumulate(acc, empty, phi[level][it->first[level]].scaled(it->second));
    }
    return acc;
  }
  auto it = begin;
  while (it != end) {
    const unsigned gamma = it->first[level];
    auto next = it;
    while (next != end && next->first[level] == gamma) ++next;
    accumulate(acc, empty, series_mul(phi[level][gamma], contract(it, next, level + 1, phi)));
    it = next;
  }
  return acc;
}

}  // namespace

Rational cone_weighted_constant(const UnimodularTerm& term, const IntVector& lambda,
                                const SparsePolynomial& p, const InverseExpTable& g) {
  if (p.is_zero()) return 0;
  const std::size_t d = term.generators.size();
  const unsigned K = p.degree();
  const long W = static_cast<long>(K + d);
  std::vector<unsigned> max_gamma(d, 0);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t j = 0; j < d; ++j) max_gamma[j] = std::max(max_gamma[j], e[j]);
  }
  std::vector<std::vector<LaurentSeries>> phi(d);
  for (std::size_t j = 0; j < d; ++j) {
    Integer c = linalg::dot(lambda, term.generators[j]);
    if (c == 0) throw NonGenericDirection("direction orthogonal to a cone generator");
    for (unsigned gamma = 0; gamma <= max_gamma[j]; ++gamma) {
      phi[j].push_back(derivative_series(c, gamma, W, g));
    }
  }
  LaurentSeries r = contract(p.terms().begin(), p.terms().end(), 0, phi);
  // [t^0] of e^{<lambda, a> t} r(t).
  const Rational b0(linalg::dot(lambda, term.a));
  LaurentSeries e = series_exp_linear(b0, std::max<long>(0, -r.lowest()));
  Rational out = 0;
  for (long n = 0; n <= -r.lowest(); ++n) out += e.coefficient(n) * r.coefficient(-n);
  return term.sign > 0 ? out : Rational(-out);
}

std::vector<Rational> cone_affine_power_sums(const UnimodularTerm& term, const IntVector& lambda,
                                             const Rational& c0, const RatVector& l, unsigned K,
                                             const InverseExpTable& g) {
  const std::size_t d = term.generators.size();
  std::vector<Rational> cy;        // l . u_j for nondegenerate generators
  std::vector<Integer> ct;         // lambda . u_j for the same generators
  std::vector<Integer> degenerate; // lambda . u_j where l . u_j = 0
  for (const auto& u : term.generators) {
    Rational c = linalg::dot(l, linalg::to_rational(u));
    Integer c2 = linalg::dot(lambda, u);
    if (c2 == 0) throw NonGenericDirection("direction orthogonal to a cone generator");
    if (c == 0) {
      degenerate.push_back(c2);
    } else {
      cy.push_back(c);
      ct.push_back(c2);
    }
  }
  const unsigned m = static_cast<unsigned>(degenerate.size());
  const long Y = static_cast<long>(K + d + m);

  // acc[n] is the y-series multiplying t^n, for n = 0..m.
  const Rational b0(linalg::dot(lambda, term.a));
  std::vector<LaurentSeries> acc;
  {
    Rational p = 1;
    Integer fact = 1;
    for (unsigned n = 0; n <= m; ++n) {
      if (n > 0) {
        p *= b0;
        fact *= n;
      }
      acc.push_back(LaurentSeries::polynomial(0, {Rational(p / fact)}, Y));
    }
  }
  for (std::size_t j = 0; j < cy.size(); ++j) {
    // t-expansion of 1/(1 - e^{c y + c' t}): sum_n (c' t)^n / n! g^{(n)}(c y).
    std::vector<LaurentSeries> factor;
    Rational tp = 1;
    Integer fact = 1;
    for (unsigned n = 0; n <= m; ++n) {
      if (n > 0) {
        tp *= ct[j];
        fact *= n;
      }
      const long low = -static_cast<long>(n) - 1;
      std::vector<Rational> coeffs;
      Rational cpow = pow(cy[j], low);
      for (long e = low; e <= Y; ++e) {
        const long i = e + n;
        Integer ff = falling(i, n);
        coeffs.push_back(ff == 0 ? Rational(0) : Rational(g[i] * ff * cpow * tp / fact));
        cpow *= cy[j];
      }
      factor.emplace_back(low, std::move(coeffs));
    }
    std::vector<LaurentSeries> next;
    for (unsigned n = 0; n <= m; ++n) {
      LaurentSeries s = series_mul(acc[0], factor[n]);
      for (unsigned r = 1; r <= n; ++r) s = series_add(s, series_mul(acc[r], factor[n - r]));
      next.push_back(std::move(s));
    }
    acc = std::move(next);
  }

  // Laurent coefficients t^{-m}..t^0 of the degenerate factors.
  LaurentSeries dpart = LaurentSeries::polynomial(0, {Rational(1)}, m);
  for (const auto& c2 : degenerate) dpart = series_mul(dpart, inverse_one_minus_exp(c2, m));

  LaurentSeries ys = acc[0].scaled(dpart.coefficient(0));
  for (unsigned n = 1; n <= m; ++n) ys = series_add(ys, acc[n].scaled(dpart.coefficient(-static_cast<long>(n))));

  const Rational shift = c0 + linalg::dot(l, linalg::to_rational(term.a));
  LaurentSeries total = series_mul(series_exp_linear(shift, Y), ys);
  std::vector<Rational> out;
  Integer fact = 1;
  for (unsigned k = 0; k <= K; ++k) {
    if (k > 0) fact *= k;
    Rational v = total.coefficient(k) * fact;
    out.push_back(term.sign > 0 ? v : Rational(-v));
  }
  return out;
}

}  // namespace ratgf::detail

namespace ratgf::detail {

namespace {

// Truncated polynomials in t, degree <= m.
using TPoly = std::vector<Rational>;

TPoly exp_poly(const Integer& c, unsigned m) {
  TPoly p(m + 1);
  Rational term = 1;
  for (unsigned r = 0; r <= m; ++r) {
    if (r > 0) term = term * c / r;
    p[r] = term;
  }
  return p;
}

void add_product(TPoly& acc, const TPoly& a, const TPoly& b) {
  const std::size_t m = acc.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < m; ++j) acc[i + j] += a[i] * b[j];
  }
}

}  // namespace

void accumulate_level_counts(const UnimodularTerm& term, const IntVector& lambda, const IntVector& l,
                             const Integer& vmin, const Integer& vmax, std::vector<Rational>& counts) {
  // z = y^l e^{lambda t}: the piece becomes sign y^e e^{L0 t} / prod (1 - y^{c_j} e^{c'_j t}).
  // Factors with c_j < 0 are flipped through 1/(1-w) = -w^{-1}/(1-w^{-1}) so the
  // whole piece expands as a power series in y; c_j = 0 factors stay as poles in t.
  int sign = term.sign;
  Integer e = linalg::dot(l, term.a);
  Integer base = linalg::dot(lambda, term.a);
  std::vector<std::pair<Integer, Integer>> steps;  // (c > 0, c')
  std::vector<Integer> degenerate;
  for (const auto& u : term.generators) {
    Integer c = linalg::dot(l, u);
    Integer c2 = linalg::dot(lambda, u);
    if (c2 == 0) throw NonGenericDirection("direction orthogonal to a cone generator");
    if (c == 0) {
      degenerate.push_back(c2);
    } else if (c < 0) {
      sign = -sign;
      e -= c;
      base -= c2;
      steps.emplace_back(-c, -c2);
    } else {
      steps.emplace_back(c, c2);
    }
  }
  if (e > vmax) return;
  if (e < vmin) throw PreconditionError("level range does not cover a cone's leading exponent");
  const unsigned m = static_cast<unsigned>(degenerate.size());
  const std::size_t len = Integer(vmax - e + 1).get_ui();

  std::vector<TPoly> series(len, TPoly(m + 1));
  series[0] = exp_poly(base, m);
  for (const auto& [c, c2] : steps) {
    if (c >= Integer(static_cast<unsigned long>(len))) continue;
    const std::size_t step = c.get_ui();
    const TPoly shift = exp_poly(c2, m);
    // Division by 1 - y^c e^{c' t}: s[v] += e^{c' t} s[v - c], in increasing v.
    for (std::size_t v = step; v < len; ++v) add_product(series[v], shift, series[v - step]);
  }

  // Laurent coefficients t^0 .. t^{-m} of the pole part.
  LaurentSeries pole = LaurentSeries::polynomial(0, {Rational(1)}, m);
  for (const auto& c2 : degenerate) pole = series_mul(pole, inverse_one_minus_exp(c2, m));
  std::vector<Rational> weights(m + 1);
  for (unsigned r = 0; r <= m; ++r) weights[r] = pole.coefficient(-static_cast<long>(r));

  const std::size_t offset = Integer(e - vmin).get_ui();
  for (std::size_t v = 0; v < len; ++v) {
    Rational c = 0;
    for (unsigned r = 0; r <= m; ++r) {
      if (series[v][r] != 0) c += series[v][r] * weights[r];
    }
    if (c == 0) continue;
    if (sign > 0) {
      counts[offset + v] += c;
    } else {
      counts[offset + v] -= c;
    }
  }
}

}  // namespace ratgf::detail
