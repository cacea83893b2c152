#include "ratgf/optimize.hpp"

#include "ratgf/errors.hpp"
#include "parallel.hpp"

namespace ratgf {

BoundsRecord bounds_from_sum(unsigned k, const Integer& n, const Rational& s) {
  if (n <= 0) throw EmptyPolytope("polytope contains no lattice points");
  if (s < 0) throw PreconditionError("power sum is negative; the objective is not non-negative on P");
  BoundsRecord r;
  r.k = k;
  r.count = n;
  r.sum = s;
  r.lower = kth_root_bound(s / Rational(n), k, RootMode::Ceil);
  r.upper = kth_root_bound(s, k, RootMode::Floor);
  return r;
}

BoundsRecord compute_bounds(const Polytope& p, const SparsePolynomial& f, unsigned k, const EvalOptions& opts) {
  if (k == 0) throw PreconditionError("k must be positive");
  check_degree_budget(f.degree(), k, opts.degree_cap);
  PowerSums ps(p, f, opts);
  if (ps.count() == 0) throw EmptyPolytope("polytope contains no lattice points");
  return bounds_from_sum(k, ps.count(), ps.sum(k));
}

std::vector<BoundsRecord> bounds_sequence(const Polytope& p, const SparsePolynomial& f, unsigned kmax,
                                          const EvalOptions& opts) {
  check_degree_budget(f.degree(), kmax, opts.degree_cap);
  PowerSums ps(p, f, opts);
  if (ps.count() == 0) throw EmptyPolytope("polytope contains no lattice points");
  std::vector<BoundsRecord> out;
  for (unsigned k = 1; k <= kmax; ++k) out.push_back(bounds_from_sum(k, ps.count(), ps.sum(k)));
  return out;
}

namespace {

// Partial sums of 2 atanh(x) = 2 sum x^{2j+1}/(2j+1) with n terms, and the
// tail bound 2 x^{2n+1} / ((2n+1)(1 - x^2)).
void atanh_bounds(const Rational& x, unsigned n, Rational& lo, Rational& hi) {
  Rational sum = 0;
  Rational p = x;
  const Rational x2 = x * x;
  for (unsigned j = 0; j < n; ++j) {
    sum += p / (2 * j + 1);
    p *= x2;
  }
  lo = 2 * sum;
  hi = lo + 2 * p / (Rational(2 * n + 1) * (1 - x2));
}

}  // namespace

unsigned choose_k(const Rational& eps, const Integer& n) {
  if (eps <= 0) throw PreconditionError("epsilon must be positive");
  if (n < 1) throw PreconditionError("N must be positive");
  if (n == 1) return 1;
  // ln N = m ln 2 + ln r with r = N / 2^m in [1, 2); ln 2 = 2 atanh(1/3).
  const std::size_t m = bit_length(n) - 1;
  const Rational r = make_rational(n, pow(Integer(2), m));
  const Rational xr = (r - 1) / (r + 1);
  const Rational c = 1 + 1 / eps;
  for (unsigned terms = 4;; terms *= 2) {
    Rational lo2, hi2, lor, hir;
    atanh_bounds(Rational(1, 3), terms, lo2, hi2);
    atanh_bounds(xr, terms, lor, hir);
    Integer klo = ceil_of(c * (lo2 * static_cast<unsigned long>(m) + lor));
    Integer khi = ceil_of(c * (hi2 * static_cast<unsigned long>(m) + hir));
    // ln N is irrational for N >= 2, so the bracket eventually avoids integers.
    if (klo == khi) {
      if (klo < 1) return 1;
      if (!klo.fits_uint_p()) throw PreconditionError("k does not fit in an unsigned integer");
      return static_cast<unsigned>(klo.get_ui());
    }
  }
}

FptasResult maximize(const Polytope& p, const SparsePolynomial& f, const Rational& eps, bool find_point,
                     const EvalOptions& opts, std::optional<unsigned> k_override) {
  if (eps <= 0) throw PreconditionError("epsilon must be positive");
  PowerSums ps(p, f, opts);
  if (ps.count() == 0) throw EmptyPolytope("polytope contains no lattice points");
  FptasResult out;
  out.epsilon = eps;
  out.k = k_override ? *k_override : choose_k(eps, ps.count());
  if (out.k == 0) throw PreconditionError("k must be positive");
  out.bounds = bounds_from_sum(out.k, ps.count(), ps.sum(out.k));
  if (find_point) {
    out.point = bisect_find_point(p, f, eps, opts);
    out.value = f.evaluate(*out.point);
  }
  return out;
}

namespace {

unsigned ceil_log2(const Integer& x) {
  // Smallest e with 2^e >= x, for x >= 1.
  const std::size_t b = bit_length(x);
  return static_cast<unsigned>(pow(Integer(2), b - 1) == x ? b - 1 : b);
}

}  // namespace

IntVector bisect_find_point(const Polytope& p, const SparsePolynomial& f, const Rational& eps,
                            const EvalOptions& opts) {
  if (eps <= 0) throw PreconditionError("epsilon must be positive");
  Box box = bounding_box(p);
  if (box.empty) throw EmptyPolytope("polytope contains no lattice points");
  unsigned levels = 0;
  for (std::size_t i = 0; i < p.dim(); ++i) levels += ceil_log2(box.hi[i] - box.lo[i] + 1);
  const Rational eps_level = levels == 0 ? eps : Rational(eps / levels);

  Polytope cur = p;
  if (count(cur, opts) == 0) throw EmptyPolytope("polytope contains no lattice points");
  for (;;) {
    box = bounding_box(cur);
    if (box.single_point()) return box.lo;
    std::size_t widest = 0;
    for (std::size_t i = 1; i < cur.dim(); ++i) {
      if (box.hi[i] - box.lo[i] > box.hi[widest] - box.lo[widest]) widest = i;
    }
    Integer mid = box.lo[widest] + box.hi[widest];
    mpz_fdiv_q_2exp(mid.get_mpz_t(), mid.get_mpz_t(), 1);
    auto halves = bisect(cur, widest, mid);
    const Polytope* part[2] = {&halves.first, &halves.second};
    Integer n[2];
    Integer lower[2];
    detail::parallel_for(2, opts.threads, [&](std::size_t h) {
      EvalOptions inner = opts;
      inner.threads = 1;
      PowerSums ps(*part[h], f, inner);
      n[h] = ps.count();
      if (n[h] == 0) return;
      const unsigned k = choose_k(eps_level, n[h]);
      lower[h] = bounds_from_sum(k, n[h], ps.sum(k)).lower;
    });
    if (n[0] == 0) {
      cur = halves.second;
    } else if (n[1] == 0) {
      cur = halves.first;
    } else {
      cur = lower[0] >= lower[1] ? halves.first : halves.second;
    }
  }
}

}  // namespace ratgf
