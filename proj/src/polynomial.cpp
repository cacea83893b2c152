#include "ratgf/polynomial.hpp"

#include "ratgf/errors.hpp"

#include <numeric>

namespace ratgf {

SparsePolynomial SparsePolynomial::constant(std::size_t dim, const Rational& c) {
  SparsePolynomial p(dim);
  p.add_term(Exponent(dim, 0), c);
  return p;
}

SparsePolynomial SparsePolynomial::monomial(const Exponent& e, const Rational& c) {
  SparsePolynomial p(e.size());
  p.add_term(e, c);
  return p;
}

SparsePolynomial SparsePolynomial::affine(const Rational& c0, const RatVector& l) {
  SparsePolynomial p = constant(l.size(), c0);
  for (std::size_t i = 0; i < l.size(); ++i) {
    Exponent e(l.size(), 0);
    e[i] = 1;
    p.add_term(e, l[i]);
  }
  return p;
}

unsigned SparsePolynomial::degree() const {
  unsigned deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0u));
  return deg;
}

void SparsePolynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != dim_) throw PreconditionError("monomial dimension mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SparsePolynomial::evaluate(const RatVector& x) const {
  if (x.size() != dim_) throw PreconditionError("evaluation point dimension mismatch");
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (e[i] != 0) m *= pow(x[i], static_cast<long>(e[i]));
    }
    s += m;
  }
  return s;
}

Rational SparsePolynomial::evaluate(const IntVector& x) const {
  RatVector r;
  for (const auto& v : x) r.emplace_back(v);
  return evaluate(r);
}

SparsePolynomial SparsePolynomial::scaled(const Rational& c) const {
  SparsePolynomial out(dim_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b) {
  if (a.dim_ != b.dim_) throw PreconditionError("polynomial dimension mismatch");
  SparsePolynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  if (a.dim_ != b.dim_) throw PreconditionError("polynomial dimension mismatch");
  SparsePolynomial out(a.dim_);
  Exponent e(a.dim_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

void check_degree_budget(unsigned degree, unsigned long k, unsigned degree_cap) {
  if (static_cast<unsigned long>(degree) * k > degree_cap) {
    throw DegreeBudgetExceeded("degree " + std::to_string(degree) + " * k " + std::to_string(k) +
                               " exceeds the degree cap " + std::to_string(degree_cap));
  }
}

SparsePolynomial poly_power(const SparsePolynomial& f, unsigned k, unsigned degree_cap) {
  if (k == 0) throw PreconditionError("poly_power: k must be positive");
  check_degree_budget(f.degree(), k, degree_cap);
  SparsePolynomial result = f;
  for (unsigned i = 1; i < k; ++i) result = result * f;
  return result;
}

SparsePolynomial compose_affine(const SparsePolynomial& h, const IntVector& offset,
                                const std::vector<IntVector>& columns) {
  const std::size_t d = h.dim();
  const std::size_t vars = columns.size();
  // Linear forms L_i(mu) = offset_i + sum_j M_ij mu_j and their powers.
  std::vector<std::vector<SparsePolynomial>> powers(d);
  std::vector<unsigned> max_exp(d, 0);
  for (const auto& [e, c] : h.terms()) {
    for (std::size_t i = 0; i < d; ++i) max_exp[i] = std::max(max_exp[i], e[i]);
  }
  for (std::size_t i = 0; i < d; ++i) {
    RatVector coeffs(vars);
    for (std::size_t j = 0; j < vars; ++j) coeffs[j] = columns[j][i];
    SparsePolynomial form = SparsePolynomial::affine(Rational(offset[i]), coeffs);
    powers[i].push_back(SparsePolynomial::constant(vars, 1));
    for (unsigned p = 1; p <= max_exp[i]; ++p) powers[i].push_back(powers[i].back() * form);
  }
  SparsePolynomial out(vars);
  for (const auto& [e, c] : h.terms()) {
    SparsePolynomial term = SparsePolynomial::constant(vars, c);
    for (std::size_t i = 0; i < d; ++i) {
      if (e[i] != 0) term = term * powers[i][e[i]];
    }
    out = out + term;
  }
  return out;
}

}  // namespace ratgf
