#include "ratgf/genfun.hpp"

#include "ratgf/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace ratgf {

namespace {

int leading_sign(const IntVector& b) {
  for (const auto& x : b) {
    if (x != 0) return sign(x);
  }
  return 0;
}

using DenominatorKey = std::vector<std::pair<IntVector, unsigned>>;

DenominatorKey key_of(const std::vector<DenominatorFactor>& den) {
  DenominatorKey k;
  for (const auto& f : den) k.emplace_back(f.b, f.multiplicity);
  return k;
}

std::vector<NumeratorMonomial> combine(const std::map<IntVector, Rational>& m) {
  std::vector<NumeratorMonomial> out;
  for (const auto& [e, c] : m) {
    if (c != 0) out.push_back({e, c});
  }
  return out;
}

// Merges terms with identical denominators into one term with coefficient 1.
std::vector<GFTerm> merge_terms(std::vector<GFTerm> terms) {
  std::map<DenominatorKey, std::map<IntVector, Rational>> groups;
  std::map<DenominatorKey, std::vector<DenominatorFactor>> dens;
  for (auto& t : terms) {
    auto key = key_of(t.denominator);
    auto& num = groups[key];
    for (auto& m : t.numerator) num[m.exponent] += t.coefficient * m.coeff;
    dens.try_emplace(key, std::move(t.denominator));
  }
  std::vector<GFTerm> out;
  for (auto& [key, num] : groups) {
    auto monomials = combine(num);
    if (monomials.empty()) continue;
    out.push_back({1, std::move(monomials), std::move(dens[key])});
  }
  return out;
}

}  // namespace

GFTerm normalize_term(GFTerm t) {
  if (t.numerator.empty()) throw PreconditionError("generating-function term with empty numerator");
  const std::size_t d = t.numerator.front().exponent.size();
  IntVector shift(d);
  std::map<IntVector, unsigned> factors;
  for (auto& f : t.denominator) {
    int s = leading_sign(f.b);
    if (s == 0) throw PreconditionError("zero denominator vector");
    if (s < 0) {
      for (auto& x : f.b) x = -x;
      for (std::size_t i = 0; i < d; ++i) shift[i] += f.multiplicity * f.b[i];
      if (f.multiplicity % 2 == 1) t.coefficient = -t.coefficient;
    }
    factors[f.b] += f.multiplicity;
  }
  std::map<IntVector, Rational> num;
  for (auto& m : t.numerator) {
    IntVector e = m.exponent;
    for (std::size_t i = 0; i < d; ++i) e[i] += shift[i];
    num[e] += m.coeff;
  }
  GFTerm out;
  out.coefficient = t.coefficient;
  out.numerator = combine(num);
  for (auto& [b, mult] : factors) out.denominator.push_back({b, mult});
  return out;
}

GeneratingFunction::GeneratingFunction(std::size_t dim, std::vector<GFTerm> terms)
    : dim_(dim), terms_(std::move(terms)) {}

void GeneratingFunction::add(GFTerm t) { terms_.push_back(std::move(t)); }

GFTerm term_from_cone(const SignedCone& sc, const IntVector& a) {
  GFTerm t;
  t.coefficient = sc.sign;
  t.numerator.push_back({a, 1});
  for (const auto& u : sc.cone.generators) t.denominator.push_back({u, 1});
  return normalize_term(std::move(t));
}

GeneratingFunction apply_zdz(const GeneratingFunction& g, std::size_t coord) {
  if (coord >= g.dim()) throw PreconditionError("apply_zdz: coordinate out of range");
  std::vector<GFTerm> out;
  for (const auto& t : g.terms()) {
    // z_i d/dz_i of the numerator.
    GFTerm dn{t.coefficient, {}, t.denominator};
    for (const auto& m : t.numerator) {
      if (m.exponent[coord] != 0) dn.numerator.push_back({m.exponent, m.coeff * m.exponent[coord]});
    }
    if (!dn.numerator.empty()) out.push_back(std::move(dn));
    // z_i d/dz_i (1 - z^b)^{-m} = m b_i z^b (1 - z^b)^{-(m+1)}.
    for (std::size_t j = 0; j < t.denominator.size(); ++j) {
      const auto& f = t.denominator[j];
      if (f.b[coord] == 0) continue;
      GFTerm dj{t.coefficient * f.multiplicity * Rational(f.b[coord]), {}, t.denominator};
      dj.denominator[j].multiplicity += 1;
      for (const auto& m : t.numerator) {
        IntVector e = m.exponent;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += f.b[i];
        dj.numerator.push_back({std::move(e), m.coeff});
      }
      out.push_back(std::move(dj));
    }
  }
  return GeneratingFunction(g.dim(), merge_terms(std::move(out)));
}

GeneratingFunction apply_operator(const GeneratingFunction& g, const SparsePolynomial& h) {
  if (h.dim() != g.dim()) throw PreconditionError("apply_operator: dimension mismatch");
  std::vector<GFTerm> all;
  for (const auto& [beta, c] : h.terms()) {
    GeneratingFunction image = g;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      for (unsigned r = 0; r < beta[i]; ++r) image = apply_zdz(image, i);
    }
    for (auto t : image.terms()) {
      t.coefficient *= c;
      all.push_back(std::move(t));
    }
  }
  return GeneratingFunction(g.dim(), merge_terms(std::move(all)));
}

}  // namespace ratgf
