#pragma once

#include "ratgf/cones.hpp"
#include "ratgf/polynomial.hpp"
#include "ratgf/rational.hpp"

#include <vector>

namespace ratgf {

struct NumeratorMonomial {
  IntVector exponent;
  Rational coeff;
  friend bool operator==(const NumeratorMonomial&, const NumeratorMonomial&) = default;
};

struct DenominatorFactor {
  IntVector b;  // nonzero, first nonzero entry positive after normalization
  unsigned multiplicity = 1;
  friend bool operator==(const DenominatorFactor&, const DenominatorFactor&) = default;
};

// coefficient * (sum_e c_e z^e) / prod_j (1 - z^{b_j})^{m_j}
struct GFTerm {
  Rational coefficient = 1;
  std::vector<NumeratorMonomial> numerator;
  std::vector<DenominatorFactor> denominator;
  friend bool operator==(const GFTerm&, const GFTerm&) = default;
};

// Rewrites every factor 1/(1 - z^{-b})^m as (-1)^m z^{mb}/(1 - z^b)^m so that
// each b has a positive leading entry, merges repeated factors, combines like
// numerator monomials, and sorts both lists lexicographically.
GFTerm normalize_term(GFTerm t);

class GeneratingFunction {
 public:
  explicit GeneratingFunction(std::size_t dim) : dim_(dim) {}
  GeneratingFunction(std::size_t dim, std::vector<GFTerm> terms);

  std::size_t dim() const { return dim_; }
  const std::vector<GFTerm>& terms() const { return terms_; }
  void add(GFTerm t);

 private:
  std::size_t dim_;
  std::vector<GFTerm> terms_;
};

// The term sign * z^a / prod_j (1 - z^{u_j}) of a signed unimodular cone,
// sign-normalized.
GFTerm term_from_cone(const SignedCone& sc, const IntVector& a);

// Image under z_i d/dz_i (coord is 0-based). Terms with equal denominators
// are merged afterwards.
GeneratingFunction apply_zdz(const GeneratingFunction& g, std::size_t coord);

// D_h g = sum_beta c_beta prod_i (z_i d/dz_i)^{beta_i} g, one monomial at a time.
GeneratingFunction apply_operator(const GeneratingFunction& g, const SparsePolynomial& h);

}  // namespace ratgf
