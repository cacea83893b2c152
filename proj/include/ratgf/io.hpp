#pragma once

#include "ratgf/polynomial.hpp"
#include "ratgf/polytope.hpp"

#include <istream>
#include <string>

namespace ratgf {

// Polytope text: first line "d m", then m lines "a_1 ... a_d b" meaning
// a . x <= b. Lines starting with '#' and blank lines are skipped.
Polytope parse_polytope(std::istream& in);
Polytope read_polytope_file(const std::string& path);

// Polynomial text: one monomial per line, "c e_1 ... e_d". Throws
// DegreeBudgetExceeded if some monomial has total degree above degree_cap.
SparsePolynomial parse_polynomial(std::istream& in, std::size_t dim, unsigned degree_cap);
SparsePolynomial read_polynomial_file(const std::string& path, std::size_t dim, unsigned degree_cap);

}  // namespace ratgf
