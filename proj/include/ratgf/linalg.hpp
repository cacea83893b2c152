#pragma once

#include "ratgf/rational.hpp"

#include <optional>
#include <vector>

// Small dense exact linear algebra. Dimensions here are the fixed, small
// ambient dimensions of the polytopes (d <= 6 in practice), so everything is
// plain Gaussian elimination over the rationals.
namespace ratgf::linalg {

using RatMatrix = std::vector<RatVector>;  // row-major

RatVector to_rational(const IntVector& v);

Rational dot(const RatVector& a, const RatVector& b);
Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);

// Unique solution of the square system M x = rhs, or nullopt if M is singular.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& rhs);

std::size_t rank(RatMatrix m);

// Basis of {x : M x = 0}, one vector per free column of the reduced form.
std::vector<RatVector> nullspace(RatMatrix m, std::size_t cols);

// Inverse of a square matrix; nullopt if singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

// Determinant of the square matrix whose columns are given.
Integer determinant(const std::vector<IntVector>& columns);
Rational determinant(const RatMatrix& m);

// Matrix with the given vectors as columns.
RatMatrix from_columns(const std::vector<IntVector>& columns);
RatMatrix transpose(const RatMatrix& m);
RatVector multiply(const RatMatrix& m, const RatVector& v);

// The primitive integer vector pointing in the same direction (gcd of entries 1).
// The zero vector maps to itself.
IntVector primitive(const RatVector& v);
IntVector primitive(const IntVector& v);

bool is_zero(const RatVector& v);
bool is_zero(const IntVector& v);

}  // namespace ratgf::linalg
