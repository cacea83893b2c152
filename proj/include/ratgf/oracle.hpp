#pragma once

#include "ratgf/polynomial.hpp"
#include "ratgf/polytope.hpp"
#include "ratgf/rational.hpp"

#include <cstdint>
#include <vector>

namespace ratgf {

// Brute-force reference used to check everything else. Deliberately naive.

inline constexpr std::uint64_t kDefaultOracleCap = 1000000;

struct BruteReport {
  std::vector<IntVector> points;
  std::vector<Rational> values;
  Rational max;
  IntVector argmax;  // lexicographically smallest maximizer
};

// P cap Z^d in lexicographic order, by scanning the bounding box.
// Throws CapExceeded when the box has more than cap points.
std::vector<IntVector> enumerate_points(const Polytope& p, std::uint64_t cap = kDefaultOracleCap);

Rational brute_sum(const Polytope& p, const SparsePolynomial& h, std::uint64_t cap = kDefaultOracleCap);

// Throws EmptyPolytope when P has no lattice points.
BruteReport brute_max(const Polytope& p, const SparsePolynomial& f, std::uint64_t cap = kDefaultOracleCap);

}  // namespace ratgf
