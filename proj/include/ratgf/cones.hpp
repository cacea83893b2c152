#pragma once

#include "ratgf/rational.hpp"

#include <vector>

namespace ratgf {

// Simplicial cone apex + cone(generators). Generators are primitive integer
// columns; det caches the exact determinant of the generator matrix.
struct SimplicialCone {
  RatVector apex;
  std::vector<IntVector> generators;
  Integer det;

  static SimplicialCone make(RatVector apex, std::vector<IntVector> generators);
  std::size_t dim() const { return generators.size(); }
  bool unimodular() const { return det == 1 || det == -1; }
};

struct SignedCone {
  int sign = 1;  // +1 or -1
  SimplicialCone cone;
};

// Primitive generators of the polar {y : y . r <= 0 for all rays r}.
// Throws NotFullDimensional if the rays do not span R^dim.
std::vector<IntVector> polarize(const std::vector<IntVector>& rays, std::size_t dim);

// Simplicial cones (apex 0) built from the given rays that cover cone(rays)
// with pairwise disjoint interiors. The rays may contain a line (the cone need
// not be pointed), which happens for polars of lower-dimensional tangent cones.
// Throws NotFullDimensional if the rays do not span R^dim.
std::vector<SimplicialCone> triangulate(const std::vector<IntVector>& rays, std::size_t dim);

// LLL-reduced basis (delta = 3/4) of the lattice spanned by the given vectors.
std::vector<IntVector> lll_reduce(std::vector<IntVector> basis);

struct DecompositionVector {
  IntVector w;       // nonzero lattice vector
  RatVector alpha;   // w = B alpha, max |alpha_i| <= |det B|^{-1/d}
};

// Shortest nonzero w in the infinity norm of alpha = B^{-1} w, found by LLL on
// B^{-1} Z^d and exhaustive enumeration inside the Minkowski box. At least one
// alpha_i is positive. Requires |det| >= 2.
DecompositionVector find_decomposition_vector(const SimplicialCone& c);

// Signed unimodular cones whose indicator functions add up to the input's,
// modulo lower-dimensional cones. Intended for cones in dual space, where those
// dropped pieces correspond to primal cones with lines.
std::vector<SignedCone> decompose_unimodular(const SignedCone& c);
std::vector<SignedCone> decompose_unimodular(const SimplicialCone& c);

// The polar cone of a simplicial cone, generated by the columns of -B^{-T}
// scaled to primitive vectors. The apex is carried over.
SimplicialCone dualize(const SimplicialCone& c);

// The unique lattice point a = B ceil(B^{-1} apex) of the half-open
// parallelepiped apex + B [0,1)^d of a unimodular cone.
IntVector numerator_point(const SimplicialCone& c);

}  // namespace ratgf
