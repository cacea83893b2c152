#pragma once

#include "ratgf/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace ratgf {

// One inequality a . x <= b.
struct Row {
  RatVector a;
  Rational b;
};

// H-representation {x in R^d : a_i . x <= b_i}. Rows are validated on
// construction: d >= 1, every row has length d and a nonzero normal.
class Polytope {
 public:
  Polytope(std::size_t dim, std::vector<Row> rows);

  std::size_t dim() const { return dim_; }
  const std::vector<Row>& rows() const { return rows_; }

  Polytope with_row(Row row) const;

  // Integer row normal with the same direction as rows()[i].a.
  IntVector primitive_normal(std::size_t i) const;

 private:
  std::size_t dim_;
  std::vector<Row> rows_;
};

// Interval [lo, hi] in dimension 1, and the box prod [lo_i, hi_i].
Polytope make_box(const RatVector& lo, const RatVector& hi);

struct Vertex {
  RatVector point;
  std::vector<std::size_t> active;  // indices of rows tight at point
};

// Every vertex of P with its full active row set, in lexicographic order of
// points. Empty iff P has no vertices. Throws Unbounded when P is feasible
// and its recession cone is not {0}.
std::vector<Vertex> enumerate_vertices(const Polytope& p);

// Cone of feasible directions at a vertex, translated to the vertex.
struct VertexCone {
  RatVector apex;
  std::vector<IntVector> rays;  // primitive, pairwise non-parallel, lexicographic
};

VertexCone tangent_cone(const Polytope& p, const Vertex& v);

// Primitive extreme rays of the pointed cone {y : n . y <= 0 for all n in normals},
// found from rank-(d-1) subsets of the normals. Lexicographically sorted.
std::vector<IntVector> extreme_rays(const std::vector<IntVector>& normals, std::size_t dim);

// Integer hull box of P's vertices. empty is set when some lo_i > hi_i.
struct Box {
  IntVector lo;
  IntVector hi;
  bool empty = false;

  bool single_point() const;
};

// Throws EmptyPolytope when P has no vertices.
Box bounding_box(const Polytope& p);
Box bounding_box(const std::vector<Vertex>& vertices, std::size_t dim);

// (P and x_i <= m, P and x_i >= m + 1); coord is 0-based.
std::pair<Polytope, Polytope> bisect(const Polytope& p, std::size_t coord, const Integer& m);

bool contains_lattice_point(const Polytope& p, const IntVector& x);
bool contains_point(const Polytope& p, const RatVector& x);

}  // namespace ratgf
