#include "ratgf/polytope.hpp"

#include "ratgf/errors.hpp"
#include "ratgf/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace ratgf {

Polytope::Polytope(std::size_t dim, std::vector<Row> rows) : dim_(dim), rows_(std::move(rows)) {
  if (dim_ == 0) throw PreconditionError("polytope dimension must be at least 1");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].a.size() != dim_) {
      throw PreconditionError("row " + std::to_string(i) + " has " + std::to_string(rows_[i].a.size()) +
                              " coefficients, expected " + std::to_string(dim_));
    }
    if (linalg::is_zero(rows_[i].a)) throw PreconditionError("row " + std::to_string(i) + " has a zero normal");
  }
}

Polytope Polytope::with_row(Row row) const {
  auto rows = rows_;
  rows.push_back(std::move(row));
  return Polytope(dim_, std::move(rows));
}

IntVector Polytope::primitive_normal(std::size_t i) const { return linalg::primitive(rows_[i].a); }

Polytope make_box(const RatVector& lo, const RatVector& hi) {
  const std::size_t d = lo.size();
  std::vector<Row> rows;
  for (std::size_t i = 0; i < d; ++i) {
    RatVector up(d), down(d);
    up[i] = 1;
    down[i] = -1;
    rows.push_back({up, hi[i]});
    rows.push_back({down, -lo[i]});
  }
  return Polytope(d, std::move(rows));
}

bool contains_point(const Polytope& p, const RatVector& x) {
  for (const auto& row : p.rows()) {
    if (linalg::dot(row.a, x) > row.b) return false;
  }
  return true;
}

bool contains_lattice_point(const Polytope& p, const IntVector& x) {
  if (x.size() != p.dim()) throw PreconditionError("point dimension mismatch");
  for (const auto& row : p.rows()) {
    if (linalg::dot(x, row.a) > row.b) return false;
  }
  return true;
}

namespace {

// Calls fn(indices) for every k-subset of {0, ..., n-1} in lexicographic order.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Vertex enumeration without any boundedness check: solve every d-subset of
// rows, keep feasible unique solutions, merge duplicates.
std::vector<Vertex> raw_vertices(const std::vector<Row>& rows, std::size_t d) {
  std::map<RatVector, std::vector<std::size_t>> found;
  std::set<RatVector> rejected;
  for_each_subset(rows.size(), d, [&](const std::vector<std::size_t>& subset) {
    linalg::RatMatrix m;
    RatVector rhs;
    for (auto i : subset) {
      m.push_back(rows[i].a);
      rhs.push_back(rows[i].b);
    }
    auto x = linalg::solve(m, rhs);
    if (!x || found.count(*x) || rejected.count(*x)) return;
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Rational lhs = linalg::dot(rows[i].a, *x);
      if (lhs > rows[i].b) {
        rejected.insert(*x);
        return;
      }
      if (lhs == rows[i].b) active.push_back(i);
    }
    found.emplace(std::move(*x), std::move(active));
  });
  std::vector<Vertex> out;
  out.reserve(found.size());
  for (auto& [pt, act] : found) out.push_back({pt, act});
  return out;
}

bool recession_is_trivial(const Polytope& p) {
  const std::size_t d = p.dim();
  std::vector<Row> rows;
  for (const auto& r : p.rows()) rows.push_back({r.a, 0});
  for (std::size_t i = 0; i < d; ++i) {
    RatVector e(d);
    e[i] = 1;
    rows.push_back({e, 1});
    e[i] = -1;
    rows.push_back({e, 1});
  }
  for (const auto& v : raw_vertices(rows, d)) {
    if (!linalg::is_zero(v.point)) return false;
  }
  return true;
}

// Feasibility of a polyhedron without vertices: intersect with the orthogonal
// complement of its lineality space, which is pointed, and look for a vertex.
bool feasible_without_vertices(const Polytope& p) {
  linalg::RatMatrix a;
  for (const auto& r : p.rows()) a.push_back(r.a);
  auto lineality = linalg::nullspace(a, p.dim());
  if (lineality.empty()) return false;
  std::vector<Row> rows = p.rows();
  for (auto& l : lineality) {
    rows.push_back({l, 0});
    RatVector neg = l;
    for (auto& x : neg) x = -x;
    rows.push_back({neg, 0});
  }
  return !raw_vertices(rows, p.dim()).empty();
}

}  // namespace

std::vector<Vertex> enumerate_vertices(const Polytope& p) {
  auto vertices = raw_vertices(p.rows(), p.dim());
  if (vertices.empty()) {
    if (feasible_without_vertices(p)) throw Unbounded("polyhedron contains a line");
    return vertices;
  }
  if (!recession_is_trivial(p)) throw Unbounded("polyhedron has a nontrivial recession cone");
  return vertices;
}

std::vector<IntVector> extreme_rays(const std::vector<IntVector>& normals, std::size_t dim) {
  std::set<IntVector> rays;
  auto admissible = [&](const RatVector& r) {
    for (const auto& n : normals) {
      if (linalg::dot(n, r) > 0) return false;
    }
    return true;
  };
  for_each_subset(normals.size(), dim - 1, [&](const std::vector<std::size_t>& subset) {
    linalg::RatMatrix m;
    for (auto i : subset) m.push_back(linalg::to_rational(normals[i]));
    std::vector<RatVector> kernel;
    if (m.empty()) {
      kernel.push_back(RatVector(dim, 1));  // dim == 1: the whole line
    } else {
      kernel = linalg::nullspace(m, dim);
    }
    if (kernel.size() != 1) return;
    RatVector r = kernel[0];
    for (int s = 0; s < 2; ++s) {
      if (admissible(r)) rays.insert(linalg::primitive(r));
      for (auto& x : r) x = -x;
    }
  });
  return {rays.begin(), rays.end()};
}

VertexCone tangent_cone(const Polytope& p, const Vertex& v) {
  std::vector<IntVector> normals;
  for (auto i : v.active) normals.push_back(p.primitive_normal(i));
  return {v.point, extreme_rays(normals, p.dim())};
}

bool Box::single_point() const { return !empty && lo == hi; }

Box bounding_box(const std::vector<Vertex>& vertices, std::size_t dim) {
  if (vertices.empty()) throw EmptyPolytope("polytope has no vertices");
  Box box;
  box.lo.resize(dim);
  box.hi.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Rational mn = vertices[0].point[i], mx = vertices[0].point[i];
    for (const auto& v : vertices) {
      mn = std::min(mn, v.point[i]);
      mx = std::max(mx, v.point[i]);
    }
    box.lo[i] = ceil_of(mn);
    box.hi[i] = floor_of(mx);
    if (box.lo[i] > box.hi[i]) box.empty = true;
  }
  return box;
}

Box bounding_box(const Polytope& p) { return bounding_box(enumerate_vertices(p), p.dim()); }

std::pair<Polytope, Polytope> bisect(const Polytope& p, std::size_t coord, const Integer& m) {
  if (coord >= p.dim()) throw PreconditionError("bisect: coordinate out of range");
  RatVector up(p.dim()), down(p.dim());
  up[coord] = 1;
  down[coord] = -1;
  return {p.with_row({up, Rational(m)}), p.with_row({down, Rational(-(m + 1))})};
}

}  // namespace ratgf
