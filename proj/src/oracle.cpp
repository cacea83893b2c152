#include "ratgf/oracle.hpp"

#include "ratgf/errors.hpp"

namespace ratgf {

std::vector<IntVector> enumerate_points(const Polytope& p, std::uint64_t cap) {
  const auto vertices = enumerate_vertices(p);
  if (vertices.empty()) return {};
  const Box box = bounding_box(vertices, p.dim());
  if (box.empty) return {};
  Integer volume = 1;
  for (std::size_t i = 0; i < p.dim(); ++i) volume *= box.hi[i] - box.lo[i] + 1;
  if (volume > Integer(std::to_string(cap))) {
    throw CapExceeded("bounding box has " + to_string(volume) + " points, cap is " + std::to_string(cap));
  }
  std::vector<IntVector> out;
  IntVector x = box.lo;
  for (;;) {
    if (contains_lattice_point(p, x)) out.push_back(x);
    // Last coordinate runs fastest, which gives lexicographic order.
    std::size_t i = p.dim();
    while (i > 0 && x[i - 1] == box.hi[i - 1]) {
      x[i - 1] = box.lo[i - 1];
      --i;
    }
    if (i == 0) break;
    ++x[i - 1];
  }
  return out;
}

Rational brute_sum(const Polytope& p, const SparsePolynomial& h, std::uint64_t cap) {
  Rational s = 0;
  for (const auto& x : enumerate_points(p, cap)) s += h.evaluate(x);
  return s;
}

BruteReport brute_max(const Polytope& p, const SparsePolynomial& f, std::uint64_t cap) {
  BruteReport r;
  r.points = enumerate_points(p, cap);
  if (r.points.empty()) throw EmptyPolytope("polytope contains no lattice points");
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    r.values.push_back(f.evaluate(r.points[i]));
    if (i == 0 || r.values[i] > r.max) {
      r.max = r.values[i];
      r.argmax = r.points[i];
    }
  }
  return r;
}

}  // namespace ratgf
