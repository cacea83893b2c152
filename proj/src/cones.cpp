#include "ratgf/cones.hpp"

#include "ratgf/errors.hpp"
#include "ratgf/linalg.hpp"
#include "ratgf/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

namespace ratgf {

SimplicialCone SimplicialCone::make(RatVector apex, std::vector<IntVector> generators) {
  Integer det = linalg::determinant(generators);
  return {std::move(apex), std::move(generators), std::move(det)};
}

namespace {

std::size_t rank_of(const std::vector<IntVector>& vs) {
  linalg::RatMatrix m;
  for (const auto& v : vs) m.push_back(linalg::to_rational(v));
  return linalg::rank(m);
}

std::vector<IntVector> canonical_rays(const std::vector<IntVector>& rays) {
  std::set<IntVector> s;
  for (const auto& r : rays) {
    if (linalg::is_zero(r)) continue;
    s.insert(linalg::primitive(r));
  }
  return {s.begin(), s.end()};
}

// Angular order around the origin starting at the positive x axis.
bool angle_less(const IntVector& a, const IntVector& b) {
  auto half = [](const IntVector& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return a[0] * b[1] - a[1] * b[0] > 0;
}

std::vector<SimplicialCone> triangulate_plane(const std::vector<IntVector>& rays) {
  std::vector<IntVector> order = rays;
  std::sort(order.begin(), order.end(), angle_less);
  const std::size_t n = order.size();
  // A gap of angle >= pi between angular neighbours is outside the cone.
  std::vector<std::size_t> reflex;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& u = order[i];
    const auto& v = order[(i + 1) % n];
    Integer cross = u[0] * v[1] - u[1] * v[0];
    Integer dot = u[0] * v[0] + u[1] * v[1];
    if (cross < 0 || (cross == 0 && dot < 0)) reflex.push_back(i);
  }
  if (reflex.size() > 1) throw NotFullDimensional("rays span a line");
  std::vector<SimplicialCone> cells;
  for (std::size_t i = 0; i < n; ++i) {
    if (!reflex.empty() && reflex[0] == i) continue;
    std::vector<IntVector> gens{order[i], order[(i + 1) % n]};
    std::sort(gens.begin(), gens.end());
    cells.push_back(SimplicialCone::make(RatVector(2), std::move(gens)));
  }
  return cells;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Regular triangulation from the lower hull of the rays lifted to positive
// heights. A d-subset S is a cell iff the linear functional c with
// c . s = h_s on S satisfies c . v < h_v on every other ray. Heights are
// redrawn deterministically until no tie occurs.
std::vector<SimplicialCone> triangulate_regular(const std::vector<IntVector>& rays, std::size_t d) {
  const std::size_t n = rays.size();
  std::vector<std::vector<std::size_t>> subsets;
  {
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    while (true) {
      subsets.push_back(idx);
      std::size_t i = d;
      while (i > 0 && idx[i - 1] == n - d + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    RatVector h(n);
    for (std::size_t i = 0; i < n; ++i) {
      h[i] = 1 + Rational(static_cast<unsigned long>(splitmix(attempt * 1000003ULL + i) % 10007), 10007);
    }
    std::vector<SimplicialCone> cells;
    bool tie = false;
    for (const auto& s : subsets) {
      linalg::RatMatrix m;
      RatVector rhs;
      for (auto i : s) {
        m.push_back(linalg::to_rational(rays[i]));
        rhs.push_back(h[i]);
      }
      auto c = linalg::solve(m, rhs);
      if (!c) continue;
      bool lower = true;
      for (std::size_t v = 0; v < n && !tie; ++v) {
        if (std::find(s.begin(), s.end(), v) != s.end()) continue;
        Rational val = linalg::dot(rays[v], *c);
        if (val == h[v]) tie = true;
        if (val > h[v]) lower = false;
      }
      if (tie) break;
      if (lower) {
        std::vector<IntVector> gens;
        for (auto i : s) gens.push_back(rays[i]);
        cells.push_back(SimplicialCone::make(RatVector(d), std::move(gens)));
      }
    }
    if (!tie) return cells;
  }
  throw std::logic_error("triangulate: no generic lifting found");
}

}  // namespace

std::vector<IntVector> polarize(const std::vector<IntVector>& rays, std::size_t dim) {
  auto canon = canonical_rays(rays);
  if (rank_of(canon) < dim) throw NotFullDimensional("polarize: rays do not span the space");
  return extreme_rays(canon, dim);
}

std::vector<SimplicialCone> triangulate(const std::vector<IntVector>& rays, std::size_t dim) {
  auto canon = canonical_rays(rays);
  if (rank_of(canon) < dim) throw NotFullDimensional("triangulate: rays do not span the space");
  std::vector<SimplicialCone> cells;
  if (canon.size() == dim) {
    cells.push_back(SimplicialCone::make(RatVector(dim), canon));
  } else if (dim == 1) {
    for (const auto& r : canon) cells.push_back(SimplicialCone::make(RatVector(1), {r}));
  } else if (dim == 2) {
    cells = triangulate_plane(canon);
  } else {
    cells = triangulate_regular(canon, dim);
  }
  std::sort(cells.begin(), cells.end(),
            [](const SimplicialCone& a, const SimplicialCone& b) { return a.generators < b.generators; });
  return cells;
}

std::vector<IntVector> lll_reduce(std::vector<IntVector> b) {
  const std::size_t n = b.size();
  if (n < 2) return b;
  const Rational delta(3, 4);
  std::vector<RatVector> star(n);
  std::vector<RatVector> mu(n, RatVector(n));
  RatVector norm(n);
  auto gso = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      star[i] = linalg::to_rational(b[i]);
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = linalg::dot(b[i], star[j]) / norm[j];
        for (std::size_t k = 0; k < star[i].size(); ++k) star[i][k] -= mu[i][j] * star[j][k];
      }
      norm[i] = linalg::dot(star[i], star[i]);
    }
  };
  gso();
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      Integer q = floor_of(mu[k][jj] + Rational(1, 2));
      if (q != 0) {
        for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[jj][t];
        gso();
      }
    }
    if (norm[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gso();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return b;
}

DecompositionVector find_decomposition_vector(const SimplicialCone& c) {
  const std::size_t d = c.dim();
  const Integer D = abs(c.det);
  if (D < 2) throw PreconditionError("find_decomposition_vector: cone is unimodular");

  const linalg::RatMatrix bmat = linalg::from_columns(c.generators);
  const linalg::RatMatrix binv = *linalg::inverse(bmat);
  // Scaled lattice D * B^{-1} Z^d is integral; its vectors v give alpha = v / D.
  std::vector<IntVector> basis(d, IntVector(d));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      Rational x = binv[i][j] * D;
      basis[j][i] = x.get_num();
    }
  }
  basis = lll_reduce(std::move(basis));

  // |alpha_i| <= D^{-1/d}  <=>  |v_i|^d <= D^{d-1}.
  const Integer limit = pow(D, static_cast<unsigned long>(d - 1));
  const Integer radius = kth_root_bound(Rational(limit), d, RootMode::Ceil);
  const linalg::RatMatrix m = linalg::from_columns(basis);
  const linalg::RatMatrix minv = *linalg::inverse(m);
  IntVector bound(d);
  for (std::size_t j = 0; j < d; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < d; ++i) s += abs(minv[j][i]);
    bound[j] = floor_of(s * radius);
  }

  std::optional<std::tuple<Integer, long, IntVector, IntVector>> best;  // (norm, -positives, w, v)
  IntVector x(d);
  for (std::size_t j = 0; j < d; ++j) x[j] = -bound[j];
  while (true) {
    if (!linalg::is_zero(x)) {
      IntVector v(d);
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) v[i] += basis[j][i] * x[j];
      }
      bool inside = true;
      Integer norm = 0;
      long positives = 0;
      for (const auto& vi : v) {
        if (pow(Integer(abs(vi)), d) > limit) {
          inside = false;
          break;
        }
        norm = std::max<Integer>(norm, abs(vi));
        if (vi > 0) ++positives;
      }
      if (inside) {
        IntVector w(d);
        for (std::size_t i = 0; i < d; ++i) {
          Rational s = 0;
          for (std::size_t j = 0; j < d; ++j) s += bmat[i][j] * v[j];
          w[i] = Rational(s / D).get_num();
        }
        auto key = std::make_tuple(norm, -positives, w, v);
        if (!best || key < *best) best = std::move(key);
      }
    }
    std::size_t j = 0;
    while (j < d && x[j] == bound[j]) {
      x[j] = -bound[j];
      ++j;
    }
    if (j == d) break;
    ++x[j];
  }
  if (!best) throw std::logic_error("find_decomposition_vector: Minkowski box contained no lattice point");
  const IntVector& v = std::get<3>(*best);
  DecompositionVector out;
  out.w = std::get<2>(*best);
  for (const auto& vi : v) out.alpha.push_back(make_rational(vi, D));
  return out;
}

namespace {

void decompose_into(const SignedCone& c, std::vector<SignedCone>& out) {
  if (c.cone.unimodular()) {
    out.push_back(c);
    return;
  }
  auto dv = find_decomposition_vector(c.cone);
  for (std::size_t i = 0; i < c.cone.dim(); ++i) {
    if (dv.alpha[i] == 0) continue;
    std::vector<IntVector> gens = c.cone.generators;
    gens[i] = dv.w;
    // det of the child is alpha_i * det of the parent.
    Integer det = Rational(dv.alpha[i] * c.cone.det).get_num();
    SignedCone child{c.sign * sign(dv.alpha[i]), {c.cone.apex, std::move(gens), std::move(det)}};
    decompose_into(child, out);
  }
}

}  // namespace

std::vector<SignedCone> decompose_unimodular(const SignedCone& c) {
  if (c.cone.det == 0) throw NotFullDimensional("decompose_unimodular: cone is not full-dimensional");
  std::vector<SignedCone> out;
  decompose_into(c, out);
  return out;
}

std::vector<SignedCone> decompose_unimodular(const SimplicialCone& c) { return decompose_unimodular(SignedCone{1, c}); }

SimplicialCone dualize(const SimplicialCone& c) {
  auto inv = linalg::inverse(linalg::from_columns(c.generators));
  if (!inv) throw NotFullDimensional("dualize: singular cone");
  std::vector<IntVector> gens;
  for (const auto& row : *inv) {
    RatVector neg = row;
    for (auto& x : neg) x = -x;
    gens.push_back(linalg::primitive(neg));
  }
  return SimplicialCone::make(c.apex, std::move(gens));
}

IntVector numerator_point(const SimplicialCone& c) {
  if (!c.unimodular()) throw PreconditionError("numerator_point: cone is not unimodular");
  const auto bmat = linalg::from_columns(c.generators);
  const auto inv = *linalg::inverse(bmat);
  RatVector coords = linalg::multiply(inv, c.apex);
  RatVector mu;
  for (const auto& x : coords) mu.emplace_back(ceil_of(x));
  RatVector a = linalg::multiply(bmat, mu);
  IntVector out;
  for (const auto& x : a) out.push_back(x.get_num());
  return out;
}

}  // namespace ratgf
