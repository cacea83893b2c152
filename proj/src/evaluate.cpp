#include "ratgf/evaluate.hpp"

#include "ratgf/cones.hpp"
#include "ratgf/errors.hpp"
#include "ratgf/laurent.hpp"
#include "ratgf/linalg.hpp"
#include "parallel.hpp"
#include "specialize.hpp"

#include <set>

namespace ratgf {

Direction generic_direction(const std::vector<IntVector>& vectors, std::size_t dim,
                            unsigned long first_t) {
  for (unsigned long t = std::max(1ul, first_t);; ++t) {
    IntVector lambda(dim);
    Integer p = 1;
    for (std::size_t i = 0; i < dim; ++i) {
      lambda[i] = p;
      p *= t;
    }
    bool ok = true;
    for (const auto& b : vectors) {
      if (linalg::dot(lambda, b) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) return {lambda};
  }
}

Direction generic_direction(const GeneratingFunction& g, unsigned long first_t) {
  std::set<IntVector> vectors;
  for (const auto& t : g.terms()) {
    for (const auto& f : t.denominator) vectors.insert(f.b);
  }
  return generic_direction(std::vector<IntVector>(vectors.begin(), vectors.end()), g.dim(), first_t);
}

Rational term_constant(const GFTerm& t, const Direction& dir) {
  long M = 0;
  for (const auto& f : t.denominator) {
    if (linalg::dot(dir.lambda, f.b) == 0) throw NonGenericDirection("direction orthogonal to a denominator");
    M += f.multiplicity;
  }
  // Numerator sum_e c_e e^{(e . lambda) t} through t^M.
  std::vector<Rational> num(M + 1);
  for (const auto& m : t.numerator) {
    LaurentSeries e = series_exp_linear(Rational(linalg::dot(dir.lambda, m.exponent)), M);
    for (long n = 0; n <= M; ++n) num[n] += m.coeff * e.coefficient(n);
  }
  LaurentSeries prod(0, std::move(num));
  for (const auto& f : t.denominator) {
    LaurentSeries inv = inverse_one_minus_exp(Rational(linalg::dot(dir.lambda, f.b)), M);
    prod = series_mul(prod, series_pow(inv, f.multiplicity));
  }
  return t.coefficient * prod.coefficient(0);
}

Rational evaluate_at_one(const GeneratingFunction& g, unsigned long first_t) {
  if (g.terms().empty()) return 0;
  const Direction dir = generic_direction(g, first_t);
  Rational total = 0;
  for (const auto& t : g.terms()) total += term_constant(t, dir);
  return total;
}

ConeExpansion expand_polytope(const Polytope& p, const EvalOptions& opts) {
  const std::size_t d = p.dim();
  const auto vertices = enumerate_vertices(p);
  std::vector<std::vector<UnimodularTerm>> slots(vertices.size());
  detail::parallel_for(vertices.size(), opts.threads, [&](std::size_t vi) {
    const Vertex& v = vertices[vi];
    std::vector<IntVector> normals;
    for (auto i : v.active) normals.push_back(p.primitive_normal(i));
    for (auto cell : triangulate(normals, d)) {
      cell.apex = v.point;
      for (const auto& sc : decompose_unimodular(cell)) {
        SimplicialCone primal = dualize(sc.cone);
        IntVector a = numerator_point(primal);
        slots[vi].push_back({sc.sign, std::move(a), std::move(primal.generators)});
      }
    }
  });
  ConeExpansion out;
  out.dim = d;
  for (const auto& v : vertices) out.vertices.push_back(v.point);
  for (auto& s : slots) {
    for (auto& t : s) out.terms.push_back(std::move(t));
  }
  return out;
}

GeneratingFunction to_generating_function(const ConeExpansion& e) {
  GeneratingFunction g(e.dim);
  for (const auto& t : e.terms) {
    GFTerm term;
    term.coefficient = t.sign;
    term.numerator.push_back({t.a, 1});
    for (const auto& u : t.generators) term.denominator.push_back({u, 1});
    g.add(normalize_term(std::move(term)));
  }
  return g;
}

GeneratingFunction generating_function(const Polytope& p, const EvalOptions& opts) {
  return to_generating_function(expand_polytope(p, opts));
}

Integer count(const ConeExpansion& e) {
  Rational v = evaluate_at_one(to_generating_function(e));
  if (v.get_den() != 1 || v < 0) throw std::logic_error("lattice-point count is not a non-negative integer");
  return v.get_num();
}

Integer count(const Polytope& p, const EvalOptions& opts) { return count(expand_polytope(p, opts)); }

namespace {

const Integer kMaxLevelWidth = 1 << 22;
const Integer kMaxLevelWork = 100000000;

std::vector<IntVector> all_generators(const ConeExpansion& e) {
  std::set<IntVector> s;
  for (const auto& t : e.terms) s.insert(t.generators.begin(), t.generators.end());
  return {s.begin(), s.end()};
}

Rational sum_slots(const std::vector<Rational>& v) {
  Rational total = 0;
  for (const auto& x : v) total += x;
  return total;
}

}  // namespace

Rational weighted_sum(const ConeExpansion& e, const SparsePolynomial& h, const EvalOptions& opts) {
  if (h.dim() != e.dim) throw PreconditionError("weighted_sum: dimension mismatch");
  check_degree_budget(h.degree(), 1, opts.degree_cap);
  if (h.is_zero() || e.terms.empty()) return 0;
  const Direction dir = generic_direction(all_generators(e), e.dim, opts.first_t);
  const detail::InverseExpTable g(2 * h.degree() + e.dim);
  std::vector<Rational> slots(e.terms.size());
  detail::parallel_for(e.terms.size(), opts.threads, [&](std::size_t i) {
    const auto& t = e.terms[i];
    slots[i] = detail::cone_weighted_constant(t, dir.lambda, compose_affine(h, t.a, t.generators), g);
  });
  return sum_slots(slots);
}

Rational weighted_sum(const Polytope& p, const SparsePolynomial& h, const EvalOptions& opts) {
  if (h.dim() != p.dim()) throw PreconditionError("weighted_sum: dimension mismatch");
  check_degree_budget(h.degree(), 1, opts.degree_cap);
  return weighted_sum(expand_polytope(p, opts), h, opts);
}

Rational weighted_sum_symbolic(const Polytope& p, const SparsePolynomial& h, const EvalOptions& opts) {
  if (h.dim() != p.dim()) throw PreconditionError("weighted_sum: dimension mismatch");
  check_degree_budget(h.degree(), 1, opts.degree_cap);
  return evaluate_at_one(apply_operator(generating_function(p, opts), h), opts.first_t);
}

struct PowerSums::State {
  ConeExpansion expansion;
  SparsePolynomial f;
  EvalOptions opts;
  IntVector lambda;
  bool affine = false;
  Rational c0;
  RatVector l;
  std::vector<Rational> affine_sums;  // S_0..S_K once computed
  bool levels_ready = false;
  bool use_levels = false;
  Integer scale;                // common denominator of l
  Integer vmin;
  std::vector<Integer> level_counts;  // lattice points with scale * l . x = vmin + i
  std::vector<SparsePolynomial> composed;  // f(a + U mu) per piece
  std::vector<SparsePolynomial> powers;    // composed^cached_k per piece
  unsigned cached_k = 0;
  std::unique_ptr<detail::InverseExpTable> table;

  State(ConeExpansion e, SparsePolynomial poly, EvalOptions o)
      : expansion(std::move(e)), f(std::move(poly)), opts(o), l(expansion.dim) {}

  const detail::InverseExpTable& table_for(long order) {
    if (!table || table->order() < order) table = std::make_unique<detail::InverseExpTable>(order);
    return *table;
  }
};

PowerSums::PowerSums(const Polytope& p, SparsePolynomial f, EvalOptions opts)
    : PowerSums(expand_polytope(p, opts), std::move(f), opts) {}

PowerSums::PowerSums(ConeExpansion e, SparsePolynomial f, EvalOptions opts) {
  if (f.dim() != e.dim) throw PreconditionError("objective dimension does not match the polytope");
  count_ = ratgf::count(e);
  state_ = std::make_unique<State>(std::move(e), std::move(f), opts);
  auto& s = *state_;
  s.lambda = generic_direction(all_generators(s.expansion), s.expansion.dim, opts.first_t).lambda;
  if (s.f.degree() <= 1) {
    s.affine = true;
    for (const auto& [ex, c] : s.f.terms()) {
      bool constant = true;
      for (std::size_t i = 0; i < ex.size(); ++i) {
        if (ex[i] == 1) {
          s.l[i] = c;
          constant = false;
        }
      }
      if (constant) s.c0 = c;
    }
  }
}

void PowerSums::prepare_levels() {
  auto& s = *state_;
  s.levels_ready = true;
  s.scale = 1;
  for (const auto& x : s.l) s.scale = lcm(s.scale, Integer(x.get_den()));
  IntVector lint;
  for (const auto& x : s.l) lint.push_back(Rational(x * s.scale).get_num());
  const auto& verts = s.expansion.vertices;
  if (verts.empty()) return;
  Rational lo = linalg::dot(lint, verts[0]), hi = lo;
  for (const auto& v : verts) {
    Rational x = linalg::dot(lint, v);
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  s.vmin = ceil_of(lo);
  const Integer vmax = floor_of(hi);
  if (vmax < s.vmin) {
    s.use_levels = true;  // no lattice point at all
    return;
  }
  const Integer width = vmax - s.vmin + 1;
  // Level counting costs about width * pieces; beyond that the exponential
  // series is cheaper.
  if (width > kMaxLevelWidth || width * static_cast<unsigned long>(s.expansion.terms.size()) > kMaxLevelWork) return;
  const std::size_t n = s.expansion.terms.size();
  std::vector<std::vector<Rational>> slots(n);
  detail::parallel_for(n, s.opts.threads, [&](std::size_t i) {
    slots[i].assign(width.get_ui(), Rational(0));
    detail::accumulate_level_counts(s.expansion.terms[i], s.lambda, lint, s.vmin, vmax, slots[i]);
  });
  std::vector<Rational> counts(width.get_ui());
  for (const auto& v : slots) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += v[i];
  }
  for (const auto& c : counts) {
    if (c.get_den() != 1 || c < 0) throw std::logic_error("level count is not a non-negative integer");
    s.level_counts.push_back(c.get_num());
  }
  s.use_levels = true;
}

PowerSums::~PowerSums() = default;
PowerSums::PowerSums(PowerSums&&) noexcept = default;
PowerSums& PowerSums::operator=(PowerSums&&) noexcept = default;

Rational PowerSums::sum(unsigned k) {
  auto& s = *state_;
  check_degree_budget(s.f.degree(), k, s.opts.degree_cap);
  if (k == 0) return Rational(count_);
  if (s.expansion.terms.empty()) return 0;
  if (s.f.degree() == 0) return Rational(count_) * pow(s.f.evaluate(RatVector(s.expansion.dim)), static_cast<long>(k));
  const std::size_t n = s.expansion.terms.size();
  if (s.affine && !s.levels_ready) prepare_levels();
  if (s.use_levels) {
    Rational total = 0;
    for (std::size_t i = 0; i < s.level_counts.size(); ++i) {
      if (s.level_counts[i] == 0) continue;
      Rational value = s.c0 + Rational(s.vmin + static_cast<unsigned long>(i)) / s.scale;
      total += s.level_counts[i] * pow(value, static_cast<long>(k));
    }
    return total;
  }
  if (s.affine) {
    if (s.affine_sums.size() <= k) {
      unsigned K = std::max<unsigned>(k, 2 * static_cast<unsigned>(s.affine_sums.size()));
      const auto& g = s.table_for(static_cast<long>(K + 3 * s.expansion.dim));
      std::vector<std::vector<Rational>> slots(n);
      detail::parallel_for(n, s.opts.threads, [&](std::size_t i) {
        slots[i] = detail::cone_affine_power_sums(s.expansion.terms[i], s.lambda, s.c0, s.l, K, g);
      });
      s.affine_sums.assign(K + 1, Rational(0));
      for (const auto& v : slots) {
        for (unsigned j = 0; j <= K; ++j) s.affine_sums[j] += v[j];
      }
    }
    return s.affine_sums[k];
  }
  if (s.composed.empty()) {
    s.composed.resize(n, SparsePolynomial(s.expansion.dim));
    detail::parallel_for(n, s.opts.threads, [&](std::size_t i) {
      const auto& t = s.expansion.terms[i];
      s.composed[i] = compose_affine(s.f, t.a, t.generators);
    });
  }
  const bool reuse = s.cached_k != 0 && s.cached_k <= k;
  const unsigned start = reuse ? s.cached_k : 1;
  if (!reuse) s.powers = s.composed;
  const auto& g = s.table_for(static_cast<long>(2 * k * s.f.degree() + s.expansion.dim));
  std::vector<Rational> slots(n);
  detail::parallel_for(n, s.opts.threads, [&](std::size_t i) {
    for (unsigned j = start; j < k; ++j) s.powers[i] = s.powers[i] * s.composed[i];
    slots[i] = detail::cone_weighted_constant(s.expansion.terms[i], s.lambda, s.powers[i], g);
  });
  s.cached_k = k;
  return sum_slots(slots);
}

}  // namespace ratgf
