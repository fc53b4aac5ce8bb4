#include "skelefib/fan.hpp"

#include <algorithm>

namespace skelefib {

IntMatrix Cone::generator_matrix() const {
  IntMatrix m(ambient_dim, generators.size());
  for (std::size_t c = 0; c < generators.size(); ++c) {
    if (generators[c].size() != ambient_dim) throw Error(ErrorCode::DimensionMismatch, "generator length differs from ambient dimension");
    for (std::size_t r = 0; r < ambient_dim; ++r) m(r, c) = generators[c][r];
  }
  return m;
}

bool generators_independent(const Cone& c) {
  if (c.generators.empty()) return true;
  return exact_rank(c.generator_matrix()) == c.size();
}

bool is_smooth(const Cone& c) {
  if (c.generators.empty()) return true;
  if (!generators_independent(c)) return false;
  // Rows of G^T are the generators; they extend to a basis iff every HNF
  // pivot is 1.
  const HermiteForm hnf = hermite_normal_form(c.generator_matrix().transpose());
  for (std::size_t r = 0; r < hnf.h.rows(); ++r) {
    const long p = hnf.pivot_columns[r];
    if (p < 0 || hnf.h(r, static_cast<std::size_t>(p)) != 1) return false;
  }
  return true;
}

namespace {

bool contains_generator(const Cone& c, const IntVector& g) {
  return std::find(c.generators.begin(), c.generators.end(), g) != c.generators.end();
}

// Nonnegative circuits of [G1 | -G2] generate the cone of pairs (l, m) >= 0
// with G1 l = G2 m. The cones meet exactly in the span of their shared rays
// iff no such circuit puts weight on an unshared generator.
bool meets_only_in_shared(const Cone& c1, const Cone& c2) {
  const std::size_t k1 = c1.size();
  const std::size_t k = k1 + c2.size();
  if (k == 0) return true;
  std::vector<bool> shared(k, false);
  for (std::size_t i = 0; i < k1; ++i) shared[i] = contains_generator(c2, c1.generators[i]);
  for (std::size_t j = 0; j < c2.size(); ++j) shared[k1 + j] = contains_generator(c1, c2.generators[j]);

  const std::size_t dim = c1.ambient_dim;
  RatMatrix full(dim, k);
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t r = 0; r < dim; ++r) full(r, i) = c1.generators[i][r];
  for (std::size_t j = 0; j < c2.size(); ++j)
    for (std::size_t r = 0; r < dim; ++r) full(r, k1 + j) = -c2.generators[j][r];

  const std::size_t max_support = std::min(k, dim + 1);
  for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
    const auto support = static_cast<std::size_t>(__builtin_popcountl(mask));
    if (support > max_support) continue;
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < k; ++c)
      if (mask & (1UL << c)) cols.push_back(c);
    RatMatrix sub(dim, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < dim; ++r) sub(r, c) = full(r, cols[c]);
    const std::vector<RationalVector> ker = kernel_basis(sub);
    if (ker.size() != 1) continue;
    const RationalVector& v = ker.front();
    const int s = sgn(v.front());
    const bool conformal = std::all_of(v.begin(), v.end(), [s](const Rational& x) { return sgn(x) == s; });
    if (s == 0 || !conformal) continue;
    for (std::size_t c : cols)
      if (!shared[c]) return false;
  }
  return true;
}

}  // namespace

std::optional<Cone> common_face(const Cone& c1, const Cone& c2) {
  if (c1.ambient_dim != c2.ambient_dim) throw Error(ErrorCode::DimensionMismatch, "cones live in different lattices");
  Cone face{c1.ambient_dim, {}};
  for (const IntVector& g : c1.generators)
    if (contains_generator(c2, g)) face.generators.push_back(g);
  if (!meets_only_in_shared(c1, c2)) return std::nullopt;
  return face;
}

FanReport validate_fan(const Fan& f) {
  FanReport report;
  report.pass = true;
  auto fail = [&report](std::string msg) {
    report.pass = false;
    report.issues.push_back(std::move(msg));
  };

  for (std::size_t i = 0; i < f.maximal_cones.size(); ++i) {
    const Cone& c = f.maximal_cones[i];
    ConeCheck check;
    if (c.ambient_dim != f.ambient_dim) {
      fail("cone " + std::to_string(i) + ": ambient dimension mismatch");
      report.cones.push_back(check);
      continue;
    }
    check.primitive = std::all_of(c.generators.begin(), c.generators.end(),
                                  [](const IntVector& g) { return is_primitive(g); });
    check.strongly_convex = generators_independent(c);
    check.smooth = is_smooth(c);
    check.supported = std::all_of(c.generators.begin(), c.generators.end(),
                                  [](const IntVector& g) { return !g.empty() && sgn(g.back()) > 0; });
    if (!check.primitive) fail("cone " + std::to_string(i) + ": non-primitive generator");
    if (!check.strongly_convex) fail("cone " + std::to_string(i) + ": generators are linearly dependent");
    if (!check.smooth) fail("cone " + std::to_string(i) + ": not smooth");
    if (!check.supported) fail("cone " + std::to_string(i) + ": generator outside the open upper half-space");
    report.cones.push_back(check);
  }
  if (!report.pass) return report;

  for (std::size_t i = 0; i < f.maximal_cones.size(); ++i)
    for (std::size_t j = i + 1; j < f.maximal_cones.size(); ++j) {
      const Cone& a = f.maximal_cones[i];
      const Cone& b = f.maximal_cones[j];
      ConePairCheck pc{i, j, false, false};
      std::vector<IntVector> ga = a.generators, gb = b.generators;
      std::sort(ga.begin(), ga.end());
      std::sort(gb.begin(), gb.end());
      pc.distinct = ga != gb;
      pc.common_face = common_face(a, b).has_value();
      if (!pc.distinct) fail("cones " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      if (!pc.common_face) fail("cones " + std::to_string(i) + " and " + std::to_string(j) + " overlap beyond a common face");
      report.pairs.push_back(pc);
    }
  return report;
}

RationalVector slice_point(const IntVector& ray) {
  if (ray.empty()) throw Error(ErrorCode::DimensionMismatch, "empty ray");
  const Integer& h = ray.back();
  if (sgn(h) == 0) throw Error(ErrorCode::ZeroHeightRay, "ray has height 0");
  if (sgn(h) < 0) throw Error(ErrorCode::NonPositiveHeight, "ray has negative height");
  RationalVector p;
  p.reserve(ray.size() - 1);
  for (std::size_t i = 0; i + 1 < ray.size(); ++i) p.push_back(make_rational(ray[i], h));
  return p;
}

std::vector<SlicePolytope> slice_height_one(const Fan& f) {
  std::vector<SlicePolytope> out;
  out.reserve(f.maximal_cones.size());
  for (std::size_t i = 0; i < f.maximal_cones.size(); ++i) {
    SlicePolytope s{i, {}};
    for (const IntVector& g : f.maximal_cones[i].generators) s.vertices.push_back(slice_point(g));
    out.push_back(std::move(s));
  }
  return out;
}

Integer ray_multiplicity(const IntVector& ray, const IotaWeight& iota) {
  if (ray.empty() || sgn(ray.back()) <= 0) throw Error(ErrorCode::NonPositiveHeight, "ray multiplicity needs positive height");
  if (!is_primitive(ray)) throw Error(ErrorCode::NotCoprime, "ray is not primitive");
  return iota.iota * ray.back();
}

std::optional<Location> locate(const Fan& f, const RationalVector& p) {
  const std::vector<SlicePolytope> slices = slice_height_one(f);
  for (const SlicePolytope& s : slices) {
    const std::size_t k = s.vertices.size();
    if (k == 0) continue;
    if (s.vertices.front().size() != p.size()) throw Error(ErrorCode::DimensionMismatch, "point and slice dimensions differ");
    RatMatrix a(p.size() + 1, k);
    RationalVector rhs(p.size() + 1);
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t r = 0; r < p.size(); ++r) a(r, c) = s.vertices[c][r];
      a(p.size(), c) = 1;
    }
    for (std::size_t r = 0; r < p.size(); ++r) rhs[r] = p[r];
    rhs[p.size()] = 1;
    std::optional<RationalVector> alpha = solve_linear(a, rhs);
    if (!alpha) continue;
    if (std::any_of(alpha->begin(), alpha->end(), [](const Rational& x) { return sgn(x) < 0; })) continue;
    return Location{s.cone_index, std::move(*alpha)};
  }
  return std::nullopt;
}

}  // namespace skelefib
