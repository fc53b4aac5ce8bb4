#include "skelefib/syz.hpp"

#include <algorithm>
#include <set>

namespace skelefib {

AffineTransition AffineTransition::identity(std::size_t n) {
  return AffineTransition{RatMatrix::identity(n), RationalVector(n, Rational(0))};
}

RationalVector AffineTransition::apply(std::span<const Rational> x) const {
  RationalVector y = linear * x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += translation[i];
  return y;
}

AffineTransition AffineTransition::after(const AffineTransition& first) const {
  AffineTransition out;
  out.linear = linear * first.linear;
  out.translation = apply(first.translation);
  return out;
}

AffineTransition AffineTransition::inverse() const {
  AffineTransition out;
  out.linear = skelefib::inverse(linear);
  out.translation = out.linear * std::span<const Rational>(translation);
  for (Rational& x : out.translation) x = -x;
  return out;
}

namespace {

void check_keys(const Face& f, const std::map<DivisorId, Rational>& values, const char* what) {
  std::set<DivisorId> keys;
  for (const auto& kv : values) keys.insert(kv.first);
  if (keys != std::set<DivisorId>(f.vertices.begin(), f.vertices.end()))
    throw Error(ErrorCode::InvalidModel, std::string(what) + " must have one entry per vertex of face " + std::to_string(f.id));
}

}  // namespace

SkeletonPoint retract(const DegenerationModel& m, const ValuedPoint& x) {
  const Face& f = m.face(x.face);
  check_keys(f, x.q, "q");
  SkeletonPoint p{x.face, {}};
  Rational total = 0;
  for (const auto& [i, qi] : x.q) {
    if (sgn(qi) <= 0)
      throw Error(ErrorCode::NonPositiveValuation, "q_" + std::to_string(i) + " = " + qi.get_str() + " is not positive");
    Rational a = m.divisor(i).N * qi;
    total += a;
    p.alpha.emplace(i, std::move(a));
  }
  if (total != 1) throw Error(ErrorCode::NormalizationError, "sum N_i q_i = " + total.get_str() + ", expected 1");
  return p;
}

ValuedPoint as_valued_point(const DegenerationModel& m, const SkeletonPoint& p) {
  check_keys(m.face(p.face), p.alpha, "alpha");
  ValuedPoint x{p.face, {}};
  for (const auto& [i, a] : p.alpha) x.q.emplace(i, make_rational(1, m.divisor(i).N) * a);
  return x;
}

Rational trop_character(const TorusPoint& x, std::span<const Integer> mchar) {
  if (mchar.size() != x.r.size())
    throw Error(ErrorCode::DimensionMismatch, "character of length " + std::to_string(mchar.size()) +
                                                  " on a torus of rank " + std::to_string(x.r.size()));
  Rational s = 0;
  for (std::size_t k = 0; k < mchar.size(); ++k) s += mchar[k] * x.r[k];
  return s;
}

TorusPoint gauss_section(const RationalVector& r) { return TorusPoint{r}; }

StratumData stratum_data(const DegenerationModel& m, FaceId tau) {
  const StratumCurveData* c = m.curve(tau);
  if (!c) throw Error(ErrorCode::NotLogCalabiYau, "face " + std::to_string(tau) + " has no curve data");
  StratumData d;
  for (const auto& [j, bj] : c->b) {
    d.j_ids.push_back(j);
    d.n_j.push_back(m.divisor(j).N);
    d.b.push_back(bj);
  }
  d.zero_id = c->endpoint_divisors.first;
  d.inf_id = c->endpoint_divisors.second;
  d.n_zero = m.divisor(d.zero_id).N;
  d.n_inf = m.divisor(d.inf_id).N;
  return d;
}

std::map<DivisorId, Integer> wall_relation(const StratumFan& sf) {
  const IntMatrix basis = sf.fan.maximal_cones.at(0).generator_matrix();
  IntVector w = sf.v0;
  for (std::size_t r = 0; r < w.size(); ++r) w[r] += sf.vinf[r];
  const IntVector c = express_in_basis(basis, w);
  if (c.back() != 0) throw Error(ErrorCode::PostconditionViolated, "v_0 + v_inf has a v_0 component");
  std::map<DivisorId, Integer> out;
  for (std::size_t k = 0; k < sf.data.n(); ++k) out.emplace(sf.data.j_ids[k], c[k]);
  return out;
}

FanChecks check_stratum_fan(const StratumFan& sf) {
  FanChecks r;
  const Cone& c0 = sf.fan.maximal_cones.at(0);
  const Cone& cinf = sf.fan.maximal_cones.at(1);
  r.smooth = is_smooth(c0) && is_smooth(cinf) && abs(determinant(c0.generator_matrix())) == 1 &&
             abs(determinant(cinf.generator_matrix())) == 1;

  if (const std::optional<Cone> face = common_face(c0, cinf)) {
    std::set<IntVector> got(face->generators.begin(), face->generators.end());
    r.common_face = got == std::set<IntVector>(sf.v.begin(), sf.v.end()) && got.size() == sf.v.size();
  }

  r.last_coordinate = sf.vinf.back() * sf.iota.iota == sf.data.n_inf;

  try {
    r.multiplicities = ray_multiplicity(sf.v0, sf.iota) == sf.data.n_zero &&
                       ray_multiplicity(sf.vinf, sf.iota) == sf.data.n_inf;
    for (std::size_t k = 0; k < sf.v.size(); ++k)
      r.multiplicities = r.multiplicities && ray_multiplicity(sf.v[k], sf.iota) == sf.data.n_j[k];
  } catch (const Error&) {
    r.multiplicities = false;
  }

  try {
    const std::map<DivisorId, Integer> c = wall_relation(sf);
    r.wall_relation = true;
    for (std::size_t k = 0; k < sf.data.n(); ++k) r.wall_relation = r.wall_relation && c.at(sf.data.j_ids[k]) == sf.data.b[k];
  } catch (const Error&) {
    r.wall_relation = false;
  }
  return r;
}

StratumFan assemble_stratum_fan(const StratumData& data, BasisChoice basis) {
  const std::size_t n = data.n();
  if (n == 0 || data.n_j.size() != n || data.b.size() != n)
    throw Error(ErrorCode::InvalidModel, "a stratum needs n >= 1 components with one multiplicity and one b each");
  for (std::size_t k = 0; k < n; ++k)
    if (sgn(data.b[k]) <= 0)
      throw Error(ErrorCode::NonPositiveB, "b_" + std::to_string(data.j_ids[k]) + " = " + data.b[k].get_str() + " is not positive");
  Integer rhs = 0;
  for (std::size_t k = 0; k < n; ++k) rhs += data.b[k] * data.n_j[k];
  if (data.n_zero + data.n_inf != rhs)
    throw Error(ErrorCode::InvalidModel, "N_0 + N_inf = " + Integer(data.n_zero + data.n_inf).get_str() +
                                             " but sum b_j N_j = " + rhs.get_str());

  StratumFan sf;
  sf.data = data;
  IntVector heights = data.n_j;
  heights.push_back(data.n_zero);
  sf.iota.iota = gcd_all(heights);
  for (Integer& h : heights) h /= sf.iota.iota;

  const std::size_t dim = n + 1;
  sf.v.assign(n, IntVector(dim, Integer(0)));
  sf.v0.assign(dim, Integer(0));
  if (basis == BasisChoice::Hnf) {
    const IntMatrix completion = complete_last_row_to_unimodular(heights);
    for (std::size_t k = 0; k < n; ++k) sf.v[k] = completion.column(k);
    sf.v0 = completion.column(n);
  } else {
    for (const Integer& h : heights)
      if (h != 1) throw Error(ErrorCode::NotReduced, "the explicit basis needs N_i / iota = 1 on J and E_0");
    sf.v0[0] = 1;
    sf.v0[n] = 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (k + 1 < n) sf.v[k][k + 1] = 1;
      sf.v[k][n] = 1;
    }
  }
  sf.vinf.assign(dim, Integer(0));
  for (std::size_t r = 0; r < dim; ++r) {
    sf.vinf[r] = -sf.v0[r];
    for (std::size_t k = 0; k < n; ++k) sf.vinf[r] += data.b[k] * sf.v[k][r];
  }

  Cone c0{dim, sf.v}, cinf{dim, sf.v};
  c0.generators.push_back(sf.v0);
  cinf.generators.push_back(sf.vinf);
  sf.fan = Fan{dim, {std::move(c0), std::move(cinf)}};
  return sf;
}

StratumFan fan_from_curve(const StratumData& data, BasisChoice basis) {
  StratumFan sf = assemble_stratum_fan(data, basis);
  const FanChecks checks = check_stratum_fan(sf);
  if (!checks.pass()) {
    std::string failed;
    if (!checks.smooth) failed += " smoothness";
    if (!checks.common_face) failed += " common-face";
    if (!checks.last_coordinate) failed += " last-coordinate";
    if (!checks.multiplicities) failed += " multiplicities";
    if (!checks.wall_relation) failed += " wall-relation";
    throw Error(ErrorCode::PostconditionViolated, "stratum fan failed:" + failed);
  }
  return sf;
}

StratumFan fan_from_stratum(const DegenerationModel& m, FaceId tau, BasisChoice basis) {
  return fan_from_curve(stratum_data(m, tau), basis);
}

std::string_view to_string(LabeledVertex::Role r) noexcept {
  switch (r) {
    case LabeledVertex::Role::J: return "J";
    case LabeledVertex::Role::Zero: return "0";
    case LabeledVertex::Role::Inf: return "inf";
  }
  return "?";
}

StratumChart chart_for_codim1_face(const DegenerationModel& m, FaceId tau, BasisChoice basis) {
  StratumChart ch{fan_from_stratum(m, tau, basis), {}, {}};
  const StratumData& d = ch.fan.data;
  for (std::size_t k = 0; k < d.n(); ++k) {
    const LabeledVertex lv{LabeledVertex::Role::J, d.j_ids[k], slice_point(ch.fan.v[k])};
    ch.slice_zero.push_back(lv);
    ch.slice_inf.push_back(lv);
  }
  ch.slice_zero.push_back({LabeledVertex::Role::Zero, d.zero_id, slice_point(ch.fan.v0)});
  ch.slice_inf.push_back({LabeledVertex::Role::Inf, d.inf_id, slice_point(ch.fan.vinf)});
  return ch;
}

CanonicalChart canonical_chart(const DegenerationModel& m, FaceId top_face) {
  const Face& f = m.face(top_face);
  if (f.dim() != m.n)
    throw Error(ErrorCode::InvalidModel, "face " + std::to_string(top_face) + " is not a top face");
  CanonicalChart ch;
  ch.face = top_face;
  std::vector<DivisorId> ids = f.vertices;
  std::sort(ids.begin(), ids.end());
  ch.dropped = ids.back();
  ids.pop_back();
  ch.coordinates = ids;
  const std::size_t n = ids.size();
  ch.vertices.emplace(ch.dropped, RationalVector(n, Rational(0)));
  for (std::size_t k = 0; k < n; ++k) {
    RationalVector p(n, Rational(0));
    p[k] = make_rational(1, m.divisor(ids[k]).N);
    ch.vertices.emplace(ids[k], std::move(p));
  }
  return ch;
}

namespace {

// The affine map sending src[k] to dst[k] for affinely independent src.
AffineTransition affine_from_vertices(const std::vector<RationalVector>& src, const std::vector<RationalVector>& dst) {
  const std::size_t n = src.front().size();
  RatMatrix p(n, n), q(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < n; ++r) {
      p(r, k) = src[k + 1][r] - src[0][r];
      q(r, k) = dst[k + 1][r] - dst[0][r];
    }
  AffineTransition t;
  t.linear = q * inverse(p);
  t.translation = t.linear * std::span<const Rational>(src[0]);
  for (std::size_t r = 0; r < n; ++r) t.translation[r] = dst[0][r] - t.translation[r];
  return t;
}

// Chart of an endpoint face -> slice of the stratum fan, matching the face's
// vertices to rays: J by divisor id, the remaining vertex to `endpoint_ray`.
AffineTransition chart_to_slice(const DegenerationModel& m, FaceId sigma, const StratumFan& sf, DivisorId endpoint,
                                const IntVector& endpoint_ray) {
  const CanonicalChart ch = canonical_chart(m, sigma);
  const Face& f = m.face(sigma);
  std::vector<RationalVector> src, dst;
  for (DivisorId v : f.vertices) {
    src.push_back(ch.vertices.at(v));
    const auto it = std::find(sf.data.j_ids.begin(), sf.data.j_ids.end(), v);
    if (it != sf.data.j_ids.end()) {
      dst.push_back(slice_point(sf.v[static_cast<std::size_t>(it - sf.data.j_ids.begin())]));
    } else if (v == endpoint) {
      dst.push_back(slice_point(endpoint_ray));
    } else {
      throw Error(ErrorCode::LabelMismatch, "vertex " + std::to_string(v) + " of face " + std::to_string(sigma) +
                                                " is neither in the stratum nor its endpoint divisor");
    }
  }
  if (src.size() != sf.data.n() + 1)
    throw Error(ErrorCode::LabelMismatch, "face " + std::to_string(sigma) + " does not span the stratum and one endpoint");
  return affine_from_vertices(src, dst);
}

}  // namespace

AffineTransition transition_across(const DegenerationModel& m, FaceId tau) {
  const StratumCurveData* c = m.curve(tau);
  if (!c) throw Error(ErrorCode::NotLogCalabiYau, "face " + std::to_string(tau) + " has no curve data");
  const StratumFan sf = fan_from_stratum(m, tau);
  const auto [f0, finf] = c->endpoint_faces;
  const AffineTransition phi0 = chart_to_slice(m, f0, sf, c->endpoint_divisors.first, sf.v0);
  const AffineTransition phiinf = chart_to_slice(m, finf, sf, c->endpoint_divisors.second, sf.vinf);
  AffineTransition t = phiinf.inverse().after(phi0);

  const bool integral_charts =
      m.divisor(canonical_chart(m, f0).dropped).N == 1 && m.divisor(canonical_chart(m, finf).dropped).N == 1;
  if (integral_charts) {
    const bool linear_ok = is_integral(t.linear) && abs(determinant(t.linear)) == 1;
    const bool translation_ok = !m.reduced() || is_integral(t.translation);
    if (!linear_ok || !translation_ok)
      throw Error(ErrorCode::NonUnimodularTransition,
                  "transition across face " + std::to_string(tau) + " is not integral affine");
  }
  return t;
}

AffineTransition monodromy(const DegenerationModel& m, std::span<const FaceId> cycle, std::span<const FaceId> crossings) {
  const std::size_t len = cycle.size();
  if (len == 0) return AffineTransition::identity(static_cast<std::size_t>(m.n));
  if (len == 1) throw Error(ErrorCode::BrokenCycle, "a cycle needs at least two faces");
  if (!crossings.empty() && crossings.size() != len)
    throw Error(ErrorCode::BrokenCycle, "expected one crossing per step, got " + std::to_string(crossings.size()));
  for (FaceId f : cycle)
    if (m.face(f).dim() != m.n) throw Error(ErrorCode::BrokenCycle, "face " + std::to_string(f) + " is not a top face");

  auto joins = [&m](FaceId tau, FaceId a, FaceId b) {
    const StratumCurveData* c = m.curve(tau);
    if (!c) return false;
    return (c->endpoint_faces.first == a && c->endpoint_faces.second == b) ||
           (c->endpoint_faces.first == b && c->endpoint_faces.second == a);
  };

  std::set<FaceId> used;
  AffineTransition result = AffineTransition::identity(static_cast<std::size_t>(m.n));
  for (std::size_t i = 0; i < len; ++i) {
    const FaceId a = cycle[i];
    const FaceId b = cycle[(i + 1) % len];
    FaceId tau = 0;
    if (!crossings.empty()) {
      tau = crossings[i];
      if (!joins(tau, a, b))
        throw Error(ErrorCode::BrokenCycle, "face " + std::to_string(tau) + " does not join faces " + std::to_string(a) +
                                                " and " + std::to_string(b));
    } else {
      const auto& sa = m.face(a).subfaces;
      std::set<FaceId> candidates;
      for (FaceId t : m.face(b).subfaces)
        if (std::find(sa.begin(), sa.end(), t) != sa.end() && joins(t, a, b)) candidates.insert(t);
      if (candidates.empty())
        throw Error(ErrorCode::BrokenCycle, "faces " + std::to_string(a) + " and " + std::to_string(b) +
                                                " share no codimension-one face with curve data");
      const auto fresh = std::find_if(candidates.begin(), candidates.end(), [&used](FaceId t) { return !used.count(t); });
      tau = fresh != candidates.end() ? *fresh : *candidates.begin();
    }
    used.insert(tau);
    const AffineTransition t = transition_across(m, tau);
    result = (m.curve(tau)->endpoint_faces.first == a ? t : t.inverse()).after(result);
  }
  return result;
}

RationalVector quotient_representative(std::span<const Rational> r, const IntMatrix& lattice) {
  if (!lattice.square() || lattice.rows() != r.size())
    throw Error(ErrorCode::DimensionMismatch, "lattice basis must be square of the point's dimension");
  const RatMatrix l = to_rational(lattice);
  if (determinant(l) == 0) throw Error(ErrorCode::SingularLattice, "lattice basis is singular");
  RationalVector c = inverse(l) * r;
  for (Rational& x : c) x -= floor_of(x);
  return l * std::span<const Rational>(c);
}

bool check_integral_affine(const AffineTransition& t, bool reduced) {
  if (!t.linear.square() || t.translation.size() != t.linear.rows()) return false;
  if (!is_integral(t.linear) || abs(determinant(t.linear)) != 1) return false;
  return !reduced || is_integral(t.translation);
}

namespace {

bool is_new_face(const Subdivision& s, FaceId f) {
  const auto& v = s.model.face(f).vertices;
  return std::find(v.begin(), v.end(), s.new_vertex) != v.end();
}

template <class Map>
Map fold_new_vertex(const Subdivision& s, const Map& coords, const Rational& per_unit_n) {
  Map out;
  for (DivisorId i : s.old_vertices) {
    const auto it = coords.find(i);
    Rational x = it == coords.end() ? Rational(0) : it->second;
    x += s.model.divisor(i).N * per_unit_n;
    out.emplace(i, std::move(x));
  }
  return out;
}

}  // namespace

SkeletonPoint to_original(const Subdivision& s, const SkeletonPoint& p) {
  if (!is_new_face(s, p.face)) return p;
  // alpha_new spreads over the old vertices as alpha_new * N_i / sum N.
  const Rational per_unit = p.alpha.at(s.new_vertex) / Rational(s.model.divisor(s.new_vertex).N);
  return SkeletonPoint{s.subdivided_face, fold_new_vertex(s, p.alpha, per_unit)};
}

ValuedPoint to_original(const Subdivision& s, const ValuedPoint& x) {
  if (!is_new_face(s, x.face)) return x;
  Rational q_new = x.q.at(s.new_vertex);
  ValuedPoint out{s.subdivided_face, {}};
  for (DivisorId i : s.old_vertices) {
    const auto it = x.q.find(i);
    out.q.emplace(i, (it == x.q.end() ? Rational(0) : it->second) + q_new);
  }
  return out;
}

}  // namespace skelefib
