#include "skelefib/report.hpp"

#include "skelefib/model_io.hpp"

namespace skelefib {

using json = nlohmann::ordered_json;

namespace {

json integer_vector_json(const IntVector& v) {
  json out = json::array();
  for (const Integer& x : v) out.push_back(integer_json(x));
  return out;
}

json rational_vector_json(const RationalVector& v) {
  json out = json::array();
  for (const Rational& x : v) out.push_back(rational_json(x));
  return out;
}

// Integral entries as numbers, others as "p/q".
json exact_json(const Rational& x) {
  if (x.get_den() == 1) return integer_json(x.get_num());
  return rational_json(x);
}

json labeled_vertices_json(const std::vector<LabeledVertex>& vs) {
  json out = json::array();
  for (const LabeledVertex& v : vs)
    out.push_back(json{{"role", std::string(to_string(v.role))}, {"divisor", v.divisor}, {"point", rational_vector_json(v.point)}});
  return out;
}

json stratum_summary(const DegenerationModel& m, FaceId tau) {
  json s;
  s["face"] = tau;
  try {
    const StratumFan sf = fan_from_stratum(m, tau);
    s["iota"] = integer_json(sf.iota.iota);
    json b = json::object();
    for (const auto& [j, c] : wall_relation(sf)) b[std::to_string(j)] = integer_json(c);
    s["wall_relation"] = std::move(b);
    s["smooth"] = true;
  } catch (const Error& e) {
    s["error"] = e.what();
  }
  return s;
}

}  // namespace

json report_json(const DegenerationModel& m) {
  const ValidationReport v = validate_model(m);
  json r;
  r["valid"] = v.pass;
  r["reduced"] = v.reduced;
  json issues = json::array();
  for (const ModelIssue& i : v.issues) issues.push_back(json{{"check", i.check}, {"subject", i.subject}, {"message", i.message}});
  r["issues"] = std::move(issues);
  if (!v.pass) return r;

  const EssentialSkeleton sk = essential_skeleton(m);
  r["skeleton_dim"] = sk.complex.dim();
  r["skeleton_vertices"] = sk.vertices;
  json labels = json::array();
  for (DivisorId id : sk.vertices) labels.push_back(m.divisor(id).label);
  r["skeleton_labels"] = std::move(labels);
  r["min_ratio"] = rational_json(sk.min_ratio);
  r["max_degenerate"] = is_maximally_degenerate(m);
  const PseudomanifoldReport pm = pseudomanifold_check(sk.complex);
  r["pseudomanifold"] = pm.pass;
  r["pseudomanifold_issues"] = pm.issues;
  r["homology"] = homology_ranks(sk.complex);
  r["euler_characteristic"] = euler_characteristic(sk.complex);
  r["components"] = connected_components(sk.complex);
  json strata = json::array();
  for (const auto& [tau, c] : m.curves) strata.push_back(stratum_summary(m, tau));
  r["strata"] = std::move(strata);
  return r;
}

json stratum_fan_json(const StratumChart& chart) {
  const StratumFan& sf = chart.fan;
  json out;
  out["J"] = sf.data.j_ids;
  out["E0"] = sf.data.zero_id;
  out["Einf"] = sf.data.inf_id;
  out["iota"] = integer_json(sf.iota.iota);
  out["v0"] = integer_vector_json(sf.v0);
  json v = json::array();
  for (const IntVector& x : sf.v) v.push_back(integer_vector_json(x));
  out["v"] = std::move(v);
  out["vinf"] = integer_vector_json(sf.vinf);
  out["b"] = integer_vector_json(sf.data.b);
  out["det0"] = integer_json(determinant(sf.fan.maximal_cones[0].generator_matrix()));
  out["detinf"] = integer_json(determinant(sf.fan.maximal_cones[1].generator_matrix()));
  json wall = json::array();
  for (const auto& [j, c] : wall_relation(sf)) wall.push_back(integer_json(c));
  out["wall_relation"] = std::move(wall);
  out["slices"] = json{{"zero", labeled_vertices_json(chart.slice_zero)}, {"inf", labeled_vertices_json(chart.slice_inf)}};
  return out;
}

json canonical_chart_json(const CanonicalChart& chart) {
  json out;
  out["face"] = chart.face;
  out["coordinates"] = chart.coordinates;
  out["dropped"] = chart.dropped;
  json vs = json::array();
  for (const auto& [id, p] : chart.vertices) vs.push_back(json{{"divisor", id}, {"point", rational_vector_json(p)}});
  out["vertices"] = std::move(vs);
  return out;
}

json transition_json(const AffineTransition& t) {
  json a = json::array();
  for (std::size_t r = 0; r < t.linear.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < t.linear.cols(); ++c) row.push_back(exact_json(t.linear(r, c)));
    a.push_back(std::move(row));
  }
  json out;
  out["A"] = std::move(a);
  out["b"] = rational_vector_json(t.translation);
  out["det"] = exact_json(determinant(t.linear));
  return out;
}

json skeleton_point_json(const SkeletonPoint& p) {
  json alpha = json::object();
  for (const auto& [i, a] : p.alpha) alpha[std::to_string(i)] = rational_json(a);
  return json{{"face", p.face}, {"alpha", std::move(alpha)}};
}

}  // namespace skelefib
