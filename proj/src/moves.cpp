#include <algorithm>
#include <map>

#include "skelefib/degeneration.hpp"

namespace skelefib {

namespace {

using Mask = unsigned long;

std::size_t popcount(Mask m) { return static_cast<std::size_t>(__builtin_popcountl(m)); }

// Face of sigma spanned by the vertex positions in `keep`, found by walking
// down the subface links.
FaceId old_face_of(const DegenerationModel& m, FaceId sigma, Mask keep, std::size_t n_vertices) {
  FaceId current = sigma;
  Mask present = (Mask{1} << n_vertices) - 1;
  for (std::size_t q = 0; q < n_vertices; ++q) {
    if (keep & (Mask{1} << q)) continue;
    // index of position q among the positions still present
    const std::size_t idx = popcount(present & ((Mask{1} << q) - 1));
    current = m.face(current).subfaces.at(idx);
    present &= ~(Mask{1} << q);
  }
  return current;
}

FaceId vertex_face(const DegenerationModel& m, DivisorId v) {
  for (const auto& [id, f] : m.faces)
    if (f.dim() == 0 && f.vertices.front() == v) return id;
  throw Error(ErrorCode::InvalidModel, "divisor " + std::to_string(v) + " has no vertex face");
}

void assert_balanced(const DegenerationModel& m, const StratumCurveData& c) {
  const Integer bal = curve_balance(m, c);
  if (bal != 0)
    throw Error(ErrorCode::PostconditionViolated,
                "stratum " + std::to_string(c.face) + " violates N_0 + N_inf = sum b_j N_j by " + bal.get_str());
}

}  // namespace

Subdivision star_subdivide(const DegenerationModel& m, FaceId top_face) {
  const Face& sigma = m.face(top_face);
  if (sigma.dim() != m.n || m.n < 1)
    throw Error(ErrorCode::InvalidModel, "face " + std::to_string(top_face) + " is not a top face of a model with n >= 1");
  for (FaceId tau : sigma.subfaces)
    if (!m.curve(tau)) throw Error(ErrorCode::MissingCurveData, "codimension-one face " + std::to_string(tau) + " has no curve data");

  Subdivision out;
  out.model = m;
  out.subdivided_face = top_face;
  out.old_vertices = sigma.vertices;
  DegenerationModel& r = out.model;
  const std::size_t k = sigma.vertices.size();  // n + 1

  const DivisorId v_new = m.divisors.empty() ? 1 : m.divisors.rbegin()->first + 1;
  out.new_vertex = v_new;
  DivisorRecord rec{v_new, 0, 0, "x" + std::to_string(top_face)};
  for (DivisorId v : sigma.vertices) {
    rec.N += m.divisor(v).N;
    rec.nu += m.divisor(v).nu;
  }
  r.divisors.emplace(v_new, rec);

  // New faces: S + {v_new} for every proper subset S of sigma's vertices,
  // v_new always last so subface lists stay consistent.
  FaceId next_id = m.faces.empty() ? 1 : m.faces.rbegin()->first + 1;
  std::vector<Mask> masks;
  for (Mask s = 0; s < (Mask{1} << k) - 1; ++s) masks.push_back(s);
  std::stable_sort(masks.begin(), masks.end(), [](Mask a, Mask b) { return popcount(a) < popcount(b); });
  std::map<Mask, FaceId> new_face;
  for (Mask s : masks) new_face[s] = next_id++;
  for (Mask s : masks) {
    Face f;
    f.id = new_face[s];
    std::vector<std::size_t> positions;
    for (std::size_t q = 0; q < k; ++q)
      if (s & (Mask{1} << q)) positions.push_back(q);
    for (std::size_t q : positions) f.vertices.push_back(sigma.vertices[q]);
    f.vertices.push_back(v_new);
    if (!positions.empty()) {
      for (std::size_t q : positions) f.subfaces.push_back(new_face[s & ~(Mask{1} << q)]);
      f.subfaces.push_back(old_face_of(m, top_face, s, k));
    }
    r.faces.emplace(f.id, std::move(f));
  }
  r.faces.erase(top_face);

  const Mask all = (Mask{1} << k) - 1;
  out.new_top_faces.resize(k);
  for (std::size_t p = 0; p < k; ++p) out.new_top_faces[p] = new_face[all & ~(Mask{1} << p)];

  // Old strata on the boundary of sigma: the endpoint at sigma moves to the
  // new top face and every b_j grows by one.
  for (std::size_t p = 0; p < k; ++p) {
    StratumCurveData& c = r.curves.at(sigma.subfaces[p]);
    if (c.endpoint_faces.first == top_face) {
      c.endpoint_faces.first = out.new_top_faces[p];
      c.endpoint_divisors.first = v_new;
    } else {
      c.endpoint_faces.second = out.new_top_faces[p];
      c.endpoint_divisors.second = v_new;
    }
    for (auto& [j, bj] : c.b) bj += 1;
    assert_balanced(r, c);
  }

  // New interior strata through v_new: b = +1 on v_new, -1 on the others.
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = p + 1; q < k; ++q) {
      const Mask s = all & ~(Mask{1} << p) & ~(Mask{1} << q);
      StratumCurveData c;
      c.face = new_face[s];
      for (std::size_t i = 0; i < k; ++i)
        if (s & (Mask{1} << i)) c.b[sigma.vertices[i]] = -1;
      c.b[v_new] = 1;
      c.endpoint_faces = {out.new_top_faces[q], out.new_top_faces[p]};
      c.endpoint_divisors = {sigma.vertices[p], sigma.vertices[q]};
      assert_balanced(r, c);
      r.curves.emplace(c.face, std::move(c));
    }
  return out;
}

DegenerationModel edge_flip(const DegenerationModel& m, FaceId edge_id,
                            const std::optional<std::map<DivisorId, Integer>>& new_b) {
  if (m.n != 2) throw Error(ErrorCode::NotASurfaceModel, "edge flips need n = 2");
  const Face& edge = m.face(edge_id);
  if (edge.dim() != 1) throw Error(ErrorCode::InvalidModel, "face " + std::to_string(edge_id) + " is not an edge");
  const auto cof = m.cofaces(edge_id);
  if (cof.size() != 2) throw Error(ErrorCode::InvalidModel, "edge is not interior to exactly two triangles");

  const DivisorId a = edge.vertices[0];
  const DivisorId b = edge.vertices[1];
  const Face t1 = m.face(cof[0].first);
  const Face t2 = m.face(cof[1].first);
  const DivisorId c = t1.vertices[cof[0].second];
  const DivisorId d = t2.vertices[cof[1].second];
  if (c == d) throw Error(ErrorCode::DegenerateQuad, "both triangles have opposite vertex " + std::to_string(c));

  auto subface_omitting = [](const Face& t, DivisorId v) {
    const auto it = std::find(t.vertices.begin(), t.vertices.end(), v);
    return t.subfaces[static_cast<std::size_t>(it - t.vertices.begin())];
  };
  const FaceId e_ac = subface_omitting(t1, b);
  const FaceId e_bc = subface_omitting(t1, a);
  const FaceId e_ad = subface_omitting(t2, b);
  const FaceId e_bd = subface_omitting(t2, a);

  DegenerationModel r = m;
  auto ascending = [&r](FaceId e) {
    const auto& v = r.face(e).vertices;
    return std::is_sorted(v.begin(), v.end());
  };
  for (FaceId e : {e_ac, e_bc, e_ad, e_bd})
    if (!ascending(e)) throw Error(ErrorCode::InvalidModel, "edge flips need ascending vertex order on the quadrilateral");

  // Rebuild a triangle from its vertex set, in ascending order, given the
  // edge opposite each vertex.
  auto make_triangle = [](FaceId id, std::map<DivisorId, FaceId> opposite_edge) {
    Face t;
    t.id = id;
    for (const auto& [v, e] : opposite_edge) {
      t.vertices.push_back(v);
      t.subfaces.push_back(e);
    }
    return t;
  };
  Face& flipped = r.faces.at(edge_id);
  flipped.vertices = {std::min(c, d), std::max(c, d)};
  flipped.subfaces = {vertex_face(r, flipped.vertices[1]), vertex_face(r, flipped.vertices[0])};
  const Face acd = make_triangle(t1.id, {{a, edge_id}, {c, e_ad}, {d, e_ac}});
  const Face bcd = make_triangle(t2.id, {{b, edge_id}, {c, e_bd}, {d, e_bc}});
  r.faces[acd.id] = acd;
  r.faces[bcd.id] = bcd;

  r.curves.erase(edge_id);
  if (new_b) {
    StratumCurveData cd;
    cd.face = edge_id;
    cd.b = *new_b;
    cd.endpoint_faces = {acd.id, bcd.id};
    cd.endpoint_divisors = {a, b};
    if (cd.b.size() != 2 || !cd.b.count(c) || !cd.b.count(d))
      throw Error(ErrorCode::InvalidCurveData, "b for the new edge must be keyed by its two vertices");
    const Integer bal = curve_balance(r, cd);
    if (bal != 0) throw Error(ErrorCode::InvalidCurveData, "new edge violates N_0 + N_inf = sum b_j N_j by " + bal.get_str());
    r.curves.emplace(edge_id, std::move(cd));
  }

  // Boundary strata keep their b but see a new triangle and opposite vertex.
  auto repoint = [&r](FaceId e, FaceId old_top, FaceId new_top, DivisorId new_opposite) {
    auto it = r.curves.find(e);
    if (it == r.curves.end()) return;
    StratumCurveData& cd = it->second;
    if (cd.endpoint_faces.first == old_top) {
      cd.endpoint_faces.first = new_top;
      cd.endpoint_divisors.first = new_opposite;
    } else {
      cd.endpoint_faces.second = new_top;
      cd.endpoint_divisors.second = new_opposite;
    }
    if (curve_balance(r, cd) != 0) r.curves.erase(it);
  };
  repoint(e_ac, t1.id, acd.id, d);
  repoint(e_bc, t1.id, bcd.id, d);
  repoint(e_ad, t2.id, acd.id, c);
  repoint(e_bd, t2.id, bcd.id, c);
  return r;
}

}  // namespace skelefib
