#include "skelefib/degeneration.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace skelefib {

const DivisorRecord& DegenerationModel::divisor(DivisorId id) const {
  auto it = divisors.find(id);
  if (it == divisors.end()) throw Error(ErrorCode::InvalidModel, "unknown divisor " + std::to_string(id));
  return it->second;
}

const Face& DegenerationModel::face(FaceId id) const {
  auto it = faces.find(id);
  if (it == faces.end()) throw Error(ErrorCode::UnknownFace, "unknown face " + std::to_string(id));
  return it->second;
}

const StratumCurveData* DegenerationModel::curve(FaceId tau) const {
  auto it = curves.find(tau);
  return it == curves.end() ? nullptr : &it->second;
}

std::vector<FaceId> DegenerationModel::faces_of_dim(int d) const {
  std::vector<FaceId> out;
  for (const auto& [id, f] : faces)
    if (f.dim() == d) out.push_back(id);
  return out;
}

std::vector<std::pair<FaceId, std::size_t>> DegenerationModel::cofaces(FaceId tau) const {
  std::vector<std::pair<FaceId, std::size_t>> out;
  for (const auto& [id, f] : faces) {
    if (f.dim() != n) continue;
    for (std::size_t p = 0; p < f.subfaces.size(); ++p)
      if (f.subfaces[p] == tau) out.emplace_back(id, p);
  }
  return out;
}

DivisorId DegenerationModel::opposite_vertex(FaceId sigma, FaceId tau) const {
  const Face& f = face(sigma);
  for (std::size_t p = 0; p < f.subfaces.size(); ++p)
    if (f.subfaces[p] == tau) return f.vertices[p];
  throw Error(ErrorCode::InvalidModel,
              "face " + std::to_string(tau) + " is not a subface of " + std::to_string(sigma));
}

bool DegenerationModel::reduced() const {
  return std::all_of(divisors.begin(), divisors.end(), [](const auto& kv) { return kv.second.N == 1; });
}

Integer curve_balance(const DegenerationModel& m, const StratumCurveData& c) {
  Integer sum = m.divisor(c.endpoint_divisors.first).N + m.divisor(c.endpoint_divisors.second).N;
  for (const auto& [j, bj] : c.b) sum -= bj * m.divisor(j).N;
  return sum;
}

namespace {

std::vector<DivisorId> without(const std::vector<DivisorId>& v, std::size_t p) {
  std::vector<DivisorId> out;
  out.reserve(v.size() - 1);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != p) out.push_back(v[i]);
  return out;
}

class Validator {
 public:
  explicit Validator(const DegenerationModel& m) : m_(m) {}

  ValidationReport run() {
    report_.reduced = m_.reduced();
    if (m_.n < 0) issue("model", 0, "relative dimension must be nonnegative");
    check_divisors();
    check_faces();
    if (structural_ok_) check_curves();
    report_.pass = report_.issues.empty();
    if (structural_ok_) report_.skeleton_dim = essential_skeleton(m_).complex.dim();
    return report_;
  }

 private:
  void issue(std::string check, long subject, std::string msg) {
    report_.issues.push_back({std::move(check), subject, std::move(msg)});
  }
  void structural(std::string check, long subject, std::string msg) {
    structural_ok_ = false;
    issue(std::move(check), subject, std::move(msg));
  }

  void check_divisors() {
    for (const auto& [id, d] : m_.divisors) {
      if (d.id != id) structural("divisor", id, "record id " + std::to_string(d.id) + " stored under key " + std::to_string(id));
      if (d.N < 1) structural("divisor", id, "multiplicity N = " + d.N.get_str() + " must be >= 1");
    }
  }

  void check_faces() {
    std::map<DivisorId, int> vertex_faces;
    for (const auto& [id, f] : m_.faces) {
      if (f.id != id) structural("face", id, "record id " + std::to_string(f.id) + " stored under key " + std::to_string(id));
      if (f.vertices.empty()) {
        structural("face", id, "face has no vertices");
        continue;
      }
      std::set<DivisorId> distinct(f.vertices.begin(), f.vertices.end());
      if (distinct.size() != f.vertices.size()) structural("face", id, "repeated vertex");
      for (DivisorId v : f.vertices)
        if (!m_.divisors.count(v)) structural("face", id, "vertex " + std::to_string(v) + " is not a divisor");
      if (f.dim() > m_.n) structural("face", id, "dimension " + std::to_string(f.dim()) + " exceeds n = " + std::to_string(m_.n));
      if (f.dim() == 0) {
        ++vertex_faces[f.vertices.front()];
        if (!f.subfaces.empty()) structural("face", id, "a vertex has no subfaces");
        continue;
      }
      if (f.subfaces.size() != f.vertices.size()) {
        structural("face", id, "expected " + std::to_string(f.vertices.size()) + " subfaces, found " + std::to_string(f.subfaces.size()));
        continue;
      }
      for (std::size_t p = 0; p < f.subfaces.size(); ++p) {
        auto it = m_.faces.find(f.subfaces[p]);
        if (it == m_.faces.end()) {
          structural("face", id, "subface " + std::to_string(f.subfaces[p]) + " does not exist");
          continue;
        }
        if (it->second.vertices != without(f.vertices, p))
          structural("face", id, "subface " + std::to_string(f.subfaces[p]) + " at position " + std::to_string(p) +
                                     " does not match the face with that vertex removed");
      }
    }
    for (const auto& [id, d] : m_.divisors) {
      const int count = vertex_faces.count(id) ? vertex_faces.at(id) : 0;
      if (count != 1) structural("divisor", id, "expected exactly one vertex face, found " + std::to_string(count));
    }
  }

  void check_curves() {
    for (const auto& [key, c] : m_.curves) {
      if (c.face != key) {
        issue("curve", key, "record for face " + std::to_string(c.face) + " stored under key " + std::to_string(key));
        continue;
      }
      auto fit = m_.faces.find(c.face);
      if (fit == m_.faces.end()) {
        issue("curve", key, "face does not exist");
        continue;
      }
      const Face& tau = fit->second;
      if (tau.dim() != m_.n - 1) {
        issue("curve", key, "curve data on a face of dimension " + std::to_string(tau.dim()) + ", expected " + std::to_string(m_.n - 1));
        continue;
      }
      std::set<DivisorId> keys;
      for (const auto& kv : c.b) keys.insert(kv.first);
      if (keys != std::set<DivisorId>(tau.vertices.begin(), tau.vertices.end())) {
        issue("curve", key, "b must have exactly one entry per vertex of the face");
        continue;
      }
      const auto cof = m_.cofaces(c.face);
      if (cof.size() != 2) {
        issue("adjacency", key, "face lies in " + std::to_string(cof.size()) + " top faces, expected exactly 2");
        continue;
      }
      std::multiset<FaceId> actual{cof[0].first, cof[1].first};
      std::multiset<FaceId> declared{c.endpoint_faces.first, c.endpoint_faces.second};
      if (actual != declared) {
        issue("adjacency", key, "endpoint faces do not match the top faces containing it");
        continue;
      }
      const DivisorId e0 = m_.opposite_vertex(c.endpoint_faces.first, c.face);
      const DivisorId einf = m_.opposite_vertex(c.endpoint_faces.second, c.face);
      if (e0 != c.endpoint_divisors.first || einf != c.endpoint_divisors.second) {
        issue("curve", key, "endpoint divisors should be (" + std::to_string(e0) + ", " + std::to_string(einf) + ")");
        continue;
      }
      const Integer lhs = m_.divisor(e0).N + m_.divisor(einf).N;
      Integer rhs = 0;
      for (const auto& [j, bj] : c.b) rhs += bj * m_.divisor(j).N;
      if (lhs != rhs)
        issue("curve", key, "N_0 + N_inf = " + lhs.get_str() + " but sum b_j N_j = " + rhs.get_str());
    }
  }

  const DegenerationModel& m_;
  ValidationReport report_;
  bool structural_ok_ = true;
};

}  // namespace

ValidationReport validate_model(const DegenerationModel& m) { return Validator(m).run(); }

void require_valid(const DegenerationModel& m) {
  const ValidationReport r = validate_model(m);
  if (r.pass) return;
  const ModelIssue& first = r.issues.front();
  throw Error(ErrorCode::InvalidModel, first.check + " " + std::to_string(first.subject) + ": " + first.message);
}

int SubComplex::dim() const {
  int d = -1;
  for (const auto& [id, f] : faces) d = std::max(d, f.dim());
  return d;
}

SubComplex whole_complex(const DegenerationModel& m) { return SubComplex{m.faces}; }

EssentialSkeleton essential_skeleton(const DegenerationModel& m) {
  EssentialSkeleton sk;
  bool first = true;
  for (const auto& [id, d] : m.divisors) {
    const Rational ratio = make_rational(d.nu, d.N);
    if (first || ratio < sk.min_ratio) {
      sk.min_ratio = ratio;
      first = false;
    }
  }
  std::set<DivisorId> keep;
  for (const auto& [id, d] : m.divisors)
    if (make_rational(d.nu, d.N) == sk.min_ratio) keep.insert(id);
  sk.vertices.assign(keep.begin(), keep.end());
  for (const auto& [id, f] : m.faces)
    if (std::all_of(f.vertices.begin(), f.vertices.end(), [&keep](DivisorId v) { return keep.count(v) > 0; }))
      sk.complex.faces.emplace(id, f);
  return sk;
}

bool is_maximally_degenerate(const DegenerationModel& m) {
  return !m.divisors.empty() && essential_skeleton(m).complex.dim() == m.n;
}

std::string export_dot(const DegenerationModel& m) {
  const EssentialSkeleton sk = essential_skeleton(m);
  const std::set<DivisorId> in_skeleton(sk.vertices.begin(), sk.vertices.end());
  std::ostringstream os;
  os << "graph dual_complex {\n";
  os << "  node [shape=circle, fontsize=10];\n";
  for (const auto& [id, d] : m.divisors) {
    // width grows by 0.1 per unit of multiplicity, capped at N = 20
    const long capped = d.N > 20 ? 20 : d.N.get_si();
    const long tenths = 3 + capped;
    const std::string label = d.label.empty() ? std::to_string(id) : d.label;
    os << "  d" << id << " [label=\"" << label << "\\nN=" << d.N << "\", width=" << tenths / 10 << '.' << tenths % 10
       << ", fixedsize=true, style=filled, fillcolor=\"" << (in_skeleton.count(id) ? "lightblue" : "white") << "\"];\n";
  }
  for (const auto& [id, f] : m.faces) {
    if (f.dim() != 1) continue;
    os << "  d" << f.vertices[0] << " -- d" << f.vertices[1] << " [label=\"" << id << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace skelefib
