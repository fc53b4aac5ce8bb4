#include "skelefib/standard_models.hpp"

#include <algorithm>
#include <set>

namespace skelefib {

DegenerationModel build_model(int n, const std::vector<DivisorRecord>& divisors,
                              const std::vector<std::vector<DivisorId>>& top_faces, const CurveRule& rule) {
  DegenerationModel m;
  m.n = n;
  for (const DivisorRecord& d : divisors) m.divisors.emplace(d.id, d);

  // proper faces keyed by sorted vertex set, numbered by dimension then
  // lexicographically
  std::set<std::vector<DivisorId>> proper;
  for (const auto& top : top_faces) {
    std::vector<DivisorId> v = top;
    std::sort(v.begin(), v.end());
    const std::size_t k = v.size();
    for (unsigned long mask = 1; mask + 1 < (1UL << k); ++mask) {
      std::vector<DivisorId> s;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1UL << i)) s.push_back(v[i]);
      proper.insert(std::move(s));
    }
  }
  std::vector<std::vector<DivisorId>> ordered(proper.begin(), proper.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });

  std::map<std::vector<DivisorId>, FaceId> id_of;
  FaceId next = 1;
  auto add_face = [&m](FaceId id, const std::vector<DivisorId>& v, const std::map<std::vector<DivisorId>, FaceId>& ids) {
    Face f;
    f.id = id;
    f.vertices = v;
    if (v.size() > 1)
      for (std::size_t p = 0; p < v.size(); ++p) {
        std::vector<DivisorId> sub = v;
        sub.erase(sub.begin() + static_cast<long>(p));
        f.subfaces.push_back(ids.at(sub));
      }
    m.faces.emplace(id, std::move(f));
  };
  for (const auto& v : ordered) {
    id_of[v] = next;
    add_face(next++, v, id_of);
  }
  for (const auto& top : top_faces) {
    std::vector<DivisorId> v = top;
    std::sort(v.begin(), v.end());
    add_face(next++, v, id_of);
  }

  for (FaceId tau : m.faces_of_dim(n - 1)) {
    const auto cof = m.cofaces(tau);
    if (cof.size() != 2) continue;
    auto [f0, p0] = cof[0];
    auto [f1, p1] = cof[1];
    DivisorId e0 = m.face(f0).vertices[p0];
    DivisorId e1 = m.face(f1).vertices[p1];
    if (e1 < e0) {
      std::swap(f0, f1);
      std::swap(e0, e1);
    }
    std::map<DivisorId, Integer> b = rule(m, m.face(tau), e0, e1);
    if (b.empty()) continue;
    m.curves.emplace(tau, StratumCurveData{tau, std::move(b), {f0, f1}, {e0, e1}});
  }
  return m;
}

CurveRule curve_rule_from_balance() {
  return [](const DegenerationModel& m, const Face& tau, DivisorId e0, DivisorId einf) {
    if (tau.vertices.size() != 1) throw Error(ErrorCode::InvalidModel, "balance rule needs n = 1");
    const DivisorId j = tau.vertices.front();
    const Integer total = m.divisor(e0).N + m.divisor(einf).N;
    if (total % m.divisor(j).N != 0)
      throw Error(ErrorCode::InvalidModel, "N_j does not divide N_0 + N_inf at divisor " + std::to_string(j));
    return std::map<DivisorId, Integer>{{j, total / m.divisor(j).N}};
  };
}

DegenerationModel tate_model(int k) {
  if (k < 2) throw Error(ErrorCode::InvalidModel, "I_k needs k >= 2");
  std::vector<DivisorRecord> divisors;
  std::vector<std::vector<DivisorId>> tops;
  for (int i = 1; i <= k; ++i) {
    divisors.push_back({i, 1, 0, "E" + std::to_string(i)});
    tops.push_back({i, i % k + 1});
  }
  DegenerationModel m = build_model(1, divisors, tops, [](const DegenerationModel&, const Face& tau, DivisorId, DivisorId) {
    return std::map<DivisorId, Integer>{{tau.vertices.front(), 2}};
  });
  return m;
}

std::vector<FaceId> tate_cycle(const DegenerationModel& m) {
  // top faces were added last, in cycle order
  return m.top_faces();
}

DegenerationModel k3_tetrahedron() {
  const std::vector<DivisorRecord> divisors = {{1, 1, 0, "A"}, {2, 1, 0, "B"}, {3, 1, 0, "C"}, {4, 1, 0, "D"}};
  const std::vector<std::vector<DivisorId>> tops = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
  return build_model(2, divisors, tops, [](const DegenerationModel&, const Face& tau, DivisorId, DivisorId) {
    std::map<DivisorId, Integer> b;
    for (DivisorId v : tau.vertices) b[v] = 1;
    return b;
  });
}

DegenerationModel nonreduced_cycle() {
  const std::vector<DivisorRecord> divisors = {{1, 1, 0, "A"}, {2, 1, 0, "B"}, {3, 2, 0, "C"}};
  const std::vector<std::vector<DivisorId>> tops = {{1, 2}, {2, 3}, {1, 3}};
  return build_model(1, divisors, tops, curve_rule_from_balance());
}

DegenerationModel stratum_neighbourhood(const StratumSpec& spec) {
  const std::size_t n = spec.n_j.size();
  if (n == 0 || spec.b.size() != n) throw Error(ErrorCode::InvalidModel, "stratum needs |J| = n >= 1 and one b per component");
  if (spec.endpoints_coincide && spec.n_zero != spec.n_inf)
    throw Error(ErrorCode::InvalidModel, "coinciding endpoints need equal multiplicities");
  std::vector<DivisorRecord> divisors;
  std::vector<DivisorId> tau;
  for (std::size_t j = 0; j < n; ++j) {
    const DivisorId id = static_cast<DivisorId>(j + 1);
    divisors.push_back({id, spec.n_j[j], 0, "E" + std::to_string(id)});
    tau.push_back(id);
  }
  const DivisorId zero = static_cast<DivisorId>(n + 1);
  const DivisorId inf = spec.endpoints_coincide ? zero : static_cast<DivisorId>(n + 2);
  divisors.push_back({zero, spec.n_zero, 0, "E0"});
  if (!spec.endpoints_coincide) divisors.push_back({inf, spec.n_inf, 0, "Einf"});

  std::vector<DivisorId> top0 = tau, top1 = tau;
  top0.push_back(zero);
  top1.push_back(inf);
  const std::vector<DivisorId> tau_sorted = tau;
  return build_model(static_cast<int>(n), divisors, {top0, top1},
                     [&spec, tau_sorted](const DegenerationModel&, const Face& f, DivisorId, DivisorId) {
                       std::map<DivisorId, Integer> b;
                       if (f.vertices != tau_sorted) return b;
                       for (std::size_t j = 0; j < spec.b.size(); ++j) b[static_cast<DivisorId>(j + 1)] = spec.b[j];
                       return b;
                     });
}

FaceId stratum_face(const DegenerationModel& m) {
  if (m.curves.size() != 1) throw Error(ErrorCode::InvalidModel, "expected a single stratum");
  return m.curves.begin()->first;
}

}  // namespace skelefib
