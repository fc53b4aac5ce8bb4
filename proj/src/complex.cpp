#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "skelefib/degeneration.hpp"
#include "skelefib/kernels.hpp"

namespace skelefib {

PseudomanifoldReport pseudomanifold_check(const SubComplex& k) {
  PseudomanifoldReport r;
  r.dim = k.dim();
  if (r.dim < 0) {
    r.issues.push_back("empty complex");
    return r;
  }
  const int d = r.dim;

  std::vector<FaceId> top;
  for (const auto& [id, f] : k.faces)
    if (f.dim() == d) top.push_back(id);

  // purity: everything lies below some top face
  std::set<FaceId> covered;
  std::queue<FaceId> pending;
  for (FaceId id : top) pending.push(id);
  while (!pending.empty()) {
    const FaceId id = pending.front();
    pending.pop();
    if (!covered.insert(id).second) continue;
    auto it = k.faces.find(id);
    if (it == k.faces.end()) continue;
    for (FaceId s : it->second.subfaces) pending.push(s);
  }
  r.pure = true;
  for (const auto& [id, f] : k.faces)
    if (!covered.count(id)) {
      r.pure = false;
      r.issues.push_back("face " + std::to_string(id) + " is not contained in a " + std::to_string(d) + "-face");
    }

  std::map<FaceId, std::vector<FaceId>> incident;  // (d-1)-face -> top faces
  for (FaceId id : top)
    for (FaceId s : k.faces.at(id).subfaces) incident[s].push_back(id);
  r.two_sided = true;
  for (const auto& [id, f] : k.faces) {
    if (f.dim() != d - 1) continue;
    const std::size_t count = incident.count(id) ? incident.at(id).size() : 0;
    if (count != 2) {
      r.two_sided = false;
      r.issues.push_back("face " + std::to_string(id) + " lies in " + std::to_string(count) + " top faces");
    }
  }

  if (d == 0) {
    r.strongly_connected = top.size() == 1;
  } else {
    std::map<FaceId, std::vector<FaceId>> adjacent;
    for (const auto& [ridge, tops] : incident)
      for (FaceId a : tops)
        for (FaceId b : tops)
          if (a != b) adjacent[a].push_back(b);
    std::set<FaceId> seen;
    std::queue<FaceId> q;
    q.push(top.front());
    while (!q.empty()) {
      const FaceId id = q.front();
      q.pop();
      if (!seen.insert(id).second) continue;
      for (FaceId nb : adjacent[id]) q.push(nb);
    }
    r.strongly_connected = seen.size() == top.size();
  }
  if (!r.strongly_connected) r.issues.push_back("top faces are not strongly connected");
  r.pass = r.pure && r.two_sided && r.strongly_connected;
  return r;
}

IntMatrix boundary_matrix(const SubComplex& k, int degree) {
  std::vector<FaceId> rows, cols;
  for (const auto& [id, f] : k.faces) {
    if (f.dim() == degree - 1) rows.push_back(id);
    if (f.dim() == degree) cols.push_back(id);
  }
  std::map<FaceId, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
  IntMatrix m(rows.size(), cols.size());
  if (degree <= 0) return m;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Face& f = k.faces.at(cols[c]);
    for (std::size_t p = 0; p < f.subfaces.size(); ++p) {
      auto it = row_index.find(f.subfaces[p]);
      if (it == row_index.end()) throw Error(ErrorCode::InvalidModel, "subcomplex is not closed under subfaces");
      m(it->second, c) += (p % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

std::vector<std::size_t> homology_ranks(const SubComplex& k) {
  const int d = k.dim();
  if (d < 0) return {};
  std::vector<std::size_t> chains(d + 1, 0), ranks(d + 2, 0);
  for (const auto& [id, f] : k.faces) ++chains[f.dim()];
  for (int deg = 1; deg <= d; ++deg) {
    const IntMatrix b = boundary_matrix(k, deg);
    ranks[deg] = b.rows() == 0 || b.cols() == 0 ? 0 : kernels::exact_rank_auto(b);
  }
  std::vector<std::size_t> betti(d + 1);
  for (int deg = 0; deg <= d; ++deg) betti[deg] = chains[deg] - ranks[deg] - ranks[deg + 1];
  return betti;
}

long euler_characteristic(const SubComplex& k) {
  long chi = 0;
  for (const auto& [id, f] : k.faces) chi += (f.dim() % 2 == 0) ? 1 : -1;
  return chi;
}

std::size_t connected_components(const SubComplex& k) {
  std::map<DivisorId, DivisorId> parent;
  for (const auto& [id, f] : k.faces)
    if (f.dim() == 0) parent[f.vertices.front()] = f.vertices.front();
  auto find = [&parent](DivisorId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [id, f] : k.faces) {
    if (f.dim() < 1) continue;
    const DivisorId root = find(f.vertices.front());
    for (DivisorId v : f.vertices) parent[find(v)] = root;
  }
  std::set<DivisorId> roots;
  for (const auto& [v, p] : parent) roots.insert(find(v));
  return roots.size();
}

bool same_vertex_sets(const SubComplex& a, const SubComplex& b) {
  auto signature = [](const SubComplex& k) {
    std::multiset<std::vector<DivisorId>> s;
    for (const auto& [id, f] : k.faces) {
      std::vector<DivisorId> v = f.vertices;
      std::sort(v.begin(), v.end());
      s.insert(std::move(v));
    }
    return s;
  };
  return signature(a) == signature(b);
}

}  // namespace skelefib
