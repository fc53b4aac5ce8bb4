#pragma once
// Shared helpers for the tests: seeded generators and small independent
// oracles that avoid the library code paths they check.

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "skelefib/degeneration.hpp"
#include "skelefib/standard_models.hpp"
#include "skelefib/syz.hpp"

namespace testsupport {

using namespace skelefib;

inline std::filesystem::path models_dir() { return SKELEFIB_MODELS_DIR; }

/// Determinant by Laplace expansion along the first row.
inline Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, kk++) = m(r, k);
      }
    const Integer term = m(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

inline Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound), den(1, den_bound);
  return make_rational(num(rng), den(rng));
}

/// Random valid stratum: n in 1..max_n, N_i <= max_mult, 1 <= b_j <= max_b,
/// with N_inf = sum b_j N_j - N_0 rejection-sampled into [1, max_mult].
inline StratumData random_stratum(std::mt19937_64& rng, std::size_t max_n = 5, long max_mult = 6, long max_b = 5,
                                  bool reduced = false) {
  std::uniform_int_distribution<std::size_t> dim(1, max_n);
  std::uniform_int_distribution<long> mult(1, reduced ? 1 : max_mult), bee(1, max_b);
  for (;;) {
    StratumData d;
    const std::size_t n = dim(rng);
    Integer total = 0;
    for (std::size_t k = 0; k < n; ++k) {
      d.j_ids.push_back(static_cast<DivisorId>(k + 1));
      d.n_j.push_back(mult(rng));
      d.b.push_back(bee(rng));
      total += d.n_j.back() * d.b.back();
    }
    d.n_zero = mult(rng);
    d.n_inf = total - d.n_zero;
    if (d.n_inf < 1 || d.n_inf > (reduced ? 1 : max_mult)) continue;
    d.zero_id = static_cast<DivisorId>(n + 1);
    d.inf_id = static_cast<DivisorId>(n + 2);
    return d;
  }
}

/// Random point in the relative interior of a face: positive barycentric
/// coordinates summing to one.
inline SkeletonPoint random_skeleton_point(std::mt19937_64& rng, const DegenerationModel& m, FaceId face) {
  std::uniform_int_distribution<long> w(1, 97);
  const Face& f = m.face(face);
  std::vector<long> weights;
  long total = 0;
  for (std::size_t k = 0; k < f.vertices.size(); ++k) {
    weights.push_back(w(rng));
    total += weights.back();
  }
  SkeletonPoint p{face, {}};
  for (std::size_t k = 0; k < f.vertices.size(); ++k) p.alpha.emplace(f.vertices[k], make_rational(weights[k], total));
  return p;
}

inline std::vector<FaceId> all_face_ids(const DegenerationModel& m) {
  std::vector<FaceId> out;
  for (const auto& [id, f] : m.faces) out.push_back(id);
  return out;
}

inline Rational min_ratio(const DegenerationModel& m) {
  Rational best;
  bool first = true;
  for (const auto& [id, d] : m.divisors) {
    const Rational r = make_rational(d.nu, d.N);
    if (first || r < best) best = r;
    first = false;
  }
  return best;
}

/// Every stored stratum satisfies N_0 + N_inf = sum b_j N_j, recomputed
/// from the divisor table.
inline bool all_strata_balanced(const DegenerationModel& m) {
  for (const auto& [tau, c] : m.curves) {
    Integer lhs = m.divisors.at(c.endpoint_divisors.first).N + m.divisors.at(c.endpoint_divisors.second).N;
    Integer rhs = 0;
    for (const auto& [j, bj] : c.b) rhs += bj * m.divisors.at(j).N;
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace testsupport
