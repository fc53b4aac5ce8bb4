#pragma once
// Builders for Delta-complex models from lists of top simplices, and the
// standard examples: Tate curves I_k, the tetrahedral K3 degeneration, a
// non-reduced cycle, and the two-simplex neighbourhood of a single stratum.

#include <functional>
#include <map>
#include <vector>

#include "skelefib/degeneration.hpp"

namespace skelefib {

/// Returns b for a codim-1 face with the given endpoint divisors, or an
/// empty map to leave the face without curve data.
using CurveRule = std::function<std::map<DivisorId, Integer>(const DegenerationModel& m, const Face& tau,
                                                             DivisorId e0, DivisorId e_inf)>;

/// All faces get ascending vertex lists. Proper faces are shared by vertex
/// set; top faces are kept as given, so two top faces may span the same
/// vertices. For each codim-1 face in exactly two top faces, c_0 is the top
/// face whose opposite vertex has the smaller id (smaller face id on ties).
DegenerationModel build_model(int n, const std::vector<DivisorRecord>& divisors,
                              const std::vector<std::vector<DivisorId>>& top_faces, const CurveRule& rule);

/// b_j = (N_0 + N_inf) / N_j, for n = 1 models. Throws InvalidModel when
/// the quotient is not an integer.
CurveRule curve_rule_from_balance();

/// Cycle of k >= 2 reduced components, every b = 2. Top face i (i = 1..k)
/// joins E_i and E_{i+1 mod k}; divisor ids are 1..k.
DegenerationModel tate_model(int k);
/// Top faces of tate_model(k) in cycle order E_1E_2, E_2E_3, ..., E_kE_1.
std::vector<FaceId> tate_cycle(const DegenerationModel& m);

/// Boundary of a tetrahedron on A, B, C, D (ids 1..4), all N = 1, nu = 0,
/// every edge with b = (1, 1).
DegenerationModel k3_tetrahedron();

/// Triangle cycle A, B, C with N = (1, 1, 2) and b = (3, 3, 1).
DegenerationModel nonreduced_cycle();

/// Data of one stratum: |J| = n components through C plus E_0, E_inf.
struct StratumSpec {
  std::vector<Integer> n_j;
  std::vector<Integer> b;
  Integer n_zero = 1;
  Integer n_inf = 1;
  bool endpoints_coincide = false;  // E_0 = E_inf (requires n_zero == n_inf)
};

/// Two n-simplices glued along tau = J; only tau carries curve data.
/// J gets ids 1..n, E_0 id n+1, E_inf id n+2 (or n+1 when they coincide).
DegenerationModel stratum_neighbourhood(const StratumSpec& spec);
/// Id of tau in stratum_neighbourhood(spec).
FaceId stratum_face(const DegenerationModel& m);

}  // namespace skelefib
