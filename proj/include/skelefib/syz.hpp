#pragma once
// Retraction onto the skeleton, tropicalization, the toric fan of a
// one-dimensional stratum, and the integral affine structure it induces:
// charts, transitions across codimension-one faces, and monodromy.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skelefib/degeneration.hpp"
#include "skelefib/fan.hpp"

namespace skelefib {

/// Point with normalized valuations q_i of local equations of the
/// components E_i (i in the face) through its reduction; val(t) = 1.
struct ValuedPoint {
  FaceId face = 0;
  std::map<DivisorId, Rational> q;
};

/// Barycentric point of a face of the dual complex.
struct SkeletonPoint {
  FaceId face = 0;
  std::map<DivisorId, Rational> alpha;
  bool operator==(const SkeletonPoint&) const = default;
};

struct TorusPoint {
  RationalVector r;
};

/// x -> linear * x + translation.
struct AffineTransition {
  RatMatrix linear;
  RationalVector translation;

  static AffineTransition identity(std::size_t n);
  std::size_t dim() const noexcept { return linear.rows(); }
  RationalVector apply(std::span<const Rational> x) const;
  /// (*this) after `first`.
  AffineTransition after(const AffineTransition& first) const;
  AffineTransition inverse() const;
  bool operator==(const AffineTransition&) const = default;
};

/// alpha_i = N_i q_i. Throws NonPositiveValuation, NormalizationError, and
/// InvalidModel when q is not keyed by the face's vertices.
SkeletonPoint retract(const DegenerationModel& m, const ValuedPoint& x);
/// q_i = alpha_i / N_i, the valued point that retracts onto p.
ValuedPoint as_valued_point(const DegenerationModel& m, const SkeletonPoint& p);

/// Valuation of the monomial with exponent vector mchar at x.
Rational trop_character(const TorusPoint& x, std::span<const Integer> mchar);
/// The Gauss point of the polydisc over r (its valuation vector is r).
TorusPoint gauss_section(const RationalVector& r);

/// One stratum with its components, independent of any model.
/// J is listed by ascending divisor id.
struct StratumData {
  std::vector<DivisorId> j_ids;
  std::vector<Integer> n_j;
  std::vector<Integer> b;
  DivisorId zero_id = 0;
  DivisorId inf_id = 0;
  Integer n_zero = 1;
  Integer n_inf = 1;

  std::size_t n() const noexcept { return j_ids.size(); }
};

/// Throws NotLogCalabiYau when tau has no curve data.
StratumData stratum_data(const DegenerationModel& m, FaceId tau);

enum class BasisChoice {
  Hnf,       // unimodular completion of (N_j/iota, N_0/iota) by HNF
  Explicit,  // u_0 = e_1, u_j = e_{j+1}, last u_j = 0; reduced strata only
};

/// The two-cone fan of a stratum. Cone 0 is sigma_0 with generators
/// (v_j..., v_0), cone 1 is sigma_inf with generators (v_j..., v_inf).
struct StratumFan {
  Fan fan;
  IotaWeight iota;
  StratumData data;
  std::vector<IntVector> v;  // v[k] belongs to data.j_ids[k]
  IntVector v0;
  IntVector vinf;
};

/// Outcome of each postcondition of the stratum fan construction.
struct FanChecks {
  bool smooth = false;
  bool common_face = false;
  bool last_coordinate = false;
  bool multiplicities = false;
  bool wall_relation = false;
  bool pass() const { return smooth && common_face && last_coordinate && multiplicities && wall_relation; }
};

FanChecks check_stratum_fan(const StratumFan& sf);

/// The fan before its postconditions are checked. Throws NonPositiveB,
/// InvalidModel and NotReduced as fan_from_curve does.
StratumFan assemble_stratum_fan(const StratumData& data, BasisChoice basis = BasisChoice::Hnf);

/// Throws NonPositiveB, InvalidModel when N_0 + N_inf = sum b_j N_j
/// fails, NotReduced for an explicit basis on non-reduced data, and
/// PostconditionViolated when a check of check_stratum_fan fails.
StratumFan fan_from_curve(const StratumData& data, BasisChoice basis = BasisChoice::Hnf);
StratumFan fan_from_stratum(const DegenerationModel& m, FaceId tau, BasisChoice basis = BasisChoice::Hnf);

/// c_j with v_0 + v_inf = sum_j c_j v_j, keyed by divisor id.
std::map<DivisorId, Integer> wall_relation(const StratumFan& sf);

/// Slice vertex of one ray, tagged by the role of its divisor.
struct LabeledVertex {
  enum class Role { J, Zero, Inf };
  Role role = Role::J;
  DivisorId divisor = 0;
  RationalVector point;
};
std::string_view to_string(LabeledVertex::Role r) noexcept;

struct StratumChart {
  StratumFan fan;
  std::vector<LabeledVertex> slice_zero;  // generator order of sigma_0
  std::vector<LabeledVertex> slice_inf;   // generator order of sigma_inf
};

StratumChart chart_for_codim1_face(const DegenerationModel& m, FaceId tau, BasisChoice basis = BasisChoice::Hnf);

/// Chart of a top face: the simplex sum_i N_i w_i = 1, w >= 0, with the
/// coordinate of the highest-id vertex dropped.
struct CanonicalChart {
  FaceId face = 0;
  std::vector<DivisorId> coordinates;  // kept divisors, ascending
  DivisorId dropped = 0;
  std::map<DivisorId, RationalVector> vertices;
};

CanonicalChart canonical_chart(const DegenerationModel& m, FaceId top_face);

/// Affine map from the chart of the c_0 endpoint face to the chart of the
/// c_inf endpoint face, through the slice of the stratum fan. Throws
/// LabelMismatch and, on integral charts, NonUnimodularTransition.
AffineTransition transition_across(const DegenerationModel& m, FaceId tau);

/// Composition of transitions around a closed chain of top faces, in the
/// chart of cycle[0]. crossings[i], if given, is the codim-1 face crossed
/// from cycle[i] to cycle[i+1 mod len]; otherwise the lowest-id shared face
/// with curve data not yet crossed is used. Throws BrokenCycle.
AffineTransition monodromy(const DegenerationModel& m, std::span<const FaceId> cycle,
                           std::span<const FaceId> crossings = {});

/// Representative of r modulo L*Z^n whose L-coordinates lie in [0, 1).
/// Throws SingularLattice.
RationalVector quotient_representative(std::span<const Rational> r, const IntMatrix& lattice);

/// Integer linear part with |det| = 1, and integral translation if reduced.
bool check_integral_affine(const AffineTransition& t, bool reduced);

/// Point of the original face carried by a point of a subdivided model:
/// the new vertex sits at barycentric coordinates (N_i / sum N)_i.
SkeletonPoint to_original(const Subdivision& s, const SkeletonPoint& p);
/// Valuations on the original components of a point of the subdivided
/// model: q_i = q'_i + q'_new for i in the subdivided face.
ValuedPoint to_original(const Subdivision& s, const ValuedPoint& x);

}  // namespace skelefib
