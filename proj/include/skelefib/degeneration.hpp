#pragma once
// Combinatorial data of a degeneration: prime components of the special
// fiber with multiplicities N and weights nu, the dual Delta-complex, and the
// intersection data b_j = -(C.E_j) of each one-dimensional stratum C.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skelefib/lattice.hpp"

namespace skelefib {

using DivisorId = long;
using FaceId = long;

struct DivisorRecord {
  DivisorId id = 0;
  Integer N = 1;   // multiplicity in the special fiber
  Integer nu = 0;  // coefficient in div(omega)
  std::string label;
  bool operator==(const DivisorRecord&) const = default;
};

struct Face {
  FaceId id = 0;
  std::vector<DivisorId> vertices;
  /// subfaces[p] is the face obtained by omitting vertices[p]; empty for
  /// vertices (dim 0).
  std::vector<FaceId> subfaces;

  int dim() const noexcept { return static_cast<int>(vertices.size()) - 1; }
  bool operator==(const Face&) const = default;
};

/// Data attached to a codimension-one face tau (a one-dimensional stratum C).
/// endpoint_faces = (face at c_0, face at c_inf); endpoint_divisors are
/// (E_0, E_inf), the vertex of each endpoint face opposite tau.
struct StratumCurveData {
  FaceId face = 0;
  std::map<DivisorId, Integer> b;
  std::pair<FaceId, FaceId> endpoint_faces{0, 0};
  std::pair<DivisorId, DivisorId> endpoint_divisors{0, 0};
  bool operator==(const StratumCurveData&) const = default;
};

struct DegenerationModel {
  int n = 0;  // relative dimension; top faces have n+1 vertices
  std::map<DivisorId, DivisorRecord> divisors;
  std::map<FaceId, Face> faces;
  std::map<FaceId, StratumCurveData> curves;  // keyed by codim-1 face id
  /// Informational only: strata coincide with log canonical centers. Not
  /// checkable from combinatorial data.
  bool lc_centers_are_strata = true;

  const DivisorRecord& divisor(DivisorId id) const;
  const Face& face(FaceId id) const;
  const StratumCurveData* curve(FaceId tau) const;
  std::vector<FaceId> faces_of_dim(int d) const;
  std::vector<FaceId> top_faces() const { return faces_of_dim(n); }
  /// Top faces having tau as a codim-1 subface, with the position of tau in
  /// each (listed once per incidence).
  std::vector<std::pair<FaceId, std::size_t>> cofaces(FaceId tau) const;
  /// Vertex of sigma opposite its codim-1 subface tau.
  DivisorId opposite_vertex(FaceId sigma, FaceId tau) const;
  bool reduced() const;

  bool operator==(const DegenerationModel&) const = default;
};

/// N_0 + N_inf - sum_j b_j N_j for the stored data; zero iff the stratum is
/// consistent with the special fiber being principal.
Integer curve_balance(const DegenerationModel& m, const StratumCurveData& c);

struct ModelIssue {
  std::string check;  // "face", "curve", "divisor", "adjacency", ...
  long subject = 0;   // face or divisor id the issue is about
  std::string message;
};

struct ValidationReport {
  bool pass = false;
  bool reduced = false;
  int skeleton_dim = -1;
  std::vector<ModelIssue> issues;
};

ValidationReport validate_model(const DegenerationModel& m);
/// Throws InvalidModel carrying the first issue when validation fails.
void require_valid(const DegenerationModel& m);

/// A sub-Delta-complex, closed under taking subfaces.
struct SubComplex {
  std::map<FaceId, Face> faces;
  int dim() const;
};

SubComplex whole_complex(const DegenerationModel& m);

struct EssentialSkeleton {
  Rational min_ratio;
  std::vector<DivisorId> vertices;  // ascending ids
  SubComplex complex;
};

/// Full subcomplex on the vertices minimizing nu/N.
EssentialSkeleton essential_skeleton(const DegenerationModel& m);
bool is_maximally_degenerate(const DegenerationModel& m);

struct PseudomanifoldReport {
  bool pass = false;
  int dim = -1;
  bool pure = false;
  bool two_sided = false;  // every codim-1 face in exactly two top faces
  bool strongly_connected = false;
  std::vector<std::string> issues;
};

PseudomanifoldReport pseudomanifold_check(const SubComplex& k);

/// Boundary matrix d_k : C_k -> C_{k-1}, rows indexed by (k-1)-faces and
/// columns by k-faces in ascending id order. Sign of subface p is (-1)^p.
IntMatrix boundary_matrix(const SubComplex& k, int degree);

/// Ranks of rational homology in degrees 0..dim.
std::vector<std::size_t> homology_ranks(const SubComplex& k);
long euler_characteristic(const SubComplex& k);
std::size_t connected_components(const SubComplex& k);

struct Subdivision {
  DegenerationModel model;
  FaceId subdivided_face = 0;
  std::vector<DivisorId> old_vertices;  // vertices of the subdivided face
  DivisorId new_vertex = 0;
  std::vector<FaceId> new_top_faces;    // new_top_faces[p] replaces old_vertices[p]
};

/// Star subdivision of a top face (the effect of blowing up the
/// corresponding zero-dimensional stratum).
Subdivision star_subdivide(const DegenerationModel& m, FaceId top_face);

/// Flip of an interior edge of a surface model (n = 2). Curve data for the
/// new edge is taken from new_b when given (keyed by its two vertices) and
/// validated; otherwise the new edge carries none.
DegenerationModel edge_flip(const DegenerationModel& m, FaceId edge,
                            const std::optional<std::map<DivisorId, Integer>>& new_b = std::nullopt);

/// True iff the two complexes have the same multiset of vertex sets in each
/// dimension (faces compared up to renumbering of face ids).
bool same_vertex_sets(const SubComplex& a, const SubComplex& b);

/// Graphviz rendering of the dual complex: divisor nodes sized by N, filled
/// when they belong to the essential skeleton.
std::string export_dot(const DegenerationModel& m);

}  // namespace skelefib
