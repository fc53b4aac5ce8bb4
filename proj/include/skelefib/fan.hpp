#pragma once
// Simplicial cones and fans in Z^n + Z. The last coordinate is the height
// (the R_{>=0} factor over the base); slices are taken at height one and
// drop that coordinate.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skelefib/lattice.hpp"

namespace skelefib {

struct Cone {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> generators;

  std::size_t size() const noexcept { return generators.size(); }
  /// Generators as the columns of an ambient_dim x size matrix.
  IntMatrix generator_matrix() const;
  bool operator==(const Cone&) const = default;
};

struct Fan {
  std::size_t ambient_dim = 0;
  std::vector<Cone> maximal_cones;
};

/// Normalizing factor iota of the structure morphism (u, v) -> iota * v.
struct IotaWeight {
  Integer iota = 1;
};

struct SlicePolytope {
  std::size_t cone_index = 0;
  /// vertices[k] is the slice point of generator k of the cone.
  std::vector<RationalVector> vertices;
};

bool generators_independent(const Cone& c);

/// True iff the generators are linearly independent and extend to a basis
/// of the ambient lattice (all HNF pivots of the generator rows equal 1).
bool is_smooth(const Cone& c);

/// The face spanned by the shared generators when c1 and c2 meet exactly in
/// it; std::nullopt when their intersection is larger (not a common face).
std::optional<Cone> common_face(const Cone& c1, const Cone& c2);

struct ConeCheck {
  bool primitive = false;
  bool strongly_convex = false;
  bool smooth = false;
  bool supported = false;  // every generator has positive height
};

struct ConePairCheck {
  std::size_t first = 0;
  std::size_t second = 0;
  bool distinct = false;
  bool common_face = false;
};

struct FanReport {
  bool pass = false;
  std::vector<ConeCheck> cones;
  std::vector<ConePairCheck> pairs;
  std::vector<std::string> issues;
};

FanReport validate_fan(const Fan& f);

/// Height-one slice of every maximal cone. Throws ZeroHeightRay.
std::vector<SlicePolytope> slice_height_one(const Fan& f);
RationalVector slice_point(const IntVector& ray);

/// iota * (height of ray). Throws NonPositiveHeight.
Integer ray_multiplicity(const IntVector& ray, const IotaWeight& iota);

struct Location {
  std::size_t cone_index = 0;
  RationalVector barycentric;
};

/// First maximal cone whose height-one simplex contains p (exact), with the
/// barycentric coordinates of p in it; std::nullopt when p is outside.
std::optional<Location> locate(const Fan& f, const RationalVector& p);

}  // namespace skelefib
