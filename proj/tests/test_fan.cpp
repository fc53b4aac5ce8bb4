#include "doctest.h"
#include "skelefib/fan.hpp"
#include "support.hpp"

using namespace skelefib;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Cone cone(std::initializer_list<std::initializer_list<long>> gens) {
  Cone c;
  for (auto g : gens) {
    c.generators.push_back(iv(g));
    c.ambient_dim = g.size();
  }
  return c;
}

Rational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("smoothness") {
  CHECK(is_smooth(cone({{0, 1}, {1, 1}})));
  CHECK_FALSE(is_smooth(cone({{0, 1}, {2, 0}})));
  CHECK(is_smooth(cone({{1, 0}})));
  CHECK_FALSE(is_smooth(cone({{1, 1}, {2, 2}})));
  CHECK_FALSE(is_smooth(cone({{1, 0, 0}, {1, 2, 0}})));
  CHECK(is_smooth(cone({{1, 0, 0}, {1, 1, 0}})));
}

TEST_CASE("common faces") {
  const Cone s0 = cone({{0, 1}, {1, 1}});
  const Cone sinf = cone({{0, 1}, {-1, 1}});
  const auto f = common_face(s0, sinf);
  REQUIRE(f.has_value());
  CHECK(f->generators == std::vector<IntVector>{iv({0, 1})});

  const auto same = common_face(s0, s0);
  REQUIRE(same.has_value());
  CHECK(same->size() == 2);

  const auto origin = common_face(cone({{1, 0}}), cone({{0, 1}}));
  REQUIRE(origin.has_value());
  CHECK(origin->size() == 0);

  // overlapping interiors: they share (0,1) but also meet along (1,2)
  CHECK_FALSE(common_face(cone({{0, 1}, {1, 1}}), cone({{0, 1}, {1, 3}})).has_value());
  // no shared ray but overlapping
  CHECK_FALSE(common_face(cone({{0, 1}, {2, 1}}), cone({{1, 1}, {-1, 1}})).has_value());
}

TEST_CASE("fan validation") {
  Fan good{2, {cone({{0, 1}, {1, 1}}), cone({{0, 1}, {-1, 1}})}};
  const FanReport r = validate_fan(good);
  CHECK(r.pass);
  CHECK(r.cones.size() == 2);
  CHECK(r.pairs.size() == 1);

  Fan dup{2, {cone({{0, 1}, {1, 1}}), cone({{0, 1}, {1, 1}})}};
  const FanReport rd = validate_fan(dup);
  CHECK_FALSE(rd.pass);
  CHECK_FALSE(rd.pairs.front().distinct);

  Fan flat{2, {cone({{1, 0}, {0, 1}})}};
  const FanReport rf = validate_fan(flat);
  CHECK_FALSE(rf.pass);
  CHECK_FALSE(rf.cones.front().supported);
}

TEST_CASE("height-one slices") {
  Fan f{2, {cone({{0, 1}, {1, 1}}), cone({{0, 1}, {-1, 2}})}};
  const auto slices = slice_height_one(f);
  REQUIRE(slices.size() == 2);
  CHECK(slices[0].vertices == std::vector<RationalVector>{{q(0)}, {q(1)}});
  CHECK(slices[1].vertices == std::vector<RationalVector>{{q(0)}, {q(-1, 2)}});

  Fan tri{3, {cone({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}})}};
  CHECK(slice_height_one(tri)[0].vertices == std::vector<RationalVector>{{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}});

  Fan bad{2, {cone({{1, 0}})}};
  try {
    slice_height_one(bad);
    FAIL("expected ZeroHeightRay");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroHeightRay);
  }

  // scaling (v, 1) by the height gives back the generator
  for (const IntVector& g : {iv({3, -1, 4}), iv({-2, 5, 7}), iv({0, 0, 1})}) {
    const RationalVector p = slice_point(g);
    for (std::size_t k = 0; k < p.size(); ++k) CHECK(p[k] * g.back() == g[k]);
  }
}

TEST_CASE("ray multiplicity") {
  CHECK(ray_multiplicity(iv({0, 1}), IotaWeight{1}) == 1);
  CHECK(ray_multiplicity(iv({-1, 2}), IotaWeight{1}) == 2);
  CHECK(ray_multiplicity(iv({0, 1}), IotaWeight{2}) == 2);
  try {
    ray_multiplicity(iv({1, 0}), IotaWeight{1});
    FAIL("expected NonPositiveHeight");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPositiveHeight);
  }
  try {
    ray_multiplicity(iv({0, 3}), IotaWeight{2});
    FAIL("expected NotCoprime");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCoprime);
  }
}

TEST_CASE("point location") {
  Fan f{2, {cone({{0, 1}, {1, 1}}), cone({{0, 1}, {-1, 1}})}};
  const auto half = locate(f, {q(1, 2)});
  REQUIRE(half.has_value());
  CHECK(half->cone_index == 0);
  CHECK(half->barycentric == RationalVector{q(1, 2), q(1, 2)});

  const auto zero = locate(f, {q(0)});
  REQUIRE(zero.has_value());
  CHECK(zero->cone_index == 0);

  const auto neg = locate(f, {q(-1, 3)});
  REQUIRE(neg.has_value());
  CHECK(neg->cone_index == 1);

  CHECK_FALSE(locate(f, {q(5)}).has_value());

  SUBCASE("reconstruction is exact") {
    Fan t{3, {cone({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}), cone({{0, 0, 1}, {0, 1, 1}, {-1, 1, 1}})}};
    const auto slices = slice_height_one(t);
    std::mt19937_64 rng(3);
    int located = 0;
    for (int trial = 0; trial < 300; ++trial) {
      const RationalVector p{testsupport::random_rational(rng, 6, 7), testsupport::random_rational(rng, 6, 7)};
      const auto loc = locate(t, p);
      if (!loc) continue;
      ++located;
      RationalVector back(2, q(0));
      for (std::size_t k = 0; k < loc->barycentric.size(); ++k)
        for (std::size_t r = 0; r < 2; ++r) back[r] += loc->barycentric[k] * slices[loc->cone_index].vertices[k][r];
      REQUIRE(back == p);
    }
    CHECK(located > 0);
  }
}
