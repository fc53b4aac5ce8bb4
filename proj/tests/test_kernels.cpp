#include "doctest.h"
#include "skelefib/kernels.hpp"
#include "support.hpp"

using namespace skelefib;

TEST_CASE("exact rank: parallel equals serial") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 40);
    const std::size_t rows = size(rng), cols = size(rng);
    IntMatrix m = testsupport::random_matrix(rng, rows, cols, -5, 5);
    // duplicate some rows so the rank drops
    for (std::size_t r = 1; r < rows; r += 3)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = m(r - 1, c);
    const std::size_t serial = kernels::exact_rank_serial(m);
    REQUIRE(kernels::exact_rank_parallel(m) == serial);
    REQUIRE(kernels::exact_rank_auto(m) == serial);
    REQUIRE(exact_rank(m) == serial);
  }
  IntMatrix low(60, 60);
  for (std::size_t r = 0; r < 60; ++r)
    for (std::size_t c = 0; c < 60; ++c) low(r, c) = static_cast<long>((r % 7) * (c + 1));
  CHECK(kernels::exact_rank_parallel(low) == 1);
}

TEST_CASE("retraction batch: parallel equals serial") {
  const DegenerationModel m = k3_tetrahedron();
  std::mt19937_64 rng(12);
  const auto faces = testsupport::all_face_ids(m);
  std::vector<ValuedPoint> xs;
  for (int k = 0; k < 500; ++k)
    xs.push_back(as_valued_point(m, testsupport::random_skeleton_point(rng, m, faces[k % faces.size()])));
  CHECK(kernels::retract_parallel(m, xs) == kernels::retract_serial(m, xs));

  xs[300].q.begin()->second = 0;
  xs[400].q.begin()->second *= 2;
  try {
    kernels::retract_parallel(m, xs);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPositiveValuation);
  }
}

TEST_CASE("tropical characters batch") {
  std::mt19937_64 rng(4);
  std::vector<TorusPoint> xs;
  std::vector<IntVector> chars;
  std::uniform_int_distribution<long> e(-9, 9);
  for (int k = 0; k < 400; ++k) {
    TorusPoint x;
    IntVector mc;
    for (int i = 0; i < 3; ++i) {
      x.r.push_back(testsupport::random_rational(rng, 10, 10));
      mc.emplace_back(e(rng));
    }
    xs.push_back(x);
    chars.push_back(mc);
  }
  CHECK(kernels::trop_character_parallel(xs, chars) == kernels::trop_character_serial(xs, chars));
  chars.pop_back();
  CHECK_THROWS_AS(kernels::trop_character_parallel(xs, chars), Error);
}

TEST_CASE("fan verification batch") {
  std::mt19937_64 rng(6);
  std::vector<StratumData> strata;
  for (int k = 0; k < 200; ++k) strata.push_back(testsupport::random_stratum(rng));
  strata[10].b[0] = 0;
  const auto serial = kernels::verify_fans_serial(strata);
  const auto parallel = kernels::verify_fans_parallel(strata);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) {
    CHECK(serial[k].pass() == parallel[k].pass());
    CHECK(serial[k].pass() == (k != 10));
  }
}
