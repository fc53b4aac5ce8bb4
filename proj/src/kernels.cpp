#include "skelefib/kernels.hpp"

#include <omp.h>

#include <exception>

namespace skelefib::kernels {

std::size_t exact_rank_serial(IntMatrix m) { return exact_rank(std::move(m)); }

std::size_t exact_rank_parallel(IntMatrix a) {
  std::size_t r = 0;
  Integer prev = 1;
  const long rows = static_cast<long>(a.rows());
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
#pragma omp parallel for schedule(static)
    for (long i = static_cast<long>(r) + 1; i < rows; ++i) {
      const auto row = static_cast<std::size_t>(i);
      Integer t;
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        t = a(row, j) * a(r, c) - a(row, c) * a(r, j);
        mpz_divexact(a(row, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(row, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

std::size_t parallel_threshold() noexcept { return 4096; }

std::size_t exact_rank_auto(const IntMatrix& m) {
  if (m.rows() * m.cols() >= parallel_threshold() && omp_get_max_threads() > 1) return exact_rank_parallel(m);
  return exact_rank_serial(m);
}

namespace {

// Runs f(i) for every i in parallel and rethrows the error of the lowest
// failing index.
template <class F>
void parallel_indices(std::size_t count, F&& f) {
  std::vector<std::exception_ptr> errors(count);
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
}

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorCode::DimensionMismatch, "batch inputs differ in length");
}

FanChecks verify_one(const StratumData& d, BasisChoice basis) {
  try {
    return check_stratum_fan(assemble_stratum_fan(d, basis));
  } catch (const Error&) {
    return FanChecks{};
  }
}

}  // namespace

std::vector<SkeletonPoint> retract_serial(const DegenerationModel& m, std::span<const ValuedPoint> xs) {
  std::vector<SkeletonPoint> out;
  out.reserve(xs.size());
  for (const ValuedPoint& x : xs) out.push_back(retract(m, x));
  return out;
}

std::vector<SkeletonPoint> retract_parallel(const DegenerationModel& m, std::span<const ValuedPoint> xs) {
  std::vector<SkeletonPoint> out(xs.size());
  parallel_indices(xs.size(), [&](std::size_t i) { out[i] = retract(m, xs[i]); });
  return out;
}

std::vector<Rational> trop_character_serial(std::span<const TorusPoint> xs, std::span<const IntVector> chars) {
  require_same_length(xs.size(), chars.size());
  std::vector<Rational> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out.push_back(trop_character(xs[i], chars[i]));
  return out;
}

std::vector<Rational> trop_character_parallel(std::span<const TorusPoint> xs, std::span<const IntVector> chars) {
  require_same_length(xs.size(), chars.size());
  std::vector<Rational> out(xs.size());
  parallel_indices(xs.size(), [&](std::size_t i) { out[i] = trop_character(xs[i], chars[i]); });
  return out;
}

std::vector<FanChecks> verify_fans_serial(std::span<const StratumData> strata, BasisChoice basis) {
  std::vector<FanChecks> out;
  out.reserve(strata.size());
  for (const StratumData& d : strata) out.push_back(verify_one(d, basis));
  return out;
}

std::vector<FanChecks> verify_fans_parallel(std::span<const StratumData> strata, BasisChoice basis) {
  std::vector<FanChecks> out(strata.size());
  parallel_indices(strata.size(), [&](std::size_t i) { out[i] = verify_one(strata[i], basis); });
  return out;
}

}  // namespace skelefib::kernels
