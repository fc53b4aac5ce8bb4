#pragma once
// Batch kernels with an OpenMP implementation and a serial reference.
// Both variants return identical results; the serial ones exist for testing
// and benchmarking the parallel ones.

#include <cstddef>
#include <span>
#include <vector>

#include "skelefib/syz.hpp"

namespace skelefib::kernels {

/// Rank by Bareiss elimination; the parallel variant updates the rows
/// below each pivot concurrently.
std::size_t exact_rank_serial(IntMatrix m);
std::size_t exact_rank_parallel(IntMatrix m);
/// Parallel for matrices with at least `parallel_threshold()` entries.
std::size_t exact_rank_auto(const IntMatrix& m);
std::size_t parallel_threshold() noexcept;

/// retract() on each point. The first failing point (lowest index) has its
/// error rethrown.
std::vector<SkeletonPoint> retract_serial(const DegenerationModel& m, std::span<const ValuedPoint> xs);
std::vector<SkeletonPoint> retract_parallel(const DegenerationModel& m, std::span<const ValuedPoint> xs);

/// trop_character(xs[i], chars[i]).
std::vector<Rational> trop_character_serial(std::span<const TorusPoint> xs, std::span<const IntVector> chars);
std::vector<Rational> trop_character_parallel(std::span<const TorusPoint> xs, std::span<const IntVector> chars);

/// check_stratum_fan(assemble_stratum_fan(d)) on each stratum; strata that
/// fail a precondition report every check as false.
std::vector<FanChecks> verify_fans_serial(std::span<const StratumData> strata, BasisChoice basis = BasisChoice::Hnf);
std::vector<FanChecks> verify_fans_parallel(std::span<const StratumData> strata, BasisChoice basis = BasisChoice::Hnf);

}  // namespace skelefib::kernels
