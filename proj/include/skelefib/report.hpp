#pragma once
// JSON renderings of computed results, shared by the CLI and the tests.
// Field order is fixed, so dumps are byte-stable.

#include "json.hpp"
#include "skelefib/syz.hpp"

namespace skelefib {

/// Validation, essential skeleton, pseudomanifold and homology summary.
/// Sets "valid": false and skips the topology when validation fails.
nlohmann::ordered_json report_json(const DegenerationModel& m);

nlohmann::ordered_json stratum_fan_json(const StratumChart& chart);
nlohmann::ordered_json canonical_chart_json(const CanonicalChart& chart);
/// {"A": ..., "b": [...], "det": ...}; b entries are always "p/q" strings.
nlohmann::ordered_json transition_json(const AffineTransition& t);
nlohmann::ordered_json skeleton_point_json(const SkeletonPoint& p);

}  // namespace skelefib
