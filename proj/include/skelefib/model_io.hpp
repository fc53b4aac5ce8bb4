#pragma once
// JSON model files.
//
//   {"version": "1", "n": 2,
//    "divisors": [{"id": 1, "N": 1, "nu": 0, "label": "A"}, ...],
//    "faces":    [{"id": 7, "vertices": [1, 2], "subfaces": [2, 1]}, ...],
//    "curves":   [{"face": 7, "b": {"1": 1, "2": 1},
//                  "endpoints": {"faces": [11, 12], "divisors": [3, 4]}}, ...]}
//
// Integers may be JSON numbers or decimal strings (for values beyond 64
// bits). Writing uses numbers whenever they fit.

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "skelefib/degeneration.hpp"

namespace skelefib {

inline constexpr std::string_view kModelFormatVersion = "1";

/// Throws ParseError naming the line (syntax) or the field path (schema).
DegenerationModel parse_model(std::string_view text);
DegenerationModel load_model(const std::filesystem::path& path);

nlohmann::ordered_json model_to_json(const DegenerationModel& m);
/// Pretty-printed unless compact.
std::string serialize_model(const DegenerationModel& m, bool compact = false);

/// JSON number when it fits in a signed 64-bit integer, decimal string
/// otherwise.
nlohmann::ordered_json integer_json(const Integer& x);
/// "p/q" in lowest terms, or "p" for integers.
nlohmann::ordered_json rational_json(const Rational& x);
/// Parses "p/q" or "p"; throws ParseError.
Rational parse_rational(std::string_view s);

}  // namespace skelefib
