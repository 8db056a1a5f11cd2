#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "coopx/complex.hpp"
#include "coopx/game.hpp"

namespace coopx {

using Json = nlohmann::ordered_json;

// Rationals are written as JSON integers when they are integral and fit in
// 64 bits, otherwise as "p/q" strings. Readers accept both. Parse failures
// throw Error(MalformedInput) naming the JSON path of the offending field.

Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const FirmSystem& fs);
Json to_json(const ComprehensiveSet& u);
Json to_json(const GeneralizedGame& g);
Json to_json(const TUGame& g);
Json to_json(const CoalitionalNTUGame& g);

Rational rational_from_json(const Json& j, const std::string& path = "$");
Vector vector_from_json(const Json& j, const std::string& path = "$");
FirmSystem firms_from_json(const Json& j, const std::string& path = "$");
ComprehensiveSet set_from_json(const Json& j, const std::string& path = "$");
GeneralizedGame game_from_json(const Json& j, const std::string& path = "$");
TUGame tu_game_from_json(const Json& j, const std::string& path = "$");
CoalitionalNTUGame ntu_game_from_json(const Json& j, const std::string& path = "$");

/// {vertices, facets, orientation?, labels?, positions?, firms?}; labels are
/// lists of 0-based firm indices.
struct ComplexDocument {
  OrientedComplex complex;
  bool has_orientation = false;
  std::optional<Labeling> labels;
  std::vector<Vector> positions;
  std::optional<FirmSystem> firms;
};

Json to_json(const ComplexDocument& doc);
ComplexDocument complex_from_json(const Json& j, const std::string& path = "$");

Json to_json(const Labeling& labels);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);
/// Throws Error(MalformedInput) on syntax errors.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace coopx
