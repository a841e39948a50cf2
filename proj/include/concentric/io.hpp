#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "concentric/geom.hpp"
#include "concentric/moments.hpp"
#include "concentric/pairing.hpp"
#include "concentric/reconstruct.hpp"
#include "concentric/special_cases.hpp"

namespace concentric::io {

inline constexpr std::string_view kFormatTag = "concentric-gons/1";

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InstanceKind { Circles, PolygonPair };

/// On-disk instance: either a circle family or a polygon pair, optionally
/// with the point M and the circle family it induces.
struct InstanceDocument {
  InstanceKind kind = InstanceKind::Circles;
  std::optional<CircleFamily> circles;
  std::vector<RegularPolygon> polygons;
  std::optional<PlanePoint> m_point;
  std::map<std::string, std::string> metadata;
  bool radii_reordered = false;  // set on load when the file listed radii unsorted
};

/// Unknown fields are ignored. Throws ParseError.
InstanceDocument parse_instance(std::string_view text);
InstanceDocument load_instance(const std::string& path);

Json to_json(const InstanceDocument& doc);
Json to_json(PlanePoint p);
Json to_json(const RegularPolygon& poly);
Json to_json(const CircleFamily& family);
Json to_json(const FeasibilityReport& report, const Tolerance& tol);
Json to_json(const RadiiPair& radii);
Json to_json(const PairingResult& result);
Json to_json(const Reconstruction& rec);
Json to_json(const ClosedFormResult& result);
Json to_json(const SquareFeasibility& result);

/// Comma-separated decimal reals. Throws ParseError.
std::vector<double> parse_number_list(std::string_view text);

/// Deterministic serialization: insertion-ordered keys, every number printed
/// with 17 significant digits, non-finite numbers as null, two-space indent.
std::string dump(const Json& value);

/// Formats a double with 17 significant digits (%.17g).
std::string format_number(double value);

}  // namespace concentric::io
