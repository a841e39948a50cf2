#include "concentric/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace concentric::io {

namespace {

PlanePoint parse_point(const Json& j, std::string_view what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(std::string(what) + " must be an [x, y] array of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

RegularPolygon parse_polygon(const Json& j) {
  if (!j.is_object()) throw ParseError("polygon entries must be objects");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw ParseError("polygon needs an integer field \"n\"");
  }
  if (!j.contains("circumradius") || !j["circumradius"].is_number()) {
    throw ParseError("polygon needs a numeric field \"circumradius\"");
  }
  const PlanePoint center = j.contains("center") ? parse_point(j["center"], "polygon center")
                                                 : PlanePoint{};
  double phase = 0.0;
  if (j.contains("phase")) {
    if (!j["phase"].is_number()) throw ParseError("polygon phase must be a number");
    phase = j["phase"].get<double>();
  }
  return RegularPolygon(j["n"].get<int>(), center, j["circumradius"].get<double>(), phase);
}

CircleFamily parse_circles(const Json& j, bool* reordered) {
  if (!j.is_object()) throw ParseError("\"circles\" must be an object");
  const PlanePoint center =
      j.contains("center") ? parse_point(j["center"], "circles center") : PlanePoint{};
  if (!j.contains("radii") || !j["radii"].is_array()) {
    throw ParseError("\"circles\" needs a \"radii\" array");
  }
  std::vector<double> radii;
  for (const Json& r : j["radii"]) {
    if (!r.is_number()) throw ParseError("radii must be numbers");
    radii.push_back(r.get<double>());
  }
  return CircleFamily::from_unsorted(center, std::move(radii), reordered);
}

void emit(const Json& value, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  switch (value.type()) {
    case Json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(key).dump() + ": ";
        emit(item, out, indent + 2);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::all_of(value.begin(), value.end(),
                                    [](const Json& v) { return v.is_primitive(); });
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < value.size(); ++i) {
          if (i > 0) out += ", ";
          emit(value[i], out, indent);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i > 0) out += ",\n";
        out += inner;
        emit(value[i], out, indent + 2);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_number(value.get<double>());
      return;
    default:
      out += value.dump();
      return;
  }
}

}  // namespace

std::string format_number(double value) {
  if (!std::isfinite(value)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string dump(const Json& value) {
  std::string out;
  emit(value, out, 0);
  out += "\n";
  return out;
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) {
      item.remove_prefix(1);
    }
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) {
      item.remove_suffix(1);
    }
    double v = 0.0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size() ||
        !std::isfinite(v)) {
      throw ParseError("not a decimal number: '" + std::string(item) + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

InstanceDocument parse_instance(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("instance document must be a JSON object");
  if (!j.contains("format") || j["format"] != kFormatTag) {
    throw ParseError("missing or unsupported \"format\" (expected \"" + std::string(kFormatTag) +
                     "\")");
  }
  if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("missing \"kind\"");

  InstanceDocument doc;
  try {
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "circles") {
      doc.kind = InstanceKind::Circles;
      if (!j.contains("circles")) throw ParseError("circles document needs \"circles\"");
    } else if (kind == "polygon_pair") {
      doc.kind = InstanceKind::PolygonPair;
      if (!j.contains("polygons") || !j["polygons"].is_array() || j["polygons"].size() != 2) {
        throw ParseError("polygon_pair document needs exactly two \"polygons\"");
      }
      for (const Json& p : j["polygons"]) doc.polygons.push_back(parse_polygon(p));
    } else {
      throw ParseError("unknown kind \"" + kind + "\"");
    }
    if (j.contains("circles")) doc.circles = parse_circles(j["circles"], &doc.radii_reordered);
    if (j.contains("m_point")) doc.m_point = parse_point(j["m_point"], "m_point");
    if (j.contains("metadata")) {
      if (!j["metadata"].is_object()) throw ParseError("\"metadata\" must be an object");
      for (const auto& [key, item] : j["metadata"].items()) {
        doc.metadata[key] = item.is_string() ? item.get<std::string>() : item.dump();
      }
    }
  } catch (const GeometryError& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }
  return doc;
}

InstanceDocument load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

Json to_json(PlanePoint p) { return Json::array({p.x, p.y}); }

Json to_json(const RegularPolygon& poly) {
  Json j;
  j["n"] = poly.n();
  j["center"] = to_json(poly.center());
  j["circumradius"] = poly.circumradius();
  j["phase"] = poly.phase();
  return j;
}

Json to_json(const CircleFamily& family) {
  Json j;
  j["center"] = to_json(family.center());
  j["radii"] = family.radii();
  return j;
}

Json to_json(const InstanceDocument& doc) {
  Json j;
  j["format"] = kFormatTag;
  j["kind"] = doc.kind == InstanceKind::Circles ? "circles" : "polygon_pair";
  if (doc.circles) j["circles"] = to_json(*doc.circles);
  if (!doc.polygons.empty()) {
    j["polygons"] = Json::array();
    for (const RegularPolygon& p : doc.polygons) j["polygons"].push_back(to_json(p));
  }
  if (doc.m_point) j["m_point"] = to_json(*doc.m_point);
  if (!doc.metadata.empty()) {
    j["metadata"] = Json::object();
    for (const auto& [k, v] : doc.metadata) j["metadata"][k] = v;
  }
  return j;
}

Json to_json(const FeasibilityReport& report, const Tolerance& tol) {
  Json j;
  j["feasible"] = report.feasible();
  j["condition1"] = {{"ok", report.condition1_ok}, {"ratio", report.condition1_ratio}};
  Json residuals = Json::array();
  Json failing = Json::array();
  for (std::size_t i = 0; i < report.condition2_residuals.size(); ++i) {
    const int m = static_cast<int>(i) + 3;
    const double r = report.condition2_residuals[i];
    residuals.push_back({{"m", m}, {"residual", r}});
    if (!(r <= tol.relative_eps + tol.absolute_floor)) failing.push_back(m);
  }
  j["condition2"] = {{"ok", report.condition2_ok}, {"residuals", residuals}, {"failing_m", failing}};
  j["degenerate_single_polygon"] = report.degenerate_single_polygon;
  return j;
}

Json to_json(const RadiiPair& radii) {
  return {{"r1", radii.r1}, {"r2", radii.r2}, {"degenerate", radii.degenerate}};
}

Json to_json(const PairingResult& result) {
  Json j;
  j["m_point"] = to_json(result.m_point);
  j["aligned_second"] = to_json(result.aligned_second);
  j["circle_radii"] = result.circles.radii();
  j["matched_vertex_pair"] = Json::array({result.matched_vertex_pair.first,
                                          result.matched_vertex_pair.second});
  return j;
}

Json to_json(const Reconstruction& rec) {
  Json j;
  j["circumradii"] = to_json(rec.radii);
  j["polygons"] = Json::array({to_json(rec.first), to_json(rec.second)});
  j["residuals"] = Json::array({rec.first_residual, rec.second_residual});
  j["second_is_point"] = rec.second_is_point;
  return j;
}

Json to_json(const ClosedFormResult& result) {
  return {{"exists", result.exists},
          {"degenerate", result.degenerate},
          {"r1", result.r1},
          {"r2", result.r2}};
}

Json to_json(const SquareFeasibility& result) {
  Json j = to_json(static_cast<const ClosedFormResult&>(result));
  switch (result.reason) {
    case SquareRejection::None: j["rejection"] = "none"; break;
    case SquareRejection::SumCondition: j["rejection"] = "sum_condition"; break;
    case SquareRejection::AssociatedTriangle: j["rejection"] = "associated_triangle"; break;
  }
  return j;
}

}  // namespace concentric::io
