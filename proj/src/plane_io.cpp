#include "afp/plane_io.hpp"

namespace afp {

AffinePlane plane_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InvalidInput("plane document must be a JSON object");
  if (!doc.contains("num_points") || !doc["num_points"].is_number_unsigned()) {
    throw InvalidInput("plane document needs a non-negative integer 'num_points'");
  }
  if (!doc.contains("lines") || !doc["lines"].is_array()) {
    throw InvalidInput("plane document needs a 'lines' array");
  }
  const auto num_points = doc["num_points"].get<std::size_t>();
  std::vector<std::vector<std::uint32_t>> lines;
  for (const auto& line : doc["lines"]) {
    if (!line.is_array()) throw InvalidInput("each line must be an array of point indices");
    std::vector<std::uint32_t> pts;
    for (const auto& p : line) {
      if (!p.is_number_unsigned()) throw InvalidInput("point indices must be non-negative integers");
      const auto v = p.get<std::uint64_t>();
      if (v >= num_points) throw InvalidInput("point index " + std::to_string(v) + " out of range");
      pts.push_back(static_cast<std::uint32_t>(v));
    }
    lines.push_back(std::move(pts));
  }
  return AffinePlane::load(num_points, std::move(lines));
}

AffinePlane plane_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("plane JSON does not parse: ") + e.what());
  }
  return plane_from_json(doc);
}

nlohmann::json plane_to_json(const AffinePlane& plane) {
  return nlohmann::json{{"num_points", plane.num_points()}, {"lines", plane.canonical_lines()}};
}

}  // namespace afp
