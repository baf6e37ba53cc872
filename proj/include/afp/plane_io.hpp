#pragma once

#include <string>

#include <json.hpp>

#include "afp/incidence.hpp"

namespace afp {

// Plane file format: {"num_points": N, "lines": [[i, j, ...], ...]}, 0-based.
AffinePlane plane_from_json(const nlohmann::json& doc);
AffinePlane plane_from_json_text(const std::string& text);
/// Emits lines canonically sorted, so load followed by emit is stable.
nlohmann::json plane_to_json(const AffinePlane& plane);

}  // namespace afp
