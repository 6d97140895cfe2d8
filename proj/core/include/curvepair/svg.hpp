// SVG rendering of a report: partition cells in light gray, the two
// approximations as thick colored polylines, crossing hulls outlined.
#pragma once

#include <json.hpp>

#include <string>

namespace curvepair {

std::string render_svg(const nlohmann::ordered_json& report);

}  // namespace curvepair
