#pragma once

#include "rawbench/types.hpp"

#include <json.hpp>

namespace rawbench::io::detail {

nlohmann::json profile_to_json(const CameraProfile& profile);
CameraProfile profile_from_json(const nlohmann::json& j);

}  // namespace rawbench::io::detail
