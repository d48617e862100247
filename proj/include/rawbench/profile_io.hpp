#pragma once

#include "rawbench/types.hpp"

#include <filesystem>
#include <string>

namespace rawbench::io {

std::string profile_to_json_string(const CameraProfile& profile, bool pretty = false);
CameraProfile profile_from_json_string(const std::string& text);

CameraProfile load_profile(const std::filesystem::path& path);
void save_profile(const std::filesystem::path& path, const CameraProfile& profile);

}  // namespace rawbench::io
