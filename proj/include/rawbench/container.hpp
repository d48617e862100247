#pragma once

#include "rawbench/types.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace rawbench::io {

/// Header fields of the LRS1 container. The payload is width*height*channels
/// unsigned 16-bit little-endian samples, row-major, channel-interleaved.
struct ContainerMeta {
    int width = 0;
    int height = 0;
    int channels = 1;
    int bit_depth = 16;
    std::string pattern = "RGGB";  // "none" for non-mosaic payloads
    std::string role = "frame";
    CameraProfile profile;
    double exposure_time_s = 0.0;
    double gamma = 1.0;
};

struct Container {
    ContainerMeta meta;
    std::vector<std::uint16_t> samples;
};

void write_container(const std::filesystem::path& path, const Container& container);
Container read_container(const std::filesystem::path& path);

Container make_container(const SensorFrame& frame, const CameraProfile& profile,
                         std::string role, double exposure_time_s, double gamma);
Container make_container(const QuantizedImage& img, const CameraProfile& profile,
                         std::string role, double exposure_time_s, double gamma);

SensorFrame to_sensor_frame(const Container& container);
QuantizedImage to_quantized(const Container& container);

/// Payload as [0, 1] planes (codes divided by 2^bit_depth - 1), one per channel.
std::vector<Plane> to_planes(const Container& container);

}  // namespace rawbench::io
