#pragma once

#include "rawbench/types.hpp"

#include <filesystem>

namespace rawbench::io {

enum class ImageFormat { Png8, Png16, Ppm16 };

/// Write a quantized image. The image's bit depth must match the declared
/// format depth. PPM is P6 with maxval 65535 and big-endian samples.
void write_image(const std::filesystem::path& path, const QuantizedImage& img,
                 ImageFormat format);

/// Read a PNG (8- or 16-bit RGB) or a P6 PPM back into integer codes.
QuantizedImage read_image(const std::filesystem::path& path);

}  // namespace rawbench::io
