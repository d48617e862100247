#pragma once

#include "rawbench/types.hpp"

#include <span>

namespace rawbench::fem {

/// 10*log10(peak^2 / MSE) over all pixels and channels, capped to [0, 100];
/// MSE below 1e-10 reports the 100 dB cap.
double psnr(std::span<const Plane> a, std::span<const Plane> b, double peak = 1.0);

/// Structural similarity with the standard 11x11 Gaussian window (sigma 1.5),
/// K1 = 0.01, K2 = 0.03, dynamic range 1. Mean over valid window positions,
/// per channel, then averaged across channels.
double ssim(std::span<const Plane> a, std::span<const Plane> b);

double psnr(const SrgbImage& a, const SrgbImage& b, double peak = 1.0);
double ssim(const SrgbImage& a, const SrgbImage& b);
double psnr(const BayerImage& a, const BayerImage& b, double peak = 1.0);
double ssim(const BayerImage& a, const BayerImage& b);

}  // namespace rawbench::fem
