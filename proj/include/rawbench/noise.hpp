#pragma once

#include "rawbench/types.hpp"

#include <cstdint>

namespace rawbench::noise {

/// Heteroscedastic noise levels plus the generator seed.
struct NoiseParams {
    double lambda_shot = 0.0;
    double lambda_read = 0.0;
    std::uint64_t seed = 0;
};

/// Per-pixel noise standard deviation, same shape as its mosaic.
struct SigmaMap {
    Plane sigma;
};

/// Counter-based generator primitives. Every draw is a pure function of
/// (seed, index), so any serial or parallel evaluation order produces
/// identical bits.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t index);
double uniform_unit(std::uint64_t seed, std::uint64_t index);   // [0, 1)
double standard_normal(std::uint64_t seed, std::uint64_t draw_index);

/// sigma[i] = sqrt(lambda_shot * x[i] + lambda_read).
SigmaMap sigma_map(const BayerImage& x, const NoiseParams& params);

/// Zero-mean Gaussian field with the per-pixel sigma, before any clipping.
/// Pixel index is y * width + x; draws come from (seed, pixel index).
Plane noise_field(const SigmaMap& map, std::uint64_t seed, int threads = 1);

/// y[i] = clamp(x[i] + n[i], 0, 1) with n[i] ~ N(0, lambda_shot*x[i] + lambda_read).
BayerImage add_shot_read_noise(const BayerImage& x, const NoiseParams& params, int threads = 1);

/// x_s = x_long / gamma. Requires gamma >= 1.
BayerImage derive_short_exposure(const BayerImage& x_long, double gamma);

/// clamp(gamma * y, 0, 1). Requires gamma > 0.
BayerImage brighten(const BayerImage& y, double gamma);
LinearRgbImage brighten(const LinearRgbImage& y, double gamma);
PackedRaw brighten(const PackedRaw& y, double gamma);

/// Noise level of the brightened signal: sigma_b^2 = gamma*lambda_shot*(gamma*x_s)
/// + gamma^2*lambda_read, evaluated against the short exposure x_s.
SigmaMap brightened_sigma_map(const BayerImage& x_short, double gamma, const NoiseParams& params);

/// gamma_hat = mean(long) / mean(short) over linear-domain pixel values.
double estimate_gamma_hat(const BayerImage& short_linear, const BayerImage& long_linear);

/// Metered gains: w_c * (1 + u_c) with u_c uniform in [-bias, +bias],
/// deterministic per seed. bias must lie in [0, 0.5].
Vec3 perturb_wb(const Vec3& w_true, double bias, std::uint64_t seed);

}  // namespace rawbench::noise
