#pragma once

#include "rawbench/types.hpp"

namespace rawbench::pipeline {

/// Normalize digital numbers into [0, 1]:
/// clamp((dn - black_level) / (saturation - black_level), 0, 1).
BayerImage calibrate(const SensorFrame& frame, const CameraProfile& profile);

/// Inverse embedding of calibrate for synthetic data generation:
/// dn = round(value * (saturation - black_level) + black_level).
SensorFrame decalibrate(const BayerImage& img, const CameraProfile& profile);

/// Bilinear demosaic. The two greens of each 2x2 tile are averaged into one
/// half-resolution green plane; each half-resolution plane is upsampled with
/// half-pixel-center alignment and edge clamping.
LinearRgbImage demosaic_bilinear(const BayerImage& img);

/// Per-channel gains, clamped to [0, 1]. Gains must be positive.
LinearRgbImage white_balance(const LinearRgbImage& img, const Vec3& gains);

/// Row-vector convention: out_pixel = in_pixel * ccm, clamped to [0, 1].
LinearRgbImage color_correct(const LinearRgbImage& img, const Mat3& ccm);

/// color_correct(white_balance(demosaic_bilinear(img), gains), ccm).
LinearRgbImage linear_process(const BayerImage& img, const Vec3& gains, const Mat3& ccm);

/// Transfer functions of the named standards. Inputs must lie in [0, 1].
double gamma_compress(double x, GammaStandard std);
double gamma_expand(double y, GammaStandard std);
Plane gamma_compress(const Plane& x, GammaStandard std);
Plane gamma_expand(const Plane& y, GammaStandard std);

/// Tone curve and its inverse. The Smoothstep inverse is found by monotone
/// bisection to 1e-12.
double tone_map(double x, ToneCurve curve);
double tone_unmap(double y, ToneCurve curve);
Plane tone_map(const Plane& x, ToneCurve curve);
Plane tone_unmap(const Plane& y, ToneCurve curve);

/// The nonlinear stage: gamma compression first, then the tone curve.
SrgbImage process(const LinearRgbImage& img, const CameraProfile& profile);

/// code = round(x * (2^bits - 1)), ties away from zero. bits must be 8 or 16.
QuantizedImage quantize(const SrgbImage& img, int bits);

/// x = code / (2^bits - 1).
SrgbImage dequantize(const QuantizedImage& img);

/// Round every value onto the code grid of the given bit depth and return it
/// as a real value again (quantize followed by dequantize).
Plane snap_to_code_grid(const Plane& values, int bits);

/// quantize(process(linear_process(calibrate(frame), gains, ccm)), bits).
QuantizedImage full_pipeline(const SensorFrame& frame, const CameraProfile& profile,
                             const Vec3& gains, int bits);

/// Bilinear resize with half-pixel-center alignment and edge clamping.
Plane resize_bilinear(const Plane& src, Eigen::Index out_h, Eigen::Index out_w);

}  // namespace rawbench::pipeline
