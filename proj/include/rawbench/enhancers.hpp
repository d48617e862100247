#pragma once

#include "rawbench/variants.hpp"

#include <functional>
#include <map>
#include <string>

namespace rawbench::enhance {

using fem::EnhancerFn;
using fem::EnhancerInput;

/// Inverse of the nonlinear stage: tone_unmap, then gamma_expand.
LinearRgbImage handcrafted_unprocess(const SrgbImage& img, GammaStandard std,
                                     ToneCurve tone = ToneCurve::Identity);

/// Lower-bound reference: brightens by gamma_given in the input's native
/// domain and renders to sRGB; no denoising.
SrgbImage identity_enhancer(const EnhancerInput& input);

/// Separable Gaussian spatial filter in the input's native domain after
/// brightening, then rendered to sRGB.
EnhancerFn gaussian_denoise_enhancer(int radius, double sigma);

/// Per-channel global histogram equalization of a quantized sRGB input.
SrgbImage hist_eq_enhancer(const EnhancerInput& input);

enum class GammaSource { TrueGamma, EstimatedGamma };

/// Three-stage composition: Unprocess (sRGB -> linear), multiply by the
/// exposure ratio, Enhance (linear -> linear), Process (linear -> sRGB).
/// Every stage output is clipped to [0, 1].
struct StageChain {
    std::function<LinearRgbImage(const SrgbImage&)> unprocess;
    std::function<LinearRgbImage(const LinearRgbImage&, double)> enhance;
    std::function<SrgbImage(const LinearRgbImage&)> process;
    GammaSource gamma_source = GammaSource::TrueGamma;

    SrgbImage run(const SrgbImage& input, double gamma_prime) const;
};

/// Linear-domain denoise operators for the chain's Enhance slot.
LinearRgbImage identity_linear_denoise(const LinearRgbImage& img, double gamma_prime);
std::function<LinearRgbImage(const LinearRgbImage&, double)> gaussian_linear_denoise(
    int radius, double sigma);

/// Exact-inverse Unprocess/Process around the given profile with the chosen
/// linear-domain denoiser in between.
StageChain reenet_oracle_chain(const CameraProfile& profile, GammaSource gamma_source,
                               std::function<LinearRgbImage(const LinearRgbImage&, double)>
                                   denoise = identity_linear_denoise);

/// Adapt a chain to the benchmark's enhancer contract. The exposure ratio is
/// taken from the input's attached gamma.
EnhancerFn as_enhancer(StageChain chain);

/// Named operators available to the CLI: identity, gaussian, histeq, reenet.
std::map<std::string, EnhancerFn> default_registry();

/// Separable Gaussian filter with replicated edges; kernel normalized to 1.
Plane gaussian_filter(const Plane& p, int radius, double sigma);

}  // namespace rawbench::enhance
