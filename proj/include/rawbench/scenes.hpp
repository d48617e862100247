#pragma once

#include "rawbench/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rawbench::fem {

enum class SceneKind { Flat, Ramp, ColorChecker, SmoothNoise, Edges };

const char* scene_kind_name(SceneKind kind);

/// Deterministic clean long-exposure mosaic for (kind, size, seed).
/// Values stay in [0.02, 0.98] to leave noise headroom.
BayerImage synth_scene(SceneKind kind, int size, std::uint64_t seed);

/// A benchmark cell's raw material: the clean long exposure, the noisy short
/// exposure derived from it, and the rendered ground truth.
struct ScenePair {
    std::string id;
    ExposurePair exposures;       // short = noisy y_s, long = clean x_l
    QuantizedImage ground_truth;  // 16-bit render of x_l with the true gains

    const BayerImage& noisy_short() const { return exposures.short_exposure(); }
    const BayerImage& clean_long() const { return exposures.long_exposure(); }
    double gamma() const { return exposures.gamma(); }
    const CameraProfile& profile() const { return exposures.profile(); }
};

/// x_s = scene / gamma; y_s = x_s + shot/read noise; ground truth is the
/// processed clean scene with the true white balance, quantized at 16 bits.
ScenePair make_pair(const BayerImage& scene, double gamma, const CameraProfile& profile,
                    std::uint64_t seed, std::string id = "pair");

/// Pair built from a latent radiance field that may exceed the sensor's
/// range. The short exposure sees radiance / gamma (always in range); the
/// long-exposure observation saturates at 1, which biases the mean-ratio
/// estimate downward exactly as clipped highlights do on a real camera.
/// Requires radiance >= 0 and radiance / gamma <= 1.
ScenePair make_pair_from_radiance(const Plane& radiance, double gamma,
                                  const CameraProfile& profile, std::uint64_t seed,
                                  std::string id = "pair");

/// Toolkit default corpus: {Ramp, ColorChecker, SmoothNoise, Edges} x 5 scene
/// seeds x gamma in {10, 30, 100, 300}, 128x128. Each scene is lifted by a
/// per-scene highlight boost before pairing, so a seed-dependent share of
/// every long exposure saturates.
std::vector<ScenePair> default_corpus(const CameraProfile& profile, std::uint64_t seed);

/// Highlight boost used by default_corpus and the synth CLI for scene
/// index k under the given root seed.
double corpus_highlight_boost(std::uint64_t seed, std::uint64_t scene_index);

/// Gammas used by default_corpus.
const std::vector<double>& default_gammas();

}  // namespace rawbench::fem
