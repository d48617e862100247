#include "rawbench/scenes.hpp"

#include "rawbench/noise.hpp"
#include "rawbench/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace rawbench::fem {

namespace {

using noise::uniform_unit;

// Classic 24-chip checker layout, 4 rows x 6 columns, roughly linear-domain
// reflectances. Plenty of distinct chroma for color-handling tests.
constexpr double kCheckerChips[24][3] = {
    {0.45, 0.32, 0.27}, {0.77, 0.58, 0.50}, {0.36, 0.48, 0.61}, {0.34, 0.42, 0.26},
    {0.51, 0.50, 0.69}, {0.39, 0.74, 0.67}, {0.85, 0.47, 0.15}, {0.29, 0.36, 0.64},
    {0.76, 0.35, 0.38}, {0.36, 0.23, 0.42}, {0.62, 0.73, 0.25}, {0.90, 0.63, 0.18},
    {0.19, 0.25, 0.58}, {0.28, 0.58, 0.29}, {0.69, 0.19, 0.22}, {0.93, 0.78, 0.12},
    {0.73, 0.33, 0.58}, {0.09, 0.53, 0.66}, {0.95, 0.95, 0.95}, {0.78, 0.78, 0.78},
    {0.62, 0.62, 0.62}, {0.46, 0.46, 0.46}, {0.30, 0.30, 0.30}, {0.15, 0.15, 0.15}};

// Linear-light scene values are skewed toward the dark end; night scenes are
// mostly shadow with sparse highlights.
double dark_skew(double v) { return std::pow(v, 2.2); }

int cfa_channel(Eigen::Index y, Eigen::Index x) {
    const bool even_y = (y % 2) == 0;
    const bool even_x = (x % 2) == 0;
    if (even_y && even_x) return 0;   // R
    if (!even_y && !even_x) return 2; // B
    return 1;                         // G
}

template <typename RgbAt>
Plane mosaic_from_rgb(int size, RgbAt&& rgb_at) {
    Plane out(size, size);
    for (Eigen::Index y = 0; y < size; ++y) {
        for (Eigen::Index x = 0; x < size; ++x) {
            const auto rgb = rgb_at(y, x);
            out(y, x) = rgb[cfa_channel(y, x)];
        }
    }
    return out;
}

Plane flat_scene(int size, std::uint64_t seed) {
    const double v = 0.25 + 0.5 * uniform_unit(seed, 0);
    return Plane::Constant(size, size, v);
}

Plane ramp_scene(int size) {
    Plane out(size, size);
    for (Eigen::Index x = 0; x < size; ++x) {
        const double t = static_cast<double>(x) / (size - 1);
        out.col(x).setConstant(0.02 + 0.96 * dark_skew(t));
    }
    return out;
}

Plane checker_scene(int size, std::uint64_t seed) {
    const int rows = 4, cols = 6;
    return mosaic_from_rgb(size, [&](Eigen::Index y, Eigen::Index x) {
        const int r = std::min<int>(rows - 1, static_cast<int>(y * rows / size));
        const int c = std::min<int>(cols - 1, static_cast<int>(x * cols / size));
        const int chip = r * cols + c;
        const double scale = 0.92 + 0.12 * uniform_unit(seed, static_cast<std::uint64_t>(chip));
        std::array<double, 3> rgb;
        for (int k = 0; k < 3; ++k) rgb[k] = std::pow(kCheckerChips[chip][k], 1.6) * scale;
        return rgb;
    });
}

Plane smooth_noise_scene(int size, std::uint64_t seed) {
    const Eigen::Index grid = std::max<Eigen::Index>(4, size / 16);
    std::array<Plane, 3> coarse;
    for (int c = 0; c < 3; ++c) {
        coarse[c] = Plane(grid, grid);
        for (Eigen::Index i = 0; i < grid; ++i) {
            for (Eigen::Index j = 0; j < grid; ++j) {
                const auto cell = static_cast<std::uint64_t>((i * grid + j) * 3 + c);
                coarse[c](i, j) = 0.05 + 0.9 * dark_skew(uniform_unit(seed, cell));
            }
        }
        coarse[c] = pipeline::resize_bilinear(coarse[c], size, size);
    }
    return mosaic_from_rgb(size, [&](Eigen::Index y, Eigen::Index x) {
        return std::array<double, 3>{coarse[0](y, x), coarse[1](y, x), coarse[2](y, x)};
    });
}

Plane edges_scene(int size, std::uint64_t seed) {
    std::array<Plane, 3> field;
    for (int c = 0; c < 3; ++c) field[c] = Plane::Constant(size, size, 0.12);
    const int rects = 10;
    for (int k = 0; k < rects; ++k) {
        const auto at = [&](int slot) {
            return uniform_unit(seed, static_cast<std::uint64_t>(k * 8 + slot));
        };
        const auto x0 = static_cast<Eigen::Index>(at(0) * size * 0.8);
        const auto y0 = static_cast<Eigen::Index>(at(1) * size * 0.8);
        const auto rw = static_cast<Eigen::Index>(2 + at(2) * size * 0.5);
        const auto rh = static_cast<Eigen::Index>(2 + at(3) * size * 0.5);
        const auto x1 = std::min<Eigen::Index>(size, x0 + rw);
        const auto y1 = std::min<Eigen::Index>(size, y0 + rh);
        const double rgb[3] = {0.05 + 0.9 * dark_skew(at(4)), 0.05 + 0.9 * dark_skew(at(5)),
                               0.05 + 0.9 * dark_skew(at(6))};
        for (int c = 0; c < 3; ++c) {
            field[c].block(y0, x0, y1 - y0, x1 - x0).setConstant(rgb[c]);
        }
    }
    return mosaic_from_rgb(size, [&](Eigen::Index y, Eigen::Index x) {
        return std::array<double, 3>{field[0](y, x), field[1](y, x), field[2](y, x)};
    });
}

}  // namespace

const char* scene_kind_name(SceneKind kind) {
    switch (kind) {
        case SceneKind::Flat: return "flat";
        case SceneKind::Ramp: return "ramp";
        case SceneKind::ColorChecker: return "colorchecker";
        case SceneKind::SmoothNoise: return "smoothnoise";
        case SceneKind::Edges: return "edges";
    }
    return "unknown";
}

BayerImage synth_scene(SceneKind kind, int size, std::uint64_t seed) {
    if (size <= 0 || size % 2 != 0) {
        throw std::invalid_argument("synth_scene: size must be positive and even");
    }
    Plane mosaic;
    switch (kind) {
        case SceneKind::Flat: mosaic = flat_scene(size, seed); break;
        case SceneKind::Ramp: mosaic = ramp_scene(size); break;
        case SceneKind::ColorChecker: mosaic = checker_scene(size, seed); break;
        case SceneKind::SmoothNoise: mosaic = smooth_noise_scene(size, seed); break;
        case SceneKind::Edges: mosaic = edges_scene(size, seed); break;
    }
    return BayerImage(mosaic.max(0.02).min(0.98));
}

namespace {

ScenePair assemble_pair(BayerImage y_s, BayerImage x_l, double gamma,
                        const CameraProfile& profile, std::string id) {
    const LinearRgbImage lin = pipeline::linear_process(x_l, profile.wb_true, profile.ccm);
    QuantizedImage gt = pipeline::quantize(pipeline::process(lin, profile), 16);
    const double t_short = 0.125;
    ExposurePair exposures(std::move(y_s), std::move(x_l), t_short, t_short * gamma, gamma,
                           profile);
    return ScenePair{std::move(id), std::move(exposures), std::move(gt)};
}

}  // namespace

ScenePair make_pair(const BayerImage& scene, double gamma, const CameraProfile& profile,
                    std::uint64_t seed, std::string id) {
    validate_profile(profile);
    if (!(gamma >= 1.0)) throw std::invalid_argument("make_pair: gamma must be >= 1");

    const BayerImage x_s = noise::derive_short_exposure(scene, gamma);
    const noise::NoiseParams params{profile.lambda_shot, profile.lambda_read, seed};
    BayerImage y_s = noise::add_shot_read_noise(x_s, params);
    return assemble_pair(std::move(y_s), scene, gamma, profile, std::move(id));
}

ScenePair make_pair_from_radiance(const Plane& radiance, double gamma,
                                  const CameraProfile& profile, std::uint64_t seed,
                                  std::string id) {
    validate_profile(profile);
    if (!(gamma >= 1.0)) {
        throw std::invalid_argument("make_pair_from_radiance: gamma must be >= 1");
    }
    if ((radiance < 0.0).any() || (radiance > gamma).any()) {
        throw std::invalid_argument(
            "make_pair_from_radiance: radiance must lie in [0, gamma]");
    }
    const BayerImage x_s(radiance / gamma);
    const noise::NoiseParams params{profile.lambda_shot, profile.lambda_read, seed};
    BayerImage y_s = noise::add_shot_read_noise(x_s, params);
    BayerImage x_l(clamp_unit(radiance));  // the long observation saturates
    return assemble_pair(std::move(y_s), std::move(x_l), gamma, profile, std::move(id));
}

const std::vector<double>& default_gammas() {
    static const std::vector<double> gammas{10.0, 30.0, 100.0, 300.0};
    return gammas;
}

double corpus_highlight_boost(std::uint64_t seed, std::uint64_t scene_index) {
    return 1.15 + 0.7 * uniform_unit(seed, 700 + scene_index);
}

std::vector<ScenePair> default_corpus(const CameraProfile& profile, std::uint64_t seed) {
    constexpr SceneKind kinds[] = {SceneKind::Ramp, SceneKind::ColorChecker,
                                   SceneKind::SmoothNoise, SceneKind::Edges};
    constexpr int kSceneSeeds = 5;
    constexpr int kSize = 128;

    std::vector<ScenePair> corpus;
    corpus.reserve(4 * kSceneSeeds * default_gammas().size());
    std::uint64_t pair_index = 0;
    std::uint64_t scene_index = 0;
    for (const SceneKind kind : kinds) {
        for (int s = 0; s < kSceneSeeds; ++s) {
            const BayerImage scene =
                synth_scene(kind, kSize, seed + static_cast<std::uint64_t>(s));
            const double boost = corpus_highlight_boost(seed, scene_index++);
            for (const double gamma : default_gammas()) {
                char id[64];
                std::snprintf(id, sizeof(id), "%s_s%d_g%g", scene_kind_name(kind), s, gamma);
                corpus.push_back(make_pair_from_radiance(
                    scene.values() * boost, gamma, profile,
                    noise::counter_hash(seed, 1000 + pair_index), id));
                ++pair_index;
            }
        }
    }
    return corpus;
}

}  // namespace rawbench::fem
