#include "rawbench/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace rawbench::noise {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

void require_nonnegative(const NoiseParams& params) {
    if (params.lambda_shot < 0.0) throw std::invalid_argument("lambda_shot negative");
    if (params.lambda_read < 0.0) throw std::invalid_argument("lambda_read negative");
}

}  // namespace

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + (index + 1) * kGolden);
}

double uniform_unit(std::uint64_t seed, std::uint64_t index) {
    return static_cast<double>(counter_hash(seed, index) >> 11) * 0x1.0p-53;
}

double standard_normal(std::uint64_t seed, std::uint64_t draw_index) {
    // Box-Muller; u1 is kept strictly positive so the log is finite.
    const double u1 =
        (static_cast<double>(counter_hash(seed, 2 * draw_index) >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform_unit(seed, 2 * draw_index + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

SigmaMap sigma_map(const BayerImage& x, const NoiseParams& params) {
    require_nonnegative(params);
    return SigmaMap{(params.lambda_shot * x.values() + params.lambda_read).sqrt()};
}

Plane noise_field(const SigmaMap& map, std::uint64_t seed, int threads) {
    const Eigen::Index h = map.sigma.rows();
    const Eigen::Index w = map.sigma.cols();
    Plane out(h, w);

    auto fill_rows = [&](Eigen::Index y0, Eigen::Index y1) {
        for (Eigen::Index y = y0; y < y1; ++y) {
            for (Eigen::Index x = 0; x < w; ++x) {
                const std::uint64_t idx = static_cast<std::uint64_t>(y * w + x);
                out(y, x) = map.sigma(y, x) * standard_normal(seed, idx);
            }
        }
    };

    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 1 || h < 2 * threads) {
        fill_rows(0, h);
        return out;
    }
    std::vector<std::thread> workers;
    const Eigen::Index chunk = (h + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const Eigen::Index y0 = t * chunk;
        const Eigen::Index y1 = std::min<Eigen::Index>(h, y0 + chunk);
        if (y0 >= y1) break;
        workers.emplace_back(fill_rows, y0, y1);
    }
    for (auto& worker : workers) worker.join();
    return out;
}

BayerImage add_shot_read_noise(const BayerImage& x, const NoiseParams& params, int threads) {
    const SigmaMap map = sigma_map(x, params);
    const Plane n = noise_field(map, params.seed, threads);
    return BayerImage(clamp_unit(x.values() + n), x.pattern());
}

BayerImage derive_short_exposure(const BayerImage& x_long, double gamma) {
    if (!(gamma >= 1.0)) throw std::invalid_argument("derive_short_exposure: gamma < 1");
    return BayerImage(x_long.values() / gamma, x_long.pattern());
}

BayerImage brighten(const BayerImage& y, double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("brighten: gamma must be positive");
    return BayerImage(clamp_unit(gamma * y.values()), y.pattern());
}

LinearRgbImage brighten(const LinearRgbImage& y, double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("brighten: gamma must be positive");
    std::array<Plane, 3> ch;
    for (int c = 0; c < 3; ++c) ch[c] = clamp_unit(gamma * y.channel(c));
    return LinearRgbImage(std::move(ch));
}

PackedRaw brighten(const PackedRaw& y, double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("brighten: gamma must be positive");
    std::array<Plane, 4> ch;
    for (int c = 0; c < 4; ++c) ch[c] = clamp_unit(gamma * y.channel(c));
    return PackedRaw(std::move(ch));
}

SigmaMap brightened_sigma_map(const BayerImage& x_short, double gamma,
                              const NoiseParams& params) {
    require_nonnegative(params);
    if (!(gamma >= 1.0)) throw std::invalid_argument("brightened_sigma_map: gamma < 1");
    const Plane brightened = gamma * x_short.values();
    return SigmaMap{(gamma * params.lambda_shot * brightened +
                     gamma * gamma * params.lambda_read)
                        .sqrt()};
}

double estimate_gamma_hat(const BayerImage& short_linear, const BayerImage& long_linear) {
    const double mean_short = short_linear.values().mean();
    if (!(mean_short > 0.0)) {
        throw std::invalid_argument("estimate_gamma_hat: zero-mean short input");
    }
    return long_linear.values().mean() / mean_short;
}

Vec3 perturb_wb(const Vec3& w_true, double bias, std::uint64_t seed) {
    if (!(bias >= 0.0 && bias <= 0.5)) {
        throw std::invalid_argument("perturb_wb: bias outside [0, 0.5]");
    }
    Vec3 out;
    for (int c = 0; c < 3; ++c) {
        const double u = (2.0 * uniform_unit(seed, static_cast<std::uint64_t>(c)) - 1.0) * bias;
        out[c] = w_true[c] * (1.0 + u);
    }
    return out;
}

}  // namespace rawbench::noise
