#include "rawbench/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace rawbench::fem {

namespace {

constexpr int kWindow = 11;
constexpr double kWindowSigma = 1.5;
constexpr double kC1 = 0.01 * 0.01;  // (K1 * L)^2, L = 1
constexpr double kC2 = 0.03 * 0.03;

void require_same_shape(std::span<const Plane> a, std::span<const Plane> b, const char* op) {
    if (a.size() != b.size() || a.empty()) {
        throw std::invalid_argument(std::string(op) + ": shape mismatch");
    }
    for (std::size_t c = 0; c < a.size(); ++c) {
        if (a[c].rows() != b[c].rows() || a[c].cols() != b[c].cols()) {
            throw std::invalid_argument(std::string(op) + ": shape mismatch");
        }
    }
}

const Eigen::Array<double, kWindow, 1>& window_kernel() {
    static const auto kernel = [] {
        Eigen::Array<double, kWindow, 1> k;
        const int half = kWindow / 2;
        for (int i = 0; i < kWindow; ++i) {
            const double d = i - half;
            k(i) = std::exp(-d * d / (2.0 * kWindowSigma * kWindowSigma));
        }
        k /= k.sum();
        return k;
    }();
    return kernel;
}

// Separable valid-mode convolution with the SSIM window.
Plane window_filter_valid(const Plane& p) {
    const auto& k = window_kernel();
    const Eigen::Index h = p.rows();
    const Eigen::Index w = p.cols();
    Plane tmp(h, w - kWindow + 1);
    for (Eigen::Index y = 0; y < h; ++y) {
        for (Eigen::Index x = 0; x + kWindow <= w; ++x) {
            double acc = 0.0;
            for (int i = 0; i < kWindow; ++i) acc += p(y, x + i) * k(i);
            tmp(y, x) = acc;
        }
    }
    Plane out(h - kWindow + 1, tmp.cols());
    for (Eigen::Index y = 0; y + kWindow <= h; ++y) {
        for (Eigen::Index x = 0; x < tmp.cols(); ++x) {
            double acc = 0.0;
            for (int i = 0; i < kWindow; ++i) acc += tmp(y + i, x) * k(i);
            out(y, x) = acc;
        }
    }
    return out;
}

}  // namespace

double psnr(std::span<const Plane> a, std::span<const Plane> b, double peak) {
    require_same_shape(a, b, "psnr");
    double sum_sq = 0.0;
    double count = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) {
        sum_sq += (a[c] - b[c]).square().sum();
        count += static_cast<double>(a[c].size());
    }
    const double mse = sum_sq / count;
    if (mse < 1e-10) return 100.0;
    const double db = 10.0 * std::log10(peak * peak / mse);
    return std::min(100.0, std::max(0.0, db));
}

double ssim(std::span<const Plane> a, std::span<const Plane> b) {
    require_same_shape(a, b, "ssim");
    if (a[0].rows() < kWindow || a[0].cols() < kWindow) {
        throw std::invalid_argument("ssim: image smaller than window");
    }
    double total = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) {
        const Plane mu_a = window_filter_valid(a[c]);
        const Plane mu_b = window_filter_valid(b[c]);
        const Plane ev_aa = window_filter_valid(a[c] * a[c]);
        const Plane ev_bb = window_filter_valid(b[c] * b[c]);
        const Plane ev_ab = window_filter_valid(a[c] * b[c]);

        const Plane var_a = ev_aa - mu_a * mu_a;
        const Plane var_b = ev_bb - mu_b * mu_b;
        const Plane cov = ev_ab - mu_a * mu_b;

        const Plane score = ((2.0 * mu_a * mu_b + kC1) * (2.0 * cov + kC2)) /
                            ((mu_a * mu_a + mu_b * mu_b + kC1) * (var_a + var_b + kC2));
        total += score.mean();
    }
    return total / static_cast<double>(a.size());
}

double psnr(const SrgbImage& a, const SrgbImage& b, double peak) {
    return psnr(std::span<const Plane>(a.channels()), std::span<const Plane>(b.channels()), peak);
}

double ssim(const SrgbImage& a, const SrgbImage& b) {
    return ssim(std::span<const Plane>(a.channels()), std::span<const Plane>(b.channels()));
}

double psnr(const BayerImage& a, const BayerImage& b, double peak) {
    return psnr(std::span<const Plane>(&a.values(), 1), std::span<const Plane>(&b.values(), 1),
                peak);
}

double ssim(const BayerImage& a, const BayerImage& b) {
    return ssim(std::span<const Plane>(&a.values(), 1), std::span<const Plane>(&b.values(), 1));
}

}  // namespace rawbench::fem
