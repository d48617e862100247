#include "rawbench/noise.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace rawbench;
namespace nz = rawbench::noise;

namespace {

double sample_variance(const Plane& p) {
    const double mean = p.mean();
    return (p - mean).square().sum() / (static_cast<double>(p.size()) - 1.0);
}

Plane random_plane(Eigen::Index h, Eigen::Index w, double lo, double hi, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    Plane p(h, w);
    for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = dist(rng);
    return p;
}

}  // namespace

TEST(SigmaMapTest, FormulaAndMonotonicity) {
    const nz::NoiseParams params{1e-4, 1e-6, 0};
    const BayerImage zero(Plane::Constant(2, 2, 0.0));
    EXPECT_DOUBLE_EQ(nz::sigma_map(zero, params).sigma(0, 0), std::sqrt(1e-6));
    const BayerImage mid(Plane::Constant(2, 2, 0.01));
    EXPECT_NEAR(nz::sigma_map(mid, params).sigma(0, 0), std::sqrt(2e-6), 1e-15);

    double prev = 0.0;
    for (int i = 0; i <= 20; ++i) {
        const BayerImage x(Plane::Constant(2, 2, i / 20.0));
        const double s = nz::sigma_map(x, params).sigma(0, 0);
        EXPECT_GE(s, prev);
        prev = s;
    }
    EXPECT_THROW(nz::sigma_map(zero, nz::NoiseParams{-1e-4, 1e-6, 0}), std::invalid_argument);
}

TEST(AddNoiseTest, ZeroLambdasAreIdentity) {
    const BayerImage x(random_plane(8, 8, 0.0, 1.0, 3));
    const BayerImage y = nz::add_shot_read_noise(x, nz::NoiseParams{0.0, 0.0, 123});
    EXPECT_TRUE((y.values() == x.values()).all());
}

TEST(AddNoiseTest, EmpiricalVarianceMatchesLaw) {
    // sigma^2 = 1e-4 * 0.01 + 1e-6 = 2e-6, far from the clip boundaries.
    const BayerImage x(Plane::Constant(1000, 1000, 0.01));
    const BayerImage y = nz::add_shot_read_noise(x, nz::NoiseParams{1e-4, 1e-6, 42});
    EXPECT_NEAR(sample_variance(y.values()) / 2e-6, 1.0, 0.03);
}

TEST(AddNoiseTest, DeterministicPerSeed) {
    const BayerImage x(random_plane(32, 32, 0.2, 0.8, 5));
    const nz::NoiseParams params{1e-3, 1e-5, 777};
    const BayerImage a = nz::add_shot_read_noise(x, params);
    const BayerImage b = nz::add_shot_read_noise(x, params);
    EXPECT_TRUE((a.values() == b.values()).all());
    const BayerImage c = nz::add_shot_read_noise(x, nz::NoiseParams{1e-3, 1e-5, 778});
    EXPECT_FALSE((a.values() == c.values()).all());
}

TEST(AddNoiseTest, SerialAndParallelAgreeBitExactly) {
    const BayerImage x(random_plane(64, 64, 0.1, 0.9, 6));
    const nz::NoiseParams params{1e-3, 1e-5, 99};
    const BayerImage serial = nz::add_shot_read_noise(x, params, 1);
    const BayerImage parallel = nz::add_shot_read_noise(x, params, 4);
    EXPECT_TRUE((serial.values() == parallel.values()).all());
}

TEST(NoiseFieldTest, HeteroscedasticLawAndZeroMean) {
    const nz::NoiseParams params{1e-4, 1e-6, 11};
    const Eigen::Index n = 500;
    for (const double level : {0.0, 0.05, 0.1, 0.5, 1.0}) {
        const BayerImage x(Plane::Constant(n, n, level));
        const Plane field = nz::noise_field(nz::sigma_map(x, params), params.seed);
        const double expected = 1e-4 * level + 1e-6;
        const double count = static_cast<double>(n * n);
        // 3x the variance estimator's own standard error.
        const double rel_tol = 3.0 * std::sqrt(2.0 / (count - 1.0));
        EXPECT_NEAR(sample_variance(field) / expected, 1.0, rel_tol) << "level " << level;
        EXPECT_LE(std::abs(field.mean()), 4.0 * std::sqrt(expected / count)) << level;
    }
}

TEST(DeriveShortTest, DivisionAndRoundTrip) {
    const BayerImage x(Plane::Constant(4, 4, 0.6));
    EXPECT_TRUE((nz::derive_short_exposure(x, 1.0).values() == x.values()).all());
    EXPECT_NEAR(nz::derive_short_exposure(x, 30.0).values()(0, 0), 0.02, 1e-15);
    EXPECT_THROW(nz::derive_short_exposure(x, 0.9), std::invalid_argument);

    const BayerImage scene(random_plane(16, 16, 0.05, 0.9, 8));
    const BayerImage round = nz::brighten(nz::derive_short_exposure(scene, 30.0), 30.0);
    EXPECT_LE((round.values() - scene.values()).abs().maxCoeff(), 1e-12);
}

TEST(BrightenTest, ScaleClipAndVariance) {
    const BayerImage a(Plane::Constant(2, 2, 0.02));
    EXPECT_NEAR(nz::brighten(a, 10.0).values()(0, 0), 0.2, 1e-15);
    const BayerImage b(Plane::Constant(2, 2, 0.2));
    EXPECT_DOUBLE_EQ(nz::brighten(b, 10.0).values()(0, 0), 1.0);
    EXPECT_THROW(nz::brighten(a, 0.0), std::invalid_argument);

    // Pre-clip variance scales by gamma^2; parameters keep 6 sigma inside [0,1].
    const nz::NoiseParams params{1e-5, 1e-8, 12};
    const BayerImage x(Plane::Constant(500, 500, 0.05));
    const BayerImage y = nz::add_shot_read_noise(x, params);
    const BayerImage brightened = nz::brighten(y, 10.0);
    EXPECT_NEAR(sample_variance(brightened.values()) / (100.0 * sample_variance(y.values())),
                1.0, 0.02);
}

TEST(BrightenedSigmaTest, FormulaAndMonteCarlo) {
    const nz::NoiseParams params{1e-4, 1e-6, 21};
    const BayerImage x(Plane::Constant(2, 2, 0.01));
    const auto unit = nz::brightened_sigma_map(x, 1.0, params);
    EXPECT_NEAR(unit.sigma(0, 0), nz::sigma_map(x, params).sigma(0, 0), 1e-15);

    // gamma = 10: sigma_b^2 = 10 * 1e-4 * 0.1 + 100 * 1e-6 = 2e-4.
    const auto b = nz::brightened_sigma_map(x, 10.0, params);
    EXPECT_NEAR(b.sigma(0, 0) * b.sigma(0, 0), 2e-4, 1e-15);

    const BayerImage field(Plane::Constant(640, 640, 0.01));
    const BayerImage noisy = nz::add_shot_read_noise(field, params);
    const BayerImage brightened = nz::brighten(noisy, 10.0);
    EXPECT_NEAR(sample_variance(brightened.values()) / 2e-4, 1.0, 0.03);
}

TEST(GammaHatTest, ExactAndBiasedCases) {
    const BayerImage scene(random_plane(16, 16, 0.1, 0.9, 31));
    const BayerImage shorter = nz::derive_short_exposure(scene, 20.0);
    EXPECT_NEAR(nz::estimate_gamma_hat(shorter, scene), 20.0, 1e-10);

    const BayerImage s(Plane::Constant(4, 4, 0.01));
    const BayerImage l(Plane::Constant(4, 4, 0.2));
    EXPECT_DOUBLE_EQ(nz::estimate_gamma_hat(s, l), 20.0);

    // A latent scene with saturated highlights: the observed long exposure is
    // clipped, so the estimate undershoots the true ratio.
    const double gamma = 30.0;
    Plane latent = random_plane(32, 32, 0.2, 1.5, 33);
    const BayerImage x_s(latent / gamma);
    const BayerImage x_l(latent.min(1.0));
    const double hat = nz::estimate_gamma_hat(x_s, x_l);
    EXPECT_LT(hat, gamma);

    EXPECT_THROW(
        nz::estimate_gamma_hat(BayerImage(Plane::Zero(4, 4)), BayerImage(Plane::Zero(4, 4))),
        std::invalid_argument);
}

TEST(GammaHatTest, InvariantToCommonRescale) {
    const BayerImage scene(random_plane(16, 16, 0.1, 0.9, 35));
    const BayerImage shorter = nz::derive_short_exposure(scene, 12.0);
    const double base = nz::estimate_gamma_hat(shorter, scene);
    const BayerImage scaled_short(0.5 * shorter.values());
    const BayerImage scaled_long(0.5 * scene.values());
    EXPECT_NEAR(nz::estimate_gamma_hat(scaled_short, scaled_long), base, 1e-12 * base);
}

TEST(PerturbWbTest, ZeroBiasBoundsAndDeterminism) {
    const Vec3 w{2.0, 1.0, 1.5};
    const Vec3 same = nz::perturb_wb(w, 0.0, 5);
    EXPECT_EQ(same, w);

    const Vec3 biased = nz::perturb_wb(w, 0.2, 5);
    for (int c = 0; c < 3; ++c) {
        EXPECT_GE(biased[c], w[c] * 0.8);
        EXPECT_LE(biased[c], w[c] * 1.2);
        EXPECT_GT(biased[c], 0.0);
    }
    EXPECT_EQ(nz::perturb_wb(w, 0.2, 5), biased);
    EXPECT_NE(nz::perturb_wb(w, 0.2, 6), biased);
    EXPECT_THROW(nz::perturb_wb(w, 0.6, 5), std::invalid_argument);
}
