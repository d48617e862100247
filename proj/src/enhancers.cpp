#include "rawbench/enhancers.hpp"

#include "rawbench/noise.hpp"
#include "rawbench/pipeline.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rawbench::enhance {

namespace {

/// Render a packed linear input to sRGB. Metered gains are applied unless the
/// variant already baked them in.
SrgbImage render_packed(const PackedRaw& packed, const EnhancerInput& input) {
    const BayerImage mosaic = unpack_bayer(packed);
    const Vec3 gains = input.wb_applied ? Vec3::Ones() : Vec3(input.profile.wb_metered);
    const LinearRgbImage lin =
        pipeline::linear_process(mosaic, gains, input.profile.ccm);
    return pipeline::process(lin, input.profile);
}

/// sRGB-domain brightening: invert the nonlinear stage, scale by the ratio,
/// reapply the nonlinear stage.
SrgbImage brighten_srgb(const SrgbImage& img, double ratio, const CameraProfile& profile) {
    const LinearRgbImage lin =
        handcrafted_unprocess(img, profile.gamma_standard, profile.tone_curve);
    return pipeline::process(noise::brighten(lin, ratio), profile);
}

Eigen::VectorXd gaussian_kernel(int radius, double sigma) {
    if (radius < 1) throw std::invalid_argument("gaussian kernel: radius must be >= 1");
    if (!(sigma > 0.0)) throw std::invalid_argument("gaussian kernel: sigma must be positive");
    Eigen::VectorXd k(2 * radius + 1);
    for (int i = -radius; i <= radius; ++i) {
        k(i + radius) = std::exp(-0.5 * (i * i) / (sigma * sigma));
    }
    k /= k.sum();
    return k;
}

}  // namespace

Plane gaussian_filter(const Plane& p, int radius, double sigma) {
    const Eigen::VectorXd k = gaussian_kernel(radius, sigma);
    const Eigen::Index h = p.rows();
    const Eigen::Index w = p.cols();
    auto clampi = [](Eigen::Index v, Eigen::Index n) {
        return std::min(std::max<Eigen::Index>(v, 0), n - 1);
    };
    Plane tmp(h, w);
    for (Eigen::Index y = 0; y < h; ++y) {
        for (Eigen::Index x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i) {
                acc += p(y, clampi(x + i, w)) * k(i + radius);
            }
            tmp(y, x) = acc;
        }
    }
    Plane out(h, w);
    for (Eigen::Index y = 0; y < h; ++y) {
        for (Eigen::Index x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i) {
                acc += tmp(clampi(y + i, h), x) * k(i + radius);
            }
            out(y, x) = acc;
        }
    }
    return out;
}

LinearRgbImage handcrafted_unprocess(const SrgbImage& img, GammaStandard std_, ToneCurve tone) {
    std::array<Plane, 3> ch;
    for (int c = 0; c < 3; ++c) {
        ch[c] = clamp_unit(pipeline::gamma_expand(pipeline::tone_unmap(img.channel(c), tone), std_));
    }
    return LinearRgbImage(std::move(ch));
}

SrgbImage identity_enhancer(const EnhancerInput& input) {
    if (input.domain == fem::InputDomain::PackedLinear) {
        PackedRaw packed = input.packed();
        if (input.gamma_given && *input.gamma_given != 1.0) {
            packed = noise::brighten(packed, *input.gamma_given);
        }
        return render_packed(packed, input);
    }
    const SrgbImage& srgb = input.srgb();
    if (!input.gamma_given || *input.gamma_given == 1.0) return srgb;
    return brighten_srgb(srgb, *input.gamma_given, input.profile);
}

EnhancerFn gaussian_denoise_enhancer(int radius, double sigma) {
    gaussian_kernel(radius, sigma);  // validate parameters up front
    return [radius, sigma](const EnhancerInput& input) -> SrgbImage {
        if (input.domain == fem::InputDomain::PackedLinear) {
            PackedRaw packed = input.packed();
            if (input.gamma_given && *input.gamma_given != 1.0) {
                packed = noise::brighten(packed, *input.gamma_given);
            }
            std::array<Plane, 4> ch;
            for (int c = 0; c < 4; ++c) {
                ch[c] = clamp_unit(gaussian_filter(packed.channel(c), radius, sigma));
            }
            return render_packed(PackedRaw(std::move(ch)), input);
        }
        SrgbImage srgb = input.srgb();
        if (input.gamma_given && *input.gamma_given != 1.0) {
            srgb = brighten_srgb(srgb, *input.gamma_given, input.profile);
        }
        std::array<Plane, 3> ch;
        for (int c = 0; c < 3; ++c) {
            ch[c] = clamp_unit(gaussian_filter(srgb.channel(c), radius, sigma));
        }
        return SrgbImage(std::move(ch));
    };
}

SrgbImage hist_eq_enhancer(const EnhancerInput& input) {
    if (input.domain != fem::InputDomain::Srgb) {
        throw std::invalid_argument("hist_eq_enhancer: non-sRGB-domain input");
    }
    if (input.quant_bits != 8 && input.quant_bits != 16) {
        throw std::invalid_argument("hist_eq_enhancer: input must be 8- or 16-bit quantized");
    }
    const SrgbImage& srgb = input.srgb();
    const int levels = 1 << input.quant_bits;
    const double scale = levels - 1.0;
    const double total = static_cast<double>(srgb.height() * srgb.width());

    std::array<Plane, 3> out;
    for (int c = 0; c < 3; ++c) {
        std::vector<double> cdf(static_cast<std::size_t>(levels), 0.0);
        const Plane& p = srgb.channel(c);
        for (Eigen::Index i = 0; i < p.size(); ++i) {
            cdf[static_cast<std::size_t>(std::llround(p(i) * scale))] += 1.0;
        }
        for (int v = 1; v < levels; ++v) cdf[v] += cdf[v - 1];
        out[c] = p.unaryExpr([&cdf, scale, total](double v) {
            return cdf[static_cast<std::size_t>(std::llround(v * scale))] / total;
        });
    }
    return SrgbImage(std::move(out));
}

SrgbImage StageChain::run(const SrgbImage& input, double gamma_prime) const {
    const LinearRgbImage lin = unprocess(input);
    const LinearRgbImage brightened = noise::brighten(lin, gamma_prime);
    const LinearRgbImage enhanced = enhance(brightened, gamma_prime);
    return process(enhanced);
}

LinearRgbImage identity_linear_denoise(const LinearRgbImage& img, double) { return img; }

std::function<LinearRgbImage(const LinearRgbImage&, double)> gaussian_linear_denoise(
    int radius, double sigma) {
    gaussian_kernel(radius, sigma);
    return [radius, sigma](const LinearRgbImage& img, double) {
        std::array<Plane, 3> ch;
        for (int c = 0; c < 3; ++c) {
            ch[c] = clamp_unit(gaussian_filter(img.channel(c), radius, sigma));
        }
        return LinearRgbImage(std::move(ch));
    };
}

StageChain reenet_oracle_chain(const CameraProfile& profile, GammaSource gamma_source,
                               std::function<LinearRgbImage(const LinearRgbImage&, double)>
                                   denoise) {
    validate_profile(profile);
    StageChain chain;
    chain.unprocess = [profile](const SrgbImage& s) {
        return handcrafted_unprocess(s, profile.gamma_standard, profile.tone_curve);
    };
    chain.enhance = std::move(denoise);
    chain.process = [profile](const LinearRgbImage& l) { return pipeline::process(l, profile); };
    chain.gamma_source = gamma_source;
    return chain;
}

EnhancerFn as_enhancer(StageChain chain) {
    return [chain = std::move(chain)](const EnhancerInput& input) -> SrgbImage {
        if (input.domain != fem::InputDomain::Srgb) {
            throw std::invalid_argument("stage chain: expects an sRGB-domain input");
        }
        return chain.run(input.srgb(), input.gamma_given.value_or(1.0));
    };
}

std::map<std::string, EnhancerFn> default_registry() {
    std::map<std::string, EnhancerFn> registry;
    registry["identity"] = identity_enhancer;
    registry["gaussian"] = gaussian_denoise_enhancer(2, 1.2);
    registry["histeq"] = hist_eq_enhancer;
    registry["reenet"] = [](const EnhancerInput& input) {
        const StageChain chain = reenet_oracle_chain(
            input.profile, GammaSource::TrueGamma, gaussian_linear_denoise(2, 1.2));
        return as_enhancer(chain)(input);
    };
    return registry;
}

}  // namespace rawbench::enhance
