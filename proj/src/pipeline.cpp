#include "rawbench/pipeline.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace rawbench::pipeline {

namespace {

constexpr double kSrgbLinearCut = 0.0031308;
constexpr double kSrgbCodedCut = 12.92 * kSrgbLinearCut;  // 0.04045 (to full precision)
constexpr double kAdobeExponent = 2.19921875;

void require_unit_input(const Plane& p, const char* op) {
    if (!((p >= 0.0) && (p <= 1.0)).all()) {
        throw std::domain_error(std::string(op) + ": input outside [0, 1]");
    }
}

void require_unit_scalar(double x, const char* op) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error(std::string(op) + ": input outside [0, 1]");
    }
}

double quantize_value(double x, double scale) {
    return static_cast<double>(std::llround(x * scale));
}

}  // namespace

BayerImage calibrate(const SensorFrame& frame, const CameraProfile& profile) {
    validate_profile(profile);
    const double range = profile.saturation - profile.black_level;
    Plane v = (frame.samples().cast<double>() - profile.black_level) / range;
    return BayerImage(clamp_unit(v), frame.pattern());
}

SensorFrame decalibrate(const BayerImage& img, const CameraProfile& profile) {
    validate_profile(profile);
    const double range = profile.saturation - profile.black_level;
    const double black = profile.black_level;
    PlaneU16 dn = img.values().unaryExpr([range, black](double v) {
        return static_cast<std::uint16_t>(std::llround(v * range + black));
    });
    int bits = 1;
    while ((1 << bits) - 1 < profile.saturation) ++bits;
    return SensorFrame(std::move(dn), bits, img.pattern());
}

Plane resize_bilinear(const Plane& src, Eigen::Index out_h, Eigen::Index out_w) {
    const Eigen::Index in_h = src.rows();
    const Eigen::Index in_w = src.cols();
    const double sy = static_cast<double>(in_h) / static_cast<double>(out_h);
    const double sx = static_cast<double>(in_w) / static_cast<double>(out_w);

    struct Taps {
        Eigen::Index lo, hi;
        double t;
    };
    auto make_taps = [](Eigen::Index n_out, Eigen::Index n_in, double s) {
        std::vector<Taps> taps(static_cast<std::size_t>(n_out));
        for (Eigen::Index o = 0; o < n_out; ++o) {
            // Source sample i sits at (i + 0.5) / n_in of the image extent.
            const double f = (static_cast<double>(o) + 0.5) * s - 0.5;
            const double fl = std::floor(f);
            double t = f - fl;
            Eigen::Index lo = static_cast<Eigen::Index>(fl);
            Eigen::Index hi = lo + 1;
            if (lo < 0) { lo = 0; hi = 0; t = 0.0; }
            if (hi > n_in - 1) { hi = n_in - 1; lo = n_in - 1; t = 0.0; }
            taps[static_cast<std::size_t>(o)] = {lo, hi, t};
        }
        return taps;
    };
    const auto ty = make_taps(out_h, in_h, sy);
    const auto tx = make_taps(out_w, in_w, sx);

    Plane out(out_h, out_w);
    for (Eigen::Index y = 0; y < out_h; ++y) {
        const auto& ry = ty[static_cast<std::size_t>(y)];
        for (Eigen::Index x = 0; x < out_w; ++x) {
            const auto& cx = tx[static_cast<std::size_t>(x)];
            const double top = (1.0 - cx.t) * src(ry.lo, cx.lo) + cx.t * src(ry.lo, cx.hi);
            const double bot = (1.0 - cx.t) * src(ry.hi, cx.lo) + cx.t * src(ry.hi, cx.hi);
            out(y, x) = (1.0 - ry.t) * top + ry.t * bot;
        }
    }
    return out;
}

LinearRgbImage demosaic_bilinear(const BayerImage& img) {
    const auto h = img.height();
    const auto w = img.width();
    const PackedRaw packed = pack_bayer(img);
    const Plane g_half = 0.5 * (packed.channel(1) + packed.channel(2));
    std::array<Plane, 3> ch;
    ch[0] = clamp_unit(resize_bilinear(packed.channel(0), h, w));
    ch[1] = clamp_unit(resize_bilinear(g_half, h, w));
    ch[2] = clamp_unit(resize_bilinear(packed.channel(3), h, w));
    return LinearRgbImage(std::move(ch));
}

LinearRgbImage white_balance(const LinearRgbImage& img, const Vec3& gains) {
    if (!(gains.array() > 0.0).all()) {
        throw std::invalid_argument("white_balance: non-positive gain");
    }
    std::array<Plane, 3> ch;
    for (int c = 0; c < 3; ++c) {
        ch[c] = clamp_unit(img.channel(c) * gains[c]);
    }
    return LinearRgbImage(std::move(ch));
}

LinearRgbImage color_correct(const LinearRgbImage& img, const Mat3& ccm) {
    if (std::abs(ccm.determinant()) <= 1e-9) {
        throw std::invalid_argument("color_correct: ccm singular");
    }
    std::array<Plane, 3> ch;
    for (int c = 0; c < 3; ++c) {
        ch[c] = clamp_unit(img.channel(0) * ccm(0, c) + img.channel(1) * ccm(1, c) +
                           img.channel(2) * ccm(2, c));
    }
    return LinearRgbImage(std::move(ch));
}

LinearRgbImage linear_process(const BayerImage& img, const Vec3& gains, const Mat3& ccm) {
    return color_correct(white_balance(demosaic_bilinear(img), gains), ccm);
}

double gamma_compress(double x, GammaStandard std_) {
    require_unit_scalar(x, "gamma_compress");
    if (std_ == GammaStandard::Srgb) {
        return x <= kSrgbLinearCut ? 12.92 * x : 1.055 * std::pow(x, 1.0 / 2.4) - 0.055;
    }
    return std::pow(x, 1.0 / kAdobeExponent);
}

double gamma_expand(double y, GammaStandard std_) {
    require_unit_scalar(y, "gamma_expand");
    if (std_ == GammaStandard::Srgb) {
        return y <= kSrgbCodedCut ? y / 12.92 : std::pow((y + 0.055) / 1.055, 2.4);
    }
    return std::pow(y, kAdobeExponent);
}

Plane gamma_compress(const Plane& x, GammaStandard std_) {
    require_unit_input(x, "gamma_compress");
    return x.unaryExpr([std_](double v) { return gamma_compress(v, std_); });
}

Plane gamma_expand(const Plane& y, GammaStandard std_) {
    require_unit_input(y, "gamma_expand");
    return y.unaryExpr([std_](double v) { return gamma_expand(v, std_); });
}

double tone_map(double x, ToneCurve curve) {
    if (curve == ToneCurve::Identity) return x;
    return x * x * (3.0 - 2.0 * x);
}

double tone_unmap(double y, ToneCurve curve) {
    if (curve == ToneCurve::Identity) return y;
    // 3x^2 - 2x^3 is strictly increasing on [0, 1]; bisect to ~1e-12.
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (tone_map(mid, curve) < y) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

Plane tone_map(const Plane& x, ToneCurve curve) {
    if (curve == ToneCurve::Identity) return x;
    return x.unaryExpr([curve](double v) { return tone_map(v, curve); });
}

Plane tone_unmap(const Plane& y, ToneCurve curve) {
    if (curve == ToneCurve::Identity) return y;
    return y.unaryExpr([curve](double v) { return tone_unmap(v, curve); });
}

SrgbImage process(const LinearRgbImage& img, const CameraProfile& profile) {
    std::array<Plane, 3> ch;
    for (int c = 0; c < 3; ++c) {
        ch[c] = tone_map(gamma_compress(img.channel(c), profile.gamma_standard),
                         profile.tone_curve);
    }
    return SrgbImage(std::move(ch));
}

QuantizedImage quantize(const SrgbImage& img, int bits) {
    if (bits != 8 && bits != 16) {
        throw std::invalid_argument("quantize: unsupported bit depth");
    }
    const double scale = static_cast<double>((1u << bits) - 1u);
    std::array<PlaneU16, 3> ch;
    for (int c = 0; c < 3; ++c) {
        ch[c] = img.channel(c).unaryExpr([scale](double v) {
            return static_cast<std::uint16_t>(quantize_value(v, scale));
        });
    }
    return QuantizedImage(std::move(ch), bits);
}

SrgbImage dequantize(const QuantizedImage& img) {
    const double scale = static_cast<double>((1u << img.bit_depth()) - 1u);
    std::array<Plane, 3> ch;
    for (int c = 0; c < 3; ++c) {
        ch[c] = img.channel(c).cast<double>() / scale;
    }
    return SrgbImage(std::move(ch));
}

Plane snap_to_code_grid(const Plane& values, int bits) {
    if (bits != 8 && bits != 16) {
        throw std::invalid_argument("snap_to_code_grid: unsupported bit depth");
    }
    require_unit_input(values, "snap_to_code_grid");
    const double scale = static_cast<double>((1u << bits) - 1u);
    return values.unaryExpr([scale](double v) { return quantize_value(v, scale) / scale; });
}

QuantizedImage full_pipeline(const SensorFrame& frame, const CameraProfile& profile,
                             const Vec3& gains, int bits) {
    const BayerImage raw = calibrate(frame, profile);
    const LinearRgbImage lin = linear_process(raw, gains, profile.ccm);
    return quantize(process(lin, profile), bits);
}

}  // namespace rawbench::pipeline
