#include "rawbench/types.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace rawbench {

namespace {

void require_even_dims(Eigen::Index h, Eigen::Index w, const char* what) {
    if (h <= 0 || w <= 0 || h % 2 != 0 || w % 2 != 0) {
        throw std::invalid_argument(std::string(what) + ": dimensions must be positive and even");
    }
}

void require_unit_range(const Plane& p, const char* what) {
    if (!((p >= 0.0) && (p <= 1.0)).all()) {
        throw std::invalid_argument(std::string(what) + ": values outside [0, 1]");
    }
}

void require_same_shape(Eigen::Index h0, Eigen::Index w0, Eigen::Index h, Eigen::Index w,
                        const char* what) {
    if (h != h0 || w != w0) {
        throw std::invalid_argument(std::string(what) + ": channel shapes differ");
    }
}

}  // namespace

Plane clamp_unit(const Plane& p) { return p.max(0.0).min(1.0); }

SensorFrame::SensorFrame(PlaneU16 samples, int bit_depth, CfaPattern pattern)
    : samples_(std::move(samples)), bit_depth_(bit_depth), pattern_(pattern) {
    require_even_dims(samples_.rows(), samples_.cols(), "SensorFrame");
    if (bit_depth_ < 1 || bit_depth_ > 16) {
        throw std::invalid_argument("SensorFrame: bit_depth outside [1, 16]");
    }
    const auto max_code = static_cast<std::uint16_t>((1u << bit_depth_) - 1u);
    if ((samples_ > max_code).any()) {
        throw std::invalid_argument("SensorFrame: sample exceeds 2^bit_depth - 1");
    }
}

CameraProfile validate_profile(const CameraProfile& profile) {
    if (!(profile.black_level < profile.saturation)) {
        throw std::invalid_argument("black_level >= saturation");
    }
    if (profile.lambda_shot < 0.0) throw std::invalid_argument("lambda_shot negative");
    if (profile.lambda_read < 0.0) throw std::invalid_argument("lambda_read negative");
    if (!(profile.wb_true.array() > 0.0).all() || !(profile.wb_metered.array() > 0.0).all()) {
        throw std::invalid_argument("white-balance gain not positive");
    }
    if (std::abs(profile.ccm.determinant()) <= 1e-9) {
        throw std::invalid_argument("ccm singular");
    }
    return profile;
}

CameraProfile default_profile() {
    CameraProfile p;
    p.black_level = 512.0;
    p.saturation = 16383.0;
    p.lambda_shot = 1e-5;
    p.lambda_read = 1e-7;
    p.wb_true = Vec3{2.0, 1.0, 1.5};
    p.wb_metered = Vec3{1.94, 0.99, 1.53};
    // Symmetric with unit row sums, so the gray axis survives in either
    // multiplication convention.
    p.ccm << 1.6, -0.4, -0.2,
             -0.4, 1.7, -0.3,
             -0.2, -0.3, 1.5;
    p.gamma_standard = GammaStandard::Srgb;
    p.tone_curve = ToneCurve::Identity;
    return validate_profile(p);
}

BayerImage::BayerImage(Plane values, CfaPattern pattern)
    : values_(std::move(values)), pattern_(pattern) {
    require_even_dims(values_.rows(), values_.cols(), "BayerImage");
    require_unit_range(values_, "BayerImage");
}

PackedRaw::PackedRaw(std::array<Plane, 4> channels) : channels_(std::move(channels)) {
    const auto h = channels_[0].rows();
    const auto w = channels_[0].cols();
    if (h <= 0 || w <= 0) throw std::invalid_argument("PackedRaw: empty channels");
    for (const auto& c : channels_) {
        require_same_shape(h, w, c.rows(), c.cols(), "PackedRaw");
        require_unit_range(c, "PackedRaw");
    }
}

LinearRgbImage::LinearRgbImage(std::array<Plane, 3> channels) : channels_(std::move(channels)) {
    const auto h = channels_[0].rows();
    const auto w = channels_[0].cols();
    if (h <= 0 || w <= 0) throw std::invalid_argument("LinearRgbImage: empty channels");
    for (const auto& c : channels_) {
        require_same_shape(h, w, c.rows(), c.cols(), "LinearRgbImage");
        require_unit_range(c, "LinearRgbImage");
    }
}

SrgbImage::SrgbImage(std::array<Plane, 3> channels) : channels_(std::move(channels)) {
    const auto h = channels_[0].rows();
    const auto w = channels_[0].cols();
    if (h <= 0 || w <= 0) throw std::invalid_argument("SrgbImage: empty channels");
    for (const auto& c : channels_) {
        require_same_shape(h, w, c.rows(), c.cols(), "SrgbImage");
        require_unit_range(c, "SrgbImage");
    }
}

QuantizedImage::QuantizedImage(std::array<PlaneU16, 3> channels, int bit_depth)
    : channels_(std::move(channels)), bit_depth_(bit_depth) {
    if (bit_depth_ != 8 && bit_depth_ != 16) {
        throw std::invalid_argument("QuantizedImage: bit_depth must be 8 or 16");
    }
    const auto h = channels_[0].rows();
    const auto w = channels_[0].cols();
    if (h <= 0 || w <= 0) throw std::invalid_argument("QuantizedImage: empty channels");
    const std::uint32_t max_code = (1u << bit_depth_) - 1u;
    for (const auto& c : channels_) {
        require_same_shape(h, w, c.rows(), c.cols(), "QuantizedImage");
        if (bit_depth_ < 16 && (c.cast<std::uint32_t>() > max_code).any()) {
            throw std::invalid_argument("QuantizedImage: code exceeds 2^bit_depth - 1");
        }
    }
}

ExposurePair::ExposurePair(BayerImage short_exposure, BayerImage long_exposure, double t_short,
                           double t_long, double gamma, CameraProfile profile)
    : short_(std::move(short_exposure)),
      long_(std::move(long_exposure)),
      t_short_(t_short),
      t_long_(t_long),
      gamma_(gamma),
      profile_(validate_profile(profile)) {
    if (short_.height() != long_.height() || short_.width() != long_.width() ||
        short_.pattern() != long_.pattern()) {
        throw std::invalid_argument("ExposurePair: short and long differ in shape or pattern");
    }
    if (!(t_short_ > 0.0) || !(t_long_ > 0.0)) {
        throw std::invalid_argument("ExposurePair: exposure times must be positive");
    }
    if (!(gamma_ >= 1.0)) {
        throw std::invalid_argument("ExposurePair: gamma must be >= 1");
    }
    if (std::abs(gamma_ - t_long_ / t_short_) > 1e-12 * gamma_) {
        throw std::invalid_argument("ExposurePair: gamma inconsistent with exposure times");
    }
}

PackedRaw pack_bayer(const BayerImage& img) {
    const auto h = img.height();
    const auto w = img.width();
    const auto& v = img.values();
    const auto even_y = Eigen::seq(0, h - 1, 2);
    const auto odd_y = Eigen::seq(1, h - 1, 2);
    const auto even_x = Eigen::seq(0, w - 1, 2);
    const auto odd_x = Eigen::seq(1, w - 1, 2);
    std::array<Plane, 4> ch;
    ch[0] = v(even_y, even_x);
    ch[1] = v(even_y, odd_x);
    ch[2] = v(odd_y, even_x);
    ch[3] = v(odd_y, odd_x);
    return PackedRaw(std::move(ch));
}

BayerImage unpack_bayer(const PackedRaw& packed) {
    const auto hh = packed.height();
    const auto ww = packed.width();
    Plane out(hh * 2, ww * 2);
    const auto even_y = Eigen::seq(0, 2 * hh - 1, 2);
    const auto odd_y = Eigen::seq(1, 2 * hh - 1, 2);
    const auto even_x = Eigen::seq(0, 2 * ww - 1, 2);
    const auto odd_x = Eigen::seq(1, 2 * ww - 1, 2);
    out(even_y, even_x) = packed.channel(0);
    out(even_y, odd_x) = packed.channel(1);
    out(odd_y, even_x) = packed.channel(2);
    out(odd_y, odd_x) = packed.channel(3);
    return BayerImage(std::move(out));
}

}  // namespace rawbench
