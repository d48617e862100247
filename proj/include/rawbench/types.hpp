#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>

namespace rawbench {

/// Dense row-major plane of per-pixel values; rows index y, columns index x.
template <typename Scalar>
using PlaneT = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Plane = PlaneT<double>;
using PlaneU16 = PlaneT<std::uint16_t>;
using Mat3 = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;

enum class CfaPattern { Rggb };
enum class GammaStandard { Srgb, Adobe1998 };
enum class ToneCurve { Identity, Smoothstep };

/// Clamp every element into [0, 1].
Plane clamp_unit(const Plane& p);

/// Integer digital numbers straight off the (simulated) sensor.
class SensorFrame {
public:
    SensorFrame(PlaneU16 samples, int bit_depth, CfaPattern pattern = CfaPattern::Rggb);

    Eigen::Index height() const { return samples_.rows(); }
    Eigen::Index width() const { return samples_.cols(); }
    int bit_depth() const { return bit_depth_; }
    CfaPattern pattern() const { return pattern_; }
    const PlaneU16& samples() const { return samples_; }

private:
    PlaneU16 samples_;
    int bit_depth_;
    CfaPattern pattern_;
};

/// Per-camera calibration and rendering parameters.
struct CameraProfile {
    double black_level = 512.0;
    double saturation = 16383.0;
    double lambda_shot = 1e-5;  // variance slope, normalized-intensity units
    double lambda_read = 1e-7;  // variance offset, normalized-intensity^2 units
    Vec3 wb_true{2.0, 1.0, 1.5};
    Vec3 wb_metered{1.94, 0.99, 1.53};
    Mat3 ccm = Mat3::Identity();
    GammaStandard gamma_standard = GammaStandard::Srgb;
    ToneCurve tone_curve = ToneCurve::Identity;
};

/// Throws std::invalid_argument naming the first violated invariant;
/// returns the profile unchanged otherwise.
CameraProfile validate_profile(const CameraProfile& profile);

/// Built-in 14-bit profile used by the CLI when no profile file is given.
CameraProfile default_profile();

/// Calibrated mosaic intensities in [0, 1] on an R-G-G-B grid.
class BayerImage {
public:
    BayerImage(Plane values, CfaPattern pattern = CfaPattern::Rggb);

    Eigen::Index height() const { return values_.rows(); }
    Eigen::Index width() const { return values_.cols(); }
    CfaPattern pattern() const { return pattern_; }
    const Plane& values() const { return values_; }

private:
    Plane values_;
    CfaPattern pattern_;
};

/// Half-resolution view of a mosaic as four planes (R, G1, G2, B).
class PackedRaw {
public:
    explicit PackedRaw(std::array<Plane, 4> channels);

    Eigen::Index height() const { return channels_[0].rows(); }
    Eigen::Index width() const { return channels_[0].cols(); }
    const Plane& channel(int c) const { return channels_[c]; }
    const std::array<Plane, 4>& channels() const { return channels_; }

private:
    std::array<Plane, 4> channels_;
};

/// Full-resolution linear RGB in [0, 1] (camera or output color space).
class LinearRgbImage {
public:
    explicit LinearRgbImage(std::array<Plane, 3> channels);

    Eigen::Index height() const { return channels_[0].rows(); }
    Eigen::Index width() const { return channels_[0].cols(); }
    const Plane& channel(int c) const { return channels_[c]; }
    const std::array<Plane, 3>& channels() const { return channels_; }

private:
    std::array<Plane, 3> channels_;
};

/// Display-referred RGB in [0, 1], continuous (pre-quantization).
class SrgbImage {
public:
    explicit SrgbImage(std::array<Plane, 3> channels);

    Eigen::Index height() const { return channels_[0].rows(); }
    Eigen::Index width() const { return channels_[0].cols(); }
    const Plane& channel(int c) const { return channels_[c]; }
    const std::array<Plane, 3>& channels() const { return channels_; }

private:
    std::array<Plane, 3> channels_;
};

/// Integer sRGB codes at 8 or 16 bits per sample.
class QuantizedImage {
public:
    QuantizedImage(std::array<PlaneU16, 3> channels, int bit_depth);

    Eigen::Index height() const { return channels_[0].rows(); }
    Eigen::Index width() const { return channels_[0].cols(); }
    int bit_depth() const { return bit_depth_; }
    const PlaneU16& channel(int c) const { return channels_[c]; }
    const std::array<PlaneU16, 3>& channels() const { return channels_; }

private:
    std::array<PlaneU16, 3> channels_;
    int bit_depth_;
};

/// Matched short/long-exposure mosaics with their exposure-time ratio.
class ExposurePair {
public:
    ExposurePair(BayerImage short_exposure, BayerImage long_exposure, double t_short,
                 double t_long, double gamma, CameraProfile profile);

    const BayerImage& short_exposure() const { return short_; }
    const BayerImage& long_exposure() const { return long_; }
    double t_short() const { return t_short_; }
    double t_long() const { return t_long_; }
    double gamma() const { return gamma_; }
    const CameraProfile& profile() const { return profile_; }

private:
    BayerImage short_;
    BayerImage long_;
    double t_short_;
    double t_long_;
    double gamma_;
    CameraProfile profile_;
};

/// Split a mosaic into four half-resolution channel planes. Channel c of
/// output pixel (i, j) takes the mosaic value at (2i, 2j), (2i, 2j+1),
/// (2i+1, 2j), (2i+1, 2j+1) for c = 0..3.
PackedRaw pack_bayer(const BayerImage& img);

/// Exact inverse of pack_bayer.
BayerImage unpack_bayer(const PackedRaw& packed);

}  // namespace rawbench
