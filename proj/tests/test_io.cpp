#include "rawbench/container.hpp"
#include "rawbench/image_io.hpp"
#include "rawbench/profile_io.hpp"
#include "rawbench/report.hpp"

#include "rawbench/pipeline.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <unistd.h>

using namespace rawbench;
namespace io = rawbench::io;
namespace fs = std::filesystem;

namespace {

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() /
                ("rawbench_test_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter_++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path operator/(const std::string& name) const { return path_ / name; }
    const fs::path& path() const { return path_; }

private:
    static inline int counter_ = 0;
    fs::path path_;
};

PlaneU16 random_codes(Eigen::Index h, Eigen::Index w, int bits, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(0, (1 << bits) - 1);
    PlaneU16 p(h, w);
    for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = static_cast<std::uint16_t>(dist(rng));
    return p;
}

QuantizedImage random_quantized(Eigen::Index n, int bits, unsigned seed) {
    return QuantizedImage({random_codes(n, n, bits, seed), random_codes(n, n, bits, seed + 1),
                           random_codes(n, n, bits, seed + 2)},
                          bits);
}

std::vector<fem::MetricRow> sample_rows() {
    return {
        {"ramp_s0_g10", "L+E+Q", "identity", 31.25, 0.91, {}},
        {"ramp_s0_g10", "Baseline", "identity", 17.5, 0.37, {}},
        {"ramp_s0_g30", "L+E+Q", "identity", 28.5, 0.88, {}},
        {"ramp_s0_g30", "Baseline", "identity", 15.0, 0.30, {}},
    };
}

}  // namespace

TEST(ContainerTest, RoundTripIsBitExact) {
    TempDir dir;
    const CameraProfile profile = default_profile();
    PlaneU16 dn = random_codes(16, 16, 14, 3);
    const SensorFrame frame(dn, 14);
    const io::Container out = io::make_container(frame, profile, "short", 0.125, 30.0);
    const fs::path path = dir / "frame.lrs1";
    io::write_container(path, out);

    const io::Container in = io::read_container(path);
    EXPECT_EQ(in.meta.width, 16);
    EXPECT_EQ(in.meta.height, 16);
    EXPECT_EQ(in.meta.channels, 1);
    EXPECT_EQ(in.meta.bit_depth, 14);
    EXPECT_EQ(in.meta.pattern, "RGGB");
    EXPECT_EQ(in.meta.role, "short");
    EXPECT_DOUBLE_EQ(in.meta.exposure_time_s, 0.125);
    EXPECT_DOUBLE_EQ(in.meta.gamma, 30.0);
    EXPECT_EQ(in.samples, out.samples);
    EXPECT_DOUBLE_EQ(in.meta.profile.lambda_shot, profile.lambda_shot);
    EXPECT_EQ(in.meta.profile.ccm, profile.ccm);
    EXPECT_EQ(in.meta.profile.wb_metered, profile.wb_metered);

    const SensorFrame back = io::to_sensor_frame(in);
    EXPECT_TRUE((back.samples() == dn).all());
}

TEST(ContainerTest, QuantizedRoundTrip) {
    TempDir dir;
    const QuantizedImage img = random_quantized(12, 16, 7);
    const io::Container out =
        io::make_container(img, default_profile(), "ground_truth", 1.0, 8.0);
    const fs::path path = dir / "gt.lrs1";
    io::write_container(path, out);
    const QuantizedImage back = io::to_quantized(io::read_container(path));
    EXPECT_EQ(back.bit_depth(), 16);
    for (int c = 0; c < 3; ++c) {
        EXPECT_TRUE((back.channel(c) == img.channel(c)).all());
    }
}

TEST(ContainerTest, RejectsBadMagicAndTruncation) {
    TempDir dir;
    const fs::path bad = dir / "bad.lrs1";
    {
        std::ofstream out(bad, std::ios::binary);
        out << "XXXXsome bytes that are not a container";
    }
    try {
        io::read_container(bad);
        FAIL() << "expected bad magic";
    } catch (const std::runtime_error& e) {
        EXPECT_STREQ(e.what(), "bad magic");
    }

    const fs::path good = dir / "good.lrs1";
    io::write_container(
        good, io::make_container(SensorFrame(random_codes(4, 4, 14, 1), 14), default_profile(),
                                 "frame", 0.1, 1.0));
    const auto size = fs::file_size(good);
    fs::resize_file(good, size - 2);
    try {
        io::read_container(good);
        FAIL() << "expected payload size mismatch";
    } catch (const std::runtime_error& e) {
        EXPECT_STREQ(e.what(), "payload size mismatch");
    }
}

TEST(ProfileJsonTest, RoundTripsExactly) {
    CameraProfile p = default_profile();
    p.lambda_shot = 3.25e-4;
    p.gamma_standard = GammaStandard::Adobe1998;
    p.tone_curve = ToneCurve::Smoothstep;
    const CameraProfile q = io::profile_from_json_string(io::profile_to_json_string(p));
    EXPECT_EQ(q.black_level, p.black_level);
    EXPECT_EQ(q.lambda_shot, p.lambda_shot);
    EXPECT_EQ(q.wb_true, p.wb_true);
    EXPECT_EQ(q.ccm, p.ccm);
    EXPECT_EQ(q.gamma_standard, p.gamma_standard);
    EXPECT_EQ(q.tone_curve, p.tone_curve);
}

TEST(ImageIoTest, PngRoundTrips) {
    TempDir dir;
    const QuantizedImage img16 = random_quantized(9, 16, 11);
    io::write_image(dir / "a.png", img16, io::ImageFormat::Png16);
    const QuantizedImage back16 = io::read_image(dir / "a.png");
    EXPECT_EQ(back16.bit_depth(), 16);
    for (int c = 0; c < 3; ++c) {
        EXPECT_TRUE((back16.channel(c) == img16.channel(c)).all());
    }

    const QuantizedImage img8 = random_quantized(11, 8, 13);
    io::write_image(dir / "b.png", img8, io::ImageFormat::Png8);
    const QuantizedImage back8 = io::read_image(dir / "b.png");
    EXPECT_EQ(back8.bit_depth(), 8);
    for (int c = 0; c < 3; ++c) {
        EXPECT_TRUE((back8.channel(c) == img8.channel(c)).all());
    }

    EXPECT_THROW(io::write_image(dir / "c.png", img8, io::ImageFormat::Png16),
                 std::invalid_argument);
}

TEST(ImageIoTest, PpmHeaderAndRoundTrip) {
    TempDir dir;
    std::array<PlaneU16, 3> ch{PlaneU16::Zero(4, 4), PlaneU16::Zero(4, 4),
                               PlaneU16::Zero(4, 4)};
    ch[0](0, 0) = 65535;
    ch[2](3, 3) = 1;
    const QuantizedImage img(ch, 16);
    const fs::path path = dir / "x.ppm";
    io::write_image(path, img, io::ImageFormat::Ppm16);

    std::ifstream in(path, std::ios::binary);
    std::string head(13, '\0');
    in.read(head.data(), 13);
    EXPECT_EQ(head, "P6\n4 4\n65535\n");

    const QuantizedImage back = io::read_image(path);
    for (int c = 0; c < 3; ++c) {
        EXPECT_TRUE((back.channel(c) == img.channel(c)).all());
    }
}

TEST(ReportTest, CsvShapeAndDeterminism) {
    const io::ReportDocument doc = io::make_document(sample_rows());
    const std::string csv = io::emit_report(doc, io::ReportFormat::Csv);
    EXPECT_EQ(csv, io::emit_report(doc, io::ReportFormat::Csv));

    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "scene,variant,enhancer,psnr_db,ssim");
    std::getline(lines, line);
    EXPECT_EQ(line, "ramp_s0_g10,L+E+Q,identity,31.2500,0.9100");
    int count = 1;
    while (std::getline(lines, line)) {
        if (!line.empty()) ++count;
    }
    EXPECT_EQ(count, 4);

    const io::ReportDocument single =
        io::make_document({{"s", "L", "identity", 10.0, 0.5, {}}});
    EXPECT_EQ(io::emit_report(single, io::ReportFormat::Csv),
              "scene,variant,enhancer,psnr_db,ssim\ns,L,identity,10.0000,0.5000\n");
}

TEST(ReportTest, AggregatesAreRowMeans) {
    const io::ReportDocument doc = io::make_document(sample_rows());
    ASSERT_EQ(doc.aggregates.size(), 2u);
    EXPECT_EQ(doc.aggregates[0].variant, "L+E+Q");
    EXPECT_NEAR(doc.aggregates[0].mean_psnr_db, (31.25 + 28.5) / 2.0, 1e-9);
    EXPECT_NEAR(doc.aggregates[0].mean_ssim, (0.91 + 0.88) / 2.0, 1e-9);
    EXPECT_EQ(doc.aggregates[0].count, 2);
    EXPECT_NEAR(doc.aggregates[1].mean_psnr_db, (17.5 + 15.0) / 2.0, 1e-9);
}

TEST(ReportTest, MarkdownGroupsByVariant) {
    const std::string md =
        io::emit_report(io::make_document(sample_rows()), io::ReportFormat::Markdown);
    EXPECT_NE(md.find("## L+E+Q"), std::string::npos);
    EXPECT_NE(md.find("## Baseline"), std::string::npos);
    EXPECT_NE(md.find("**mean**"), std::string::npos);
    EXPECT_LT(md.find("## L+E+Q"), md.find("## Baseline"));
}

TEST(ReportTest, PlotDataGroupsByGamma) {
    const std::string plot =
        io::emit_report(io::make_document(sample_rows()), io::ReportFormat::PlotData);
    std::istringstream lines(plot);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "variant,enhancer,gamma,mean_psnr_db,mean_ssim");
    std::vector<std::string> rest;
    while (std::getline(lines, line)) {
        if (!line.empty()) rest.push_back(line);
    }
    ASSERT_EQ(rest.size(), 4u);  // 2 variants x 2 gammas
    EXPECT_EQ(rest[0], "Baseline,identity,10,17.5000,0.3700");
    EXPECT_EQ(rest[1], "Baseline,identity,30,15.0000,0.3000");
}

TEST(ReportTest, CsvParsesBackAndEmptyRejected) {
    const io::ReportDocument doc = io::make_document(sample_rows());
    const std::string csv = io::emit_report(doc, io::ReportFormat::Csv);
    const auto rows = io::parse_report_csv(csv);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[2].scene, "ramp_s0_g30");
    EXPECT_EQ(rows[2].variant, "L+E+Q");
    EXPECT_DOUBLE_EQ(rows[2].psnr_db, 28.5);

    EXPECT_THROW(io::emit_report(io::make_document({}), io::ReportFormat::Csv),
                 std::invalid_argument);
    EXPECT_THROW(io::parse_report_csv("nonsense\n"), std::runtime_error);
}

TEST(ReportTest, GammaFromSceneId) {
    EXPECT_EQ(io::gamma_from_scene_id("ramp_s0_g30").value(), 30.0);
    EXPECT_EQ(io::gamma_from_scene_id("edges_s4_g2.5").value(), 2.5);
    EXPECT_FALSE(io::gamma_from_scene_id("plain-name").has_value());
    EXPECT_FALSE(io::gamma_from_scene_id("x_g").has_value());
}
