#include "rawbench/cli.hpp"

#include "rawbench/container.hpp"
#include "rawbench/image_io.hpp"
#include "rawbench/pipeline.hpp"

#include <gtest/gtest.h>

#include <fcntl.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

using namespace rawbench;
namespace fs = std::filesystem;

namespace {

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() /
                ("rawbench_cli_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter_++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path operator/(const std::string& name) const { return path_ / name; }

private:
    static inline int counter_ = 0;
    fs::path path_;
};

int run_cli(const std::vector<std::string>& args, std::string* captured_stdout = nullptr) {
    std::vector<const char*> argv;
    argv.push_back("rawbench");
    for (const auto& a : args) argv.push_back(a.c_str());

    fs::path capture_path;
    int saved_fd = -1;
    if (captured_stdout) {
        capture_path = fs::temp_directory_path() /
                       ("rawbench_stdout_" + std::to_string(::getpid()) + ".txt");
        ::fflush(stdout);
        saved_fd = ::dup(STDOUT_FILENO);
        const int fd = ::open(capture_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0600);
        ::dup2(fd, STDOUT_FILENO);
        ::close(fd);
    }
    const int code = io::cli_main(static_cast<int>(argv.size()), argv.data());
    if (captured_stdout) {
        ::fflush(stdout);
        ::dup2(saved_fd, STDOUT_FILENO);
        ::close(saved_fd);
        std::ifstream in(capture_path, std::ios::binary);
        captured_stdout->assign((std::istreambuf_iterator<char>(in)),
                                std::istreambuf_iterator<char>());
        fs::remove(capture_path);
    }
    return code;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

}  // namespace

TEST(CliTest, SynthWritesExpectedPairCount) {
    TempDir dir;
    const fs::path out = dir / "data";
    EXPECT_EQ(run_cli({"synth", "--scenes", "2", "--gammas", "10,30", "--size", "32",
                       "--out", out.string()}),
              0);
    int shorts = 0, longs = 0, gts = 0;
    for (const auto& entry : fs::directory_iterator(out)) {
        const std::string name = entry.path().filename().string();
        shorts += name.ends_with("_short.lrs1");
        longs += name.ends_with("_long.lrs1");
        gts += name.ends_with("_gt.lrs1");
    }
    EXPECT_EQ(shorts, 4);  // 2 scenes x 2 gammas
    EXPECT_EQ(longs, 4);
    EXPECT_EQ(gts, 4);
}

TEST(CliTest, MetricsOnIdenticalFiles) {
    TempDir dir;
    const fs::path out = dir / "data";
    ASSERT_EQ(run_cli({"synth", "--scenes", "1", "--gammas", "10", "--size", "32", "--out",
                       out.string()}),
              0);
    fs::path gt;
    for (const auto& entry : fs::directory_iterator(out)) {
        if (entry.path().filename().string().ends_with("_gt.lrs1")) gt = entry.path();
    }
    ASSERT_FALSE(gt.empty());
    std::string printed;
    EXPECT_EQ(run_cli({"metrics", "--a", gt.string(), "--b", gt.string()}, &printed), 0);
    EXPECT_EQ(printed, "psnr_db=100.0000 ssim=1.0000\n");
}

TEST(CliTest, BenchIsByteDeterministic) {
    TempDir dir;
    const fs::path data = dir / "data";
    ASSERT_EQ(run_cli({"synth", "--scenes", "2", "--gammas", "10,30", "--size", "32",
                       "--seed", "3", "--out", data.string()}),
              0);
    const fs::path r1 = dir / "r1.csv";
    const fs::path r2 = dir / "r2.csv";
    ASSERT_EQ(run_cli({"bench", "--data", data.string(), "--variants", "L+E+Q,Baseline",
                       "--enhancers", "identity", "--out", r1.string()}),
              0);
    ASSERT_EQ(run_cli({"bench", "--data", data.string(), "--variants", "L+E+Q,Baseline",
                       "--enhancers", "identity", "--out", r2.string()}),
              0);
    const std::string a = slurp(r1);
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, slurp(r2));
    EXPECT_EQ(a.find("scene,variant,enhancer,psnr_db,ssim\n"), 0u);
}

TEST(CliTest, ProcessWritesDecodablePng) {
    TempDir dir;
    const fs::path data = dir / "data";
    ASSERT_EQ(run_cli({"synth", "--scenes", "1", "--gammas", "10", "--size", "32", "--out",
                       data.string()}),
              0);
    fs::path long_file;
    for (const auto& entry : fs::directory_iterator(data)) {
        if (entry.path().filename().string().ends_with("_long.lrs1")) long_file = entry.path();
    }
    const fs::path png = dir / "out.png";
    ASSERT_EQ(run_cli({"process", "--in", long_file.string(), "--bits", "16", "--out",
                       png.string()}),
              0);

    const QuantizedImage decoded = io::read_image(png);
    const io::Container c = io::read_container(long_file);
    const QuantizedImage expected = pipeline::full_pipeline(
        io::to_sensor_frame(c), c.meta.profile, c.meta.profile.wb_true, 16);
    for (int ch = 0; ch < 3; ++ch) {
        EXPECT_TRUE((decoded.channel(ch) == expected.channel(ch)).all());
    }
}

TEST(CliTest, ReportRerendersCsv) {
    TempDir dir;
    const fs::path data = dir / "data";
    ASSERT_EQ(run_cli({"synth", "--scenes", "1", "--gammas", "10", "--size", "32", "--out",
                       data.string()}),
              0);
    const fs::path csv = dir / "r.csv";
    ASSERT_EQ(run_cli({"bench", "--data", data.string(), "--variants", "Baseline",
                       "--enhancers", "identity", "--out", csv.string()}),
              0);
    std::string md;
    EXPECT_EQ(run_cli({"report", "--in", csv.string(), "--format", "md"}, &md), 0);
    EXPECT_EQ(md.find("# Benchmark report"), 0u);
    std::string plot;
    EXPECT_EQ(run_cli({"report", "--in", csv.string(), "--format", "plot"}, &plot), 0);
    EXPECT_EQ(plot.find("variant,enhancer,gamma,mean_psnr_db,mean_ssim"), 0u);
}

TEST(CliTest, ExitCodes) {
    TempDir dir;
    EXPECT_EQ(run_cli({"frobnicate"}), 1);                       // unknown subcommand
    EXPECT_EQ(run_cli({"synth", "--bogus-flag", "1"}), 1);       // unknown flag
    EXPECT_EQ(run_cli({"metrics", "--a", (dir / "missing.lrs1").string(), "--b",
                       (dir / "missing.lrs1").string()}),
              2);  // data error
    EXPECT_EQ(run_cli({"bench", "--data", (dir / "empty").string(), "--out",
                       (dir / "r.csv").string()}),
              2);
    EXPECT_EQ(run_cli({"synth", "--scenes", "1", "--gammas", "abc", "--out",
                       (dir / "d").string()}),
              1);  // malformed gamma list
}
