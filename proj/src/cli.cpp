#include "rawbench/cli.hpp"

#include "rawbench/benchmark.hpp"
#include "rawbench/container.hpp"
#include "rawbench/enhancers.hpp"
#include "rawbench/image_io.hpp"
#include "rawbench/metrics.hpp"
#include "rawbench/noise.hpp"
#include "rawbench/pipeline.hpp"
#include "rawbench/profile_io.hpp"
#include "rawbench/report.hpp"
#include "rawbench/scenes.hpp"
#include "rawbench/variants.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rawbench::io {

namespace {

namespace fs = std::filesystem;

/// Flag-level problems discovered after CLI11 parsing; mapped to exit 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_gamma_list(const std::string& text) {
    std::vector<double> gammas;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string token = text.substr(pos, next - pos);
        char* end = nullptr;
        const double value = std::strtod(token.c_str(), &end);
        if (token.empty() || end != token.c_str() + token.size() || !(value >= 1.0)) {
            throw UsageError("--gammas expects a comma-separated list of ratios >= 1");
        }
        gammas.push_back(value);
        pos = next + 1;
    }
    return gammas;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        out.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

CameraProfile resolve_profile(const std::string& path) {
    return path.empty() ? default_profile() : load_profile(path);
}

std::vector<Plane> load_planes_any(const fs::path& path) {
    const std::string ext = path.extension().string();
    if (ext == ".lrs1") return to_planes(read_container(path));
    const QuantizedImage img = read_image(path);
    const double scale = static_cast<double>((1u << img.bit_depth()) - 1u);
    std::vector<Plane> out;
    for (int c = 0; c < 3; ++c) out.push_back(img.channel(c).cast<double>() / scale);
    return out;
}

int run_synth(int scene_count, int size, const std::string& gammas_text,
              const std::string& profile_path, std::uint64_t seed, const std::string& out_dir) {
    const std::vector<double> gammas = parse_gamma_list(gammas_text);
    const CameraProfile profile = resolve_profile(profile_path);
    fs::create_directories(out_dir);

    constexpr fem::SceneKind kinds[] = {fem::SceneKind::Ramp, fem::SceneKind::ColorChecker,
                                        fem::SceneKind::SmoothNoise, fem::SceneKind::Edges};
    std::uint64_t pair_index = 0;
    for (int i = 0; i < scene_count; ++i) {
        const fem::SceneKind kind = kinds[i % 4];
        const std::uint64_t scene_seed = seed + static_cast<std::uint64_t>(i / 4);
        const BayerImage scene = fem::synth_scene(kind, size, scene_seed);
        const double boost =
            fem::corpus_highlight_boost(seed, static_cast<std::uint64_t>(i));
        for (const double gamma : gammas) {
            char id[96];
            std::snprintf(id, sizeof(id), "%s_s%llu_g%g", fem::scene_kind_name(kind),
                          static_cast<unsigned long long>(scene_seed - seed), gamma);
            const fem::ScenePair pair = fem::make_pair_from_radiance(
                scene.values() * boost, gamma, profile,
                noise::counter_hash(seed, 1000 + pair_index), id);
            ++pair_index;

            const double t_short = pair.exposures.t_short();
            const SensorFrame short_frame = pipeline::decalibrate(pair.noisy_short(), profile);
            const SensorFrame long_frame = pipeline::decalibrate(pair.clean_long(), profile);
            write_container(fs::path(out_dir) / (std::string(id) + "_short.lrs1"),
                            make_container(short_frame, profile, "short", t_short, gamma));
            write_container(fs::path(out_dir) / (std::string(id) + "_long.lrs1"),
                            make_container(long_frame, profile, "long", t_short * gamma, gamma));
            write_container(fs::path(out_dir) / (std::string(id) + "_gt.lrs1"),
                            make_container(pair.ground_truth, profile, "ground_truth",
                                           t_short * gamma, gamma));
        }
    }
    std::printf("wrote %llu pairs to %s\n", static_cast<unsigned long long>(pair_index),
                out_dir.c_str());
    return 0;
}

int run_process(const std::string& in_path, const std::string& profile_path, int bits,
                const std::string& wb, const std::string& out_path) {
    if (bits != 8 && bits != 16) throw UsageError("--bits must be 8 or 16");
    if (wb != "true" && wb != "metered") throw UsageError("--wb must be 'true' or 'metered'");

    const Container container = read_container(in_path);
    const CameraProfile profile =
        profile_path.empty() ? container.meta.profile : load_profile(profile_path);
    const SensorFrame frame = to_sensor_frame(container);
    const Vec3 gains = wb == "true" ? profile.wb_true : profile.wb_metered;
    const QuantizedImage out = pipeline::full_pipeline(frame, profile, gains, bits);

    const std::string ext = fs::path(out_path).extension().string();
    if (ext == ".png") {
        write_image(out_path, out, bits == 8 ? ImageFormat::Png8 : ImageFormat::Png16);
    } else if (ext == ".ppm") {
        if (bits != 16) throw UsageError("--bits 16 required for .ppm output");
        write_image(out_path, out, ImageFormat::Ppm16);
    } else if (ext == ".lrs1") {
        write_container(out_path, make_container(out, profile, "processed",
                                                 container.meta.exposure_time_s,
                                                 container.meta.gamma));
    } else {
        throw UsageError("--out must end in .png, .ppm, or .lrs1");
    }
    std::printf("processed %s -> %s (%d-bit)\n", in_path.c_str(), out_path.c_str(), bits);
    return 0;
}

std::vector<fem::ScenePair> load_pairs(const std::string& data_dir) {
    std::vector<fs::path> shorts;
    for (const auto& entry : fs::directory_iterator(data_dir)) {
        const std::string name = entry.path().filename().string();
        if (name.size() > 11 && name.ends_with("_short.lrs1")) {
            shorts.push_back(entry.path());
        }
    }
    std::sort(shorts.begin(), shorts.end());
    if (shorts.empty()) {
        throw std::runtime_error("no *_short.lrs1 files under " + data_dir);
    }

    std::vector<fem::ScenePair> pairs;
    for (const fs::path& short_path : shorts) {
        std::string base = short_path.filename().string();
        base.erase(base.size() - std::string("_short.lrs1").size());
        const fs::path long_path = short_path.parent_path() / (base + "_long.lrs1");
        const fs::path gt_path = short_path.parent_path() / (base + "_gt.lrs1");
        if (!fs::exists(long_path) || !fs::exists(gt_path)) {
            throw std::runtime_error("missing _long/_gt companions for " + base);
        }
        const Container short_c = read_container(short_path);
        const Container long_c = read_container(long_path);
        const Container gt_c = read_container(gt_path);
        const CameraProfile& profile = short_c.meta.profile;
        BayerImage y_s = pipeline::calibrate(to_sensor_frame(short_c), profile);
        BayerImage x_l = pipeline::calibrate(to_sensor_frame(long_c), profile);
        ExposurePair exposures(std::move(y_s), std::move(x_l), short_c.meta.exposure_time_s,
                               long_c.meta.exposure_time_s, short_c.meta.gamma, profile);
        pairs.push_back(fem::ScenePair{base, std::move(exposures), to_quantized(gt_c)});
    }
    return pairs;
}

int run_bench(const std::string& data_dir, const std::string& variants_text,
              const std::string& enhancers_text, const std::string& out_path,
              const std::string& format_name) {
    ReportFormat format = ReportFormat::Csv;
    try {
        format = parse_report_format(format_name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    std::vector<fem::VariantSpec> variants;
    for (const std::string& label : split_list(variants_text)) {
        try {
            variants.push_back(fem::parse_variant_label(label));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    const auto registry = enhance::default_registry();
    std::vector<fem::NamedEnhancer> enhancers;
    for (const std::string& name : split_list(enhancers_text)) {
        const auto it = registry.find(name);
        if (it == registry.end()) throw UsageError("unknown enhancer: " + name);
        enhancers.push_back(fem::NamedEnhancer{name, it->second});
    }

    const std::vector<fem::ScenePair> pairs = load_pairs(data_dir);
    const std::vector<fem::MetricRow> rows = fem::run_benchmark(pairs, variants, enhancers);
    const ReportDocument doc = make_document(rows);
    const std::string text = emit_report(doc, format);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write report: " + out_path);
    out << text;
    std::printf("%zu rows over %zu pairs -> %s\n", doc.rows.size(), pairs.size(),
                out_path.c_str());
    return 0;
}

int run_metrics(const std::string& a_path, const std::string& b_path) {
    const std::vector<Plane> a = load_planes_any(a_path);
    const std::vector<Plane> b = load_planes_any(b_path);
    const double psnr_db = fem::psnr(a, b);
    const double ssim_score = fem::ssim(a, b);
    std::printf("psnr_db=%.4f ssim=%.4f\n", psnr_db, ssim_score);
    return 0;
}

int run_report(const std::string& in_path, const std::string& format_name,
               const std::string& out_path) {
    ReportFormat format = ReportFormat::Csv;
    try {
        format = parse_report_format(format_name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open report: " + in_path);
    const std::string text((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    const ReportDocument doc = make_document(parse_report_csv(text));
    const std::string rendered = emit_report(doc, format);
    if (out_path.empty()) {
        std::fwrite(rendered.data(), 1, rendered.size(), stdout);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write report: " + out_path);
        out << rendered;
    }
    return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Deterministic camera-pipeline simulator and factorized low-light "
                 "enhancement benchmark"};
    app.require_subcommand(1);
    app.fallthrough();  // lets subcommands use the app-level --seed
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Root seed; all randomness flows from it")
        ->capture_default_str();

    auto* synth = app.add_subcommand("synth", "Write synthetic exposure pairs + ground truths");
    int scenes = 20, size = 128;
    std::string gammas = "10,30,100,300", profile_path, out_dir;
    synth->add_option("--scenes", scenes, "Scene count")->capture_default_str();
    synth->add_option("--size", size, "Mosaic side length (even)")->capture_default_str();
    synth->add_option("--gammas", gammas, "Comma-separated exposure ratios")
        ->capture_default_str();
    synth->add_option("--profile", profile_path, "Camera profile JSON (default: built-in)");
    synth->add_option("--out", out_dir, "Output directory")->required();

    auto* process = app.add_subcommand("process", "Run the camera pipeline on a raw container");
    std::string in_path, out_path, wb = "true";
    int bits = 16;
    process->add_option("--in", in_path, "Input .lrs1 sensor frame")->required();
    process->add_option("--profile", profile_path, "Camera profile JSON (default: embedded)");
    process->add_option("--bits", bits, "Output bit depth (8 or 16)")->capture_default_str();
    process->add_option("--wb", wb, "Gains to apply: true | metered")->capture_default_str();
    process->add_option("--out", out_path, "Output .png/.ppm/.lrs1")->required();

    auto* bench = app.add_subcommand("bench", "Run the factor-variant benchmark matrix");
    std::string data_dir, variants_text = "L+E+Q,E+Q,L+E,L+Q,E,L,Q,Baseline";
    std::string enhancers_text = "identity,gaussian", format_name = "csv";
    bench->add_option("--data", data_dir, "Directory of synth output")->required();
    bench->add_option("--variants", variants_text, "Comma-separated variant labels")
        ->capture_default_str();
    bench->add_option("--enhancers", enhancers_text, "Comma-separated enhancer names")
        ->capture_default_str();
    bench->add_option("--out", out_path, "Report path")->required();
    bench->add_option("--format", format_name, "csv | md | plot")->capture_default_str();

    auto* metrics = app.add_subcommand("metrics", "Print PSNR/SSIM between two images");
    std::string a_path, b_path;
    metrics->add_option("--a", a_path, "First image (.lrs1/.png/.ppm)")->required();
    metrics->add_option("--b", b_path, "Second image")->required();

    auto* report = app.add_subcommand("report", "Re-render a CSV report");
    std::string report_in, report_format = "md", report_out;
    report->add_option("--in", report_in, "Input report.csv")->required();
    report->add_option("--format", report_format, "csv | md | plot")->capture_default_str();
    report->add_option("--out", report_out, "Output path (default: stdout)");

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (synth->parsed()) return run_synth(scenes, size, gammas, profile_path, seed, out_dir);
        if (process->parsed()) return run_process(in_path, profile_path, bits, wb, out_path);
        if (bench->parsed()) {
            return run_bench(data_dir, variants_text, enhancers_text, out_path, format_name);
        }
        if (metrics->parsed()) return run_metrics(a_path, b_path);
        if (report->parsed()) return run_report(report_in, report_format, report_out);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}

}  // namespace rawbench::io
