#include "rawbench/profile_io.hpp"

#include "json_util.hpp"

#include <fstream>
#include <stdexcept>

namespace rawbench::io {

namespace detail {

namespace {

const char* gamma_name(GammaStandard std_) {
    return std_ == GammaStandard::Srgb ? "srgb" : "adobe1998";
}

const char* tone_name(ToneCurve curve) {
    return curve == ToneCurve::Identity ? "identity" : "smoothstep";
}

GammaStandard gamma_from_name(const std::string& name) {
    if (name == "srgb") return GammaStandard::Srgb;
    if (name == "adobe1998") return GammaStandard::Adobe1998;
    throw std::invalid_argument("unknown gamma_standard: " + name);
}

ToneCurve tone_from_name(const std::string& name) {
    if (name == "identity") return ToneCurve::Identity;
    if (name == "smoothstep") return ToneCurve::Smoothstep;
    throw std::invalid_argument("unknown tone_curve: " + name);
}

}  // namespace

nlohmann::json profile_to_json(const CameraProfile& p) {
    nlohmann::json j;
    j["black_level"] = p.black_level;
    j["saturation"] = p.saturation;
    j["lambda_shot"] = p.lambda_shot;
    j["lambda_read"] = p.lambda_read;
    j["wb_true"] = {p.wb_true[0], p.wb_true[1], p.wb_true[2]};
    j["wb_metered"] = {p.wb_metered[0], p.wb_metered[1], p.wb_metered[2]};
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < 3; ++r) {
        rows.push_back({p.ccm(r, 0), p.ccm(r, 1), p.ccm(r, 2)});
    }
    j["ccm"] = rows;
    j["gamma_standard"] = gamma_name(p.gamma_standard);
    j["tone_curve"] = tone_name(p.tone_curve);
    return j;
}

CameraProfile profile_from_json(const nlohmann::json& j) {
    CameraProfile p;
    p.black_level = j.at("black_level").get<double>();
    p.saturation = j.at("saturation").get<double>();
    p.lambda_shot = j.at("lambda_shot").get<double>();
    p.lambda_read = j.at("lambda_read").get<double>();
    for (int c = 0; c < 3; ++c) {
        p.wb_true[c] = j.at("wb_true").at(c).get<double>();
        p.wb_metered[c] = j.at("wb_metered").at(c).get<double>();
    }
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            p.ccm(r, c) = j.at("ccm").at(r).at(c).get<double>();
        }
    }
    p.gamma_standard = gamma_from_name(j.at("gamma_standard").get<std::string>());
    p.tone_curve = tone_from_name(j.at("tone_curve").get<std::string>());
    return validate_profile(p);
}

}  // namespace detail

std::string profile_to_json_string(const CameraProfile& profile, bool pretty) {
    const nlohmann::json j = detail::profile_to_json(profile);
    return pretty ? j.dump(2) : j.dump();
}

CameraProfile profile_from_json_string(const std::string& text) {
    return detail::profile_from_json(nlohmann::json::parse(text));
}

CameraProfile load_profile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open profile file: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return profile_from_json_string(text);
}

void save_profile(const std::filesystem::path& path, const CameraProfile& profile) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write profile file: " + path.string());
    out << profile_to_json_string(profile, true) << '\n';
}

}  // namespace rawbench::io
