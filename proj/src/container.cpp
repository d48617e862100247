#include "rawbench/container.hpp"

#include "json_util.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace rawbench::io {

namespace {

constexpr char kMagic[4] = {'L', 'R', 'S', '1'};

void put_u32_le(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 24) & 0xff));
}

std::string header_json(const ContainerMeta& meta) {
    nlohmann::json j;
    j["width"] = meta.width;
    j["height"] = meta.height;
    j["channels"] = meta.channels;
    j["bit_depth"] = meta.bit_depth;
    j["pattern"] = meta.pattern;
    j["role"] = meta.role;
    j["profile"] = detail::profile_to_json(meta.profile);
    j["exposure_time_s"] = meta.exposure_time_s;
    j["gamma"] = meta.gamma;
    return j.dump();
}

ContainerMeta meta_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception&) {
        throw std::runtime_error("malformed container header");
    }
    ContainerMeta meta;
    try {
        meta.width = j.at("width").get<int>();
        meta.height = j.at("height").get<int>();
        meta.channels = j.at("channels").get<int>();
        meta.bit_depth = j.at("bit_depth").get<int>();
        meta.pattern = j.at("pattern").get<std::string>();
        meta.role = j.at("role").get<std::string>();
        meta.profile = detail::profile_from_json(j.at("profile"));
        meta.exposure_time_s = j.at("exposure_time_s").get<double>();
        meta.gamma = j.at("gamma").get<double>();
    } catch (const nlohmann::json::exception&) {
        throw std::runtime_error("malformed container header");
    }
    return meta;
}

}  // namespace

void write_container(const std::filesystem::path& path, const Container& container) {
    const auto& meta = container.meta;
    const std::size_t expected = static_cast<std::size_t>(meta.width) * meta.height *
                                 meta.channels;
    if (container.samples.size() != expected) {
        throw std::invalid_argument("write_container: header/payload size mismatch");
    }
    const std::string header = header_json(meta);

    std::string blob;
    blob.reserve(8 + header.size() + container.samples.size() * 2);
    blob.append(kMagic, 4);
    put_u32_le(blob, static_cast<std::uint32_t>(header.size()));
    blob += header;
    for (const std::uint16_t s : container.samples) {
        blob.push_back(static_cast<char>(s & 0xff));
        blob.push_back(static_cast<char>((s >> 8) & 0xff));
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out.write(blob.data(), static_cast<std::streamsize>(blob.size()));
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

Container read_container(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    std::string blob((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    if (blob.size() < 8 || std::memcmp(blob.data(), kMagic, 4) != 0) {
        throw std::runtime_error("bad magic");
    }
    const auto u8 = [&blob](std::size_t i) {
        return static_cast<std::uint32_t>(static_cast<unsigned char>(blob[i]));
    };
    const std::uint32_t header_len = u8(4) | (u8(5) << 8) | (u8(6) << 16) | (u8(7) << 24);
    if (blob.size() < 8 + static_cast<std::size_t>(header_len)) {
        throw std::runtime_error("truncated header");
    }

    Container container;
    container.meta = meta_from_json(blob.substr(8, header_len));
    const auto& meta = container.meta;
    if (meta.width <= 0 || meta.height <= 0 || meta.channels <= 0) {
        throw std::runtime_error("malformed container header");
    }
    const std::size_t count =
        static_cast<std::size_t>(meta.width) * meta.height * meta.channels;
    const std::size_t payload_offset = 8 + header_len;
    if (blob.size() - payload_offset != count * 2) {
        throw std::runtime_error("payload size mismatch");
    }
    container.samples.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t at = payload_offset + 2 * i;
        container.samples[i] = static_cast<std::uint16_t>(
            static_cast<unsigned char>(blob[at]) |
            (static_cast<std::uint16_t>(static_cast<unsigned char>(blob[at + 1])) << 8));
    }
    return container;
}

Container make_container(const SensorFrame& frame, const CameraProfile& profile,
                         std::string role, double exposure_time_s, double gamma) {
    Container c;
    c.meta.width = static_cast<int>(frame.width());
    c.meta.height = static_cast<int>(frame.height());
    c.meta.channels = 1;
    c.meta.bit_depth = frame.bit_depth();
    c.meta.pattern = "RGGB";
    c.meta.role = std::move(role);
    c.meta.profile = profile;
    c.meta.exposure_time_s = exposure_time_s;
    c.meta.gamma = gamma;
    c.samples.assign(frame.samples().data(), frame.samples().data() + frame.samples().size());
    return c;
}

Container make_container(const QuantizedImage& img, const CameraProfile& profile,
                         std::string role, double exposure_time_s, double gamma) {
    Container c;
    c.meta.width = static_cast<int>(img.width());
    c.meta.height = static_cast<int>(img.height());
    c.meta.channels = 3;
    c.meta.bit_depth = img.bit_depth();
    c.meta.pattern = "none";
    c.meta.role = std::move(role);
    c.meta.profile = profile;
    c.meta.exposure_time_s = exposure_time_s;
    c.meta.gamma = gamma;
    c.samples.resize(static_cast<std::size_t>(img.width()) * img.height() * 3);
    std::size_t i = 0;
    for (Eigen::Index y = 0; y < img.height(); ++y) {
        for (Eigen::Index x = 0; x < img.width(); ++x) {
            for (int ch = 0; ch < 3; ++ch) {
                c.samples[i++] = img.channel(ch)(y, x);
            }
        }
    }
    return c;
}

SensorFrame to_sensor_frame(const Container& container) {
    const auto& meta = container.meta;
    if (meta.channels != 1) throw std::runtime_error("container is not a sensor frame");
    PlaneU16 samples(meta.height, meta.width);
    std::memcpy(samples.data(), container.samples.data(),
                container.samples.size() * sizeof(std::uint16_t));
    return SensorFrame(std::move(samples), meta.bit_depth);
}

QuantizedImage to_quantized(const Container& container) {
    const auto& meta = container.meta;
    if (meta.channels != 3) throw std::runtime_error("container is not a 3-channel image");
    std::array<PlaneU16, 3> ch;
    for (int c = 0; c < 3; ++c) ch[c] = PlaneU16(meta.height, meta.width);
    std::size_t i = 0;
    for (int y = 0; y < meta.height; ++y) {
        for (int x = 0; x < meta.width; ++x) {
            for (int c = 0; c < 3; ++c) ch[c](y, x) = container.samples[i++];
        }
    }
    return QuantizedImage(std::move(ch), meta.bit_depth);
}

std::vector<Plane> to_planes(const Container& container) {
    const auto& meta = container.meta;
    const double scale = static_cast<double>((1u << meta.bit_depth) - 1u);
    std::vector<Plane> planes(static_cast<std::size_t>(meta.channels));
    for (auto& p : planes) p = Plane(meta.height, meta.width);
    std::size_t i = 0;
    for (int y = 0; y < meta.height; ++y) {
        for (int x = 0; x < meta.width; ++x) {
            for (int c = 0; c < meta.channels; ++c) {
                planes[static_cast<std::size_t>(c)](y, x) = container.samples[i++] / scale;
            }
        }
    }
    return planes;
}

}  // namespace rawbench::io
