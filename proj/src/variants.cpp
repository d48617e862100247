#include "rawbench/variants.hpp"

#include "rawbench/noise.hpp"
#include "rawbench/pipeline.hpp"

#include <stdexcept>
#include <utility>

namespace rawbench::fem {

void validate_variant(const VariantSpec& spec) {
    if (spec.quant_order == QuantOrder::NoQuantize && !spec.fine_quant) {
        throw std::invalid_argument("variant: NoQuantize requires fine_quant");
    }
    if (spec.quant_order == QuantOrder::QuantizeThenBrighten && spec.fine_quant) {
        throw std::invalid_argument("variant: QuantizeThenBrighten is the 8-bit strategy");
    }
    if (spec.wb_meta && !spec.linear_domain) {
        throw std::invalid_argument("variant: W applies to linear-domain variants only");
    }
}

std::string variant_label(const VariantSpec& spec) {
    validate_variant(spec);
    std::string label;
    auto append = [&label](const char* flag) {
        if (!label.empty()) label += '+';
        label += flag;
    };
    if (spec.linear_domain) append("L");
    if (spec.true_exposure_meta) append("E");
    if (spec.fine_quant) append("Q");
    if (label.empty()) label = "Baseline";
    if (spec.wb_meta) label += "+W";
    if (spec.quant_order == QuantOrder::QuantizeThenBrighten) label += "(QtB)";
    if (spec.quant_order == QuantOrder::NoQuantize) label += "(cont)";
    return label;
}

VariantSpec parse_variant_label(const std::string& label) {
    VariantSpec spec;
    std::string rest = label;
    auto strip_suffix = [&rest](const std::string& suffix) {
        if (rest.size() >= suffix.size() &&
            rest.compare(rest.size() - suffix.size(), suffix.size(), suffix) == 0) {
            rest.erase(rest.size() - suffix.size());
            return true;
        }
        return false;
    };
    if (strip_suffix("(QtB)")) spec.quant_order = QuantOrder::QuantizeThenBrighten;
    else if (strip_suffix("(cont)")) spec.quant_order = QuantOrder::NoQuantize;

    if (rest != "Baseline") {
        std::size_t pos = 0;
        while (pos < rest.size()) {
            std::size_t next = rest.find('+', pos);
            if (next == std::string::npos) next = rest.size();
            const std::string token = rest.substr(pos, next - pos);
            if (token == "L") spec.linear_domain = true;
            else if (token == "E") spec.true_exposure_meta = true;
            else if (token == "Q") spec.fine_quant = true;
            else if (token == "W") spec.wb_meta = true;
            else throw std::invalid_argument("unknown variant label: " + label);
            pos = next + 1;
        }
    }
    validate_variant(spec);
    return spec;
}

namespace {

PackedRaw snap_packed(const PackedRaw& p, int bits) {
    std::array<Plane, 4> ch;
    for (int c = 0; c < 4; ++c) ch[c] = pipeline::snap_to_code_grid(p.channel(c), bits);
    return PackedRaw(std::move(ch));
}

SrgbImage snap_srgb(const SrgbImage& img, int bits) {
    std::array<Plane, 3> ch;
    for (int c = 0; c < 3; ++c) ch[c] = pipeline::snap_to_code_grid(img.channel(c), bits);
    return SrgbImage(std::move(ch));
}

PackedRaw apply_packed_gains(const PackedRaw& p, const Vec3& gains) {
    std::array<Plane, 4> ch;
    const double g[4] = {gains[0], gains[1], gains[1], gains[2]};
    for (int c = 0; c < 4; ++c) ch[c] = clamp_unit(p.channel(c) * g[c]);
    return PackedRaw(std::move(ch));
}

}  // namespace

EnhancerInput make_variant_input(const ScenePair& pair, const VariantSpec& spec) {
    validate_variant(spec);
    const CameraProfile& profile = pair.profile();
    const double ratio = spec.true_exposure_meta
                             ? pair.gamma()
                             : noise::estimate_gamma_hat(pair.noisy_short(), pair.clean_long());

    if (spec.linear_domain) {
        PackedRaw packed = pack_bayer(pair.noisy_short());
        if (spec.wb_meta) packed = apply_packed_gains(packed, profile.wb_metered);
        switch (spec.quant_order) {
            case QuantOrder::BrightenThenQuantize:
                packed = snap_packed(noise::brighten(packed, ratio), spec.fine_quant ? 16 : 8);
                break;
            case QuantOrder::QuantizeThenBrighten:
                packed = noise::brighten(snap_packed(packed, 8), ratio);
                break;
            case QuantOrder::NoQuantize:
                packed = noise::brighten(packed, ratio);
                break;
        }
        const int bits = spec.quant_order == QuantOrder::NoQuantize ? 0
                        : spec.quant_order == QuantOrder::QuantizeThenBrighten ? 8
                        : spec.fine_quant ? 16 : 8;
        return EnhancerInput{InputDomain::PackedLinear, std::move(packed), std::nullopt,
                             spec.wb_meta, bits, profile};
    }

    const LinearRgbImage lin =
        pipeline::linear_process(pair.noisy_short(), profile.wb_metered, profile.ccm);
    SrgbImage srgb = pipeline::process(lin, profile);
    int bits = 0;
    if (!spec.fine_quant) bits = 8;
    else if (spec.quant_order == QuantOrder::BrightenThenQuantize) bits = 16;
    if (bits != 0) srgb = snap_srgb(srgb, bits);
    return EnhancerInput{InputDomain::Srgb, std::move(srgb), ratio, false, bits, profile};
}

}  // namespace rawbench::fem
