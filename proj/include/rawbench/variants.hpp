#pragma once

#include "rawbench/scenes.hpp"
#include "rawbench/types.hpp"

#include <functional>
#include <optional>
#include <string>
#include <variant>

namespace rawbench::fem {

enum class QuantOrder { BrightenThenQuantize, QuantizeThenBrighten, NoQuantize };

/// The benchmark factor flags: L (linear domain), E (true exposure metadata),
/// Q (fine quantization), W (white-balance metadata), plus the
/// brighten/quantize ordering strategy.
struct VariantSpec {
    bool linear_domain = false;      // L
    bool true_exposure_meta = false; // E
    bool fine_quant = false;         // Q
    bool wb_meta = false;            // W
    QuantOrder quant_order = QuantOrder::BrightenThenQuantize;
};

/// Throws std::invalid_argument on inconsistent flag combinations:
/// NoQuantize without Q, QuantizeThenBrighten with Q, or W without L.
void validate_variant(const VariantSpec& spec);

/// Paper label grammar: subsets of "L+E+Q" (or "Baseline"), "+W" suffix when
/// W is set. "(QtB)" / "(cont)" mark the non-default quantization orders so
/// labels stay injective.
std::string variant_label(const VariantSpec& spec);

/// Inverse of variant_label.
VariantSpec parse_variant_label(const std::string& label);

enum class InputDomain { PackedLinear, Srgb };

/// What an enhancement operator receives: the constructed image in its
/// domain, the exposure ratio when the variant grants one, and enough
/// context to render an sRGB result.
struct EnhancerInput {
    InputDomain domain;
    std::variant<PackedRaw, SrgbImage> image;
    std::optional<double> gamma_given;
    bool wb_applied = false;  // packed path: metered gains already applied
    int quant_bits = 0;       // 0 = continuous, else 8 or 16
    CameraProfile profile;

    const PackedRaw& packed() const { return std::get<PackedRaw>(image); }
    const SrgbImage& srgb() const { return std::get<SrgbImage>(image); }
};

/// Construct the input a variant feeds to an enhancer.
/// L set: pack the noisy short exposure, optionally pre-apply metered gains,
/// brighten by gamma (E) or gamma_hat (not E), quantize per the order flags.
/// L clear: run the noisy short through the camera pipeline to sRGB with the
/// metered gains, attach the ratio, quantize per the Q flag.
EnhancerInput make_variant_input(const ScenePair& pair, const VariantSpec& spec);

using EnhancerFn = std::function<SrgbImage(const EnhancerInput&)>;

}  // namespace rawbench::fem
