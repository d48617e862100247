#include "rawbench/benchmark.hpp"

#include "rawbench/metrics.hpp"
#include "rawbench/pipeline.hpp"

#include <cstdio>
#include <stdexcept>

namespace rawbench::fem {

std::vector<MetricRow> run_benchmark(std::span<const ScenePair> scenes,
                                     std::span<const VariantSpec> variants,
                                     std::span<const NamedEnhancer> enhancers) {
    if (scenes.empty() || variants.empty() || enhancers.empty()) {
        throw std::invalid_argument("run_benchmark: empty scene, variant, or enhancer list");
    }
    std::vector<MetricRow> rows;
    rows.reserve(scenes.size() * variants.size() * enhancers.size());

    for (const ScenePair& pair : scenes) {
        const SrgbImage target = pipeline::dequantize(pair.ground_truth);
        for (const VariantSpec& spec : variants) {
            const std::string label = variant_label(spec);
            EnhancerInput input = make_variant_input(pair, spec);
            for (const NamedEnhancer& enhancer : enhancers) {
                MetricRow row{pair.id, label, enhancer.name, 0.0, 0.0, {}};
                try {
                    const SrgbImage out = enhancer.fn(input);
                    if (out.height() != target.height() || out.width() != target.width()) {
                        throw std::runtime_error("enhancer output shape mismatch");
                    }
                    row.psnr_db = psnr(out, target);
                    row.ssim = ssim(out, target);
                } catch (const std::exception& e) {
                    row.error = e.what();
                    std::fprintf(stderr, "[bench] %s / %s / %s: %s\n", pair.id.c_str(),
                                 label.c_str(), enhancer.name.c_str(), e.what());
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

}  // namespace rawbench::fem
