#pragma once

#include "rawbench/scenes.hpp"
#include "rawbench/variants.hpp"

#include <span>
#include <string>
#include <vector>

namespace rawbench::fem {

/// One benchmark result cell. `error` is empty on success; failed cells keep
/// their place in the table with zeroed scores.
struct MetricRow {
    std::string scene;
    std::string variant;
    std::string enhancer;
    double psnr_db = 0.0;
    double ssim = 0.0;
    std::string error;
};

struct NamedEnhancer {
    std::string name;
    EnhancerFn fn;
};

/// Evaluate every (scene, variant, enhancer) cell against the scene's ground
/// truth. Rows come back in canonical (scene, variant, enhancer) input order;
/// per-cell failures are reported on stderr and the run continues.
std::vector<MetricRow> run_benchmark(std::span<const ScenePair> scenes,
                                     std::span<const VariantSpec> variants,
                                     std::span<const NamedEnhancer> enhancers);

}  // namespace rawbench::fem
