#pragma once

#include "rawbench/benchmark.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rawbench::io {

enum class ReportFormat { Csv, Markdown, PlotData };

ReportFormat parse_report_format(const std::string& name);  // csv | md | plot

struct Aggregate {
    std::string variant;
    std::string enhancer;
    double mean_psnr_db = 0.0;
    double mean_ssim = 0.0;
    int count = 0;
};

struct ReportDocument {
    std::vector<fem::MetricRow> rows;
    std::vector<Aggregate> aggregates;  // per (variant, enhancer), error rows excluded
};

/// Build a document from rows, computing per-(variant, enhancer) aggregates
/// in first-appearance order.
ReportDocument make_document(std::vector<fem::MetricRow> rows);

/// Render the document. Csv: "scene,variant,enhancer,psnr_db,ssim" rows at
/// fixed 4-decimal precision. Markdown: aligned table per variant with mean
/// rows. PlotData: per-(variant, enhancer) series of (gamma, mean psnr/ssim).
std::string emit_report(const ReportDocument& doc, ReportFormat format);

std::vector<fem::MetricRow> parse_report_csv(const std::string& text);

/// Exposure ratio recovered from the "_g<gamma>" scene-id suffix.
std::optional<double> gamma_from_scene_id(const std::string& scene_id);

}  // namespace rawbench::io
