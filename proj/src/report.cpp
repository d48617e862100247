#include "rawbench/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rawbench::io {

namespace {

std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = line.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(line.substr(pos));
            break;
        }
        out.push_back(line.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

std::string markdown_table(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> widths(cells[0].size(), 0);
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::ostringstream out;
    auto emit_row = [&](const std::vector<std::string>& row) {
        out << '|';
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << ' ' << row[c] << std::string(widths[c] - row[c].size(), ' ') << " |";
        }
        out << '\n';
    };
    emit_row(cells[0]);
    out << '|';
    for (const std::size_t w : widths) out << ' ' << std::string(w, '-') << " |";
    out << '\n';
    for (std::size_t r = 1; r < cells.size(); ++r) emit_row(cells[r]);
    return out.str();
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
    if (name == "csv") return ReportFormat::Csv;
    if (name == "md") return ReportFormat::Markdown;
    if (name == "plot") return ReportFormat::PlotData;
    throw std::invalid_argument("unknown report format: " + name);
}

ReportDocument make_document(std::vector<fem::MetricRow> rows) {
    ReportDocument doc;
    doc.rows = std::move(rows);
    std::vector<std::pair<std::string, std::string>> order;
    std::map<std::pair<std::string, std::string>, Aggregate> sums;
    for (const auto& row : doc.rows) {
        if (!row.error.empty()) continue;
        const auto key = std::make_pair(row.variant, row.enhancer);
        auto it = sums.find(key);
        if (it == sums.end()) {
            order.push_back(key);
            it = sums.emplace(key, Aggregate{row.variant, row.enhancer, 0.0, 0.0, 0}).first;
        }
        it->second.mean_psnr_db += row.psnr_db;
        it->second.mean_ssim += row.ssim;
        it->second.count += 1;
    }
    for (const auto& key : order) {
        Aggregate agg = sums.at(key);
        agg.mean_psnr_db /= agg.count;
        agg.mean_ssim /= agg.count;
        doc.aggregates.push_back(std::move(agg));
    }
    return doc;
}

std::string emit_report(const ReportDocument& doc, ReportFormat format) {
    if (doc.rows.empty()) throw std::invalid_argument("emit_report: empty report");

    if (format == ReportFormat::Csv) {
        std::ostringstream out;
        out << "scene,variant,enhancer,psnr_db,ssim\n";
        for (const auto& row : doc.rows) {
            out << row.scene << ',' << row.variant << ',' << row.enhancer << ','
                << fixed4(row.psnr_db) << ',' << fixed4(row.ssim) << '\n';
        }
        return out.str();
    }

    if (format == ReportFormat::Markdown) {
        std::vector<std::string> variant_order;
        for (const auto& row : doc.rows) {
            if (std::find(variant_order.begin(), variant_order.end(), row.variant) ==
                variant_order.end()) {
                variant_order.push_back(row.variant);
            }
        }
        std::ostringstream out;
        out << "# Benchmark report\n";
        for (const auto& variant : variant_order) {
            out << "\n## " << variant << "\n\n";
            std::vector<std::vector<std::string>> cells;
            cells.push_back({"scene", "enhancer", "psnr_db", "ssim"});
            for (const auto& row : doc.rows) {
                if (row.variant != variant) continue;
                if (!row.error.empty()) {
                    cells.push_back({row.scene, row.enhancer, "error", row.error});
                    continue;
                }
                cells.push_back({row.scene, row.enhancer, fixed4(row.psnr_db),
                                 fixed4(row.ssim)});
            }
            for (const auto& agg : doc.aggregates) {
                if (agg.variant != variant) continue;
                cells.push_back({"**mean**", agg.enhancer, fixed4(agg.mean_psnr_db),
                                 fixed4(agg.mean_ssim)});
            }
            out << markdown_table(cells);
        }
        return out.str();
    }

    // PlotData: one series point per (variant, enhancer, gamma).
    struct Key {
        std::string variant, enhancer;
        double gamma;
        bool operator<(const Key& o) const {
            if (variant != o.variant) return variant < o.variant;
            if (enhancer != o.enhancer) return enhancer < o.enhancer;
            return gamma < o.gamma;
        }
    };
    std::map<Key, std::pair<double, int>> psnr_sums;
    std::map<Key, double> ssim_sums;
    for (const auto& row : doc.rows) {
        if (!row.error.empty()) continue;
        const auto gamma = gamma_from_scene_id(row.scene);
        if (!gamma) continue;
        const Key key{row.variant, row.enhancer, *gamma};
        auto& acc = psnr_sums[key];
        acc.first += row.psnr_db;
        acc.second += 1;
        ssim_sums[key] += row.ssim;
    }
    if (psnr_sums.empty()) {
        throw std::invalid_argument("emit_report: no rows carry a _g<gamma> scene id");
    }
    std::ostringstream out;
    out << "variant,enhancer,gamma,mean_psnr_db,mean_ssim\n";
    for (const auto& [key, acc] : psnr_sums) {
        char gamma_buf[32];
        std::snprintf(gamma_buf, sizeof(gamma_buf), "%g", key.gamma);
        out << key.variant << ',' << key.enhancer << ',' << gamma_buf << ','
            << fixed4(acc.first / acc.second) << ','
            << fixed4(ssim_sums.at(key) / acc.second) << '\n';
    }
    return out.str();
}

std::vector<fem::MetricRow> parse_report_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "scene,variant,enhancer,psnr_db,ssim") {
        throw std::runtime_error("unrecognized report csv header");
    }
    std::vector<fem::MetricRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 5) throw std::runtime_error("malformed report csv row: " + line);
        fem::MetricRow row;
        row.scene = fields[0];
        row.variant = fields[1];
        row.enhancer = fields[2];
        row.psnr_db = std::stod(fields[3]);
        row.ssim = std::stod(fields[4]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::optional<double> gamma_from_scene_id(const std::string& scene_id) {
    const std::size_t pos = scene_id.rfind("_g");
    if (pos == std::string::npos) return std::nullopt;
    const std::string tail = scene_id.substr(pos + 2);
    if (tail.empty()) return std::nullopt;
    char* end = nullptr;
    const double value = std::strtod(tail.c_str(), &end);
    if (end == tail.c_str() || *end != '\0' || !(value > 0.0)) return std::nullopt;
    return value;
}

}  // namespace rawbench::io
