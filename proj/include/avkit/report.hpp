#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "avkit/mtgs.hpp"
#include "avkit/sfs.hpp"
#include "avkit/stem.hpp"
#include "avkit/text_metrics.hpp"

namespace avkit {

enum class ReportFormat {
  kJson,   ///< indented, trailing newline
  kJsonl,  ///< single line, trailing newline
};

/// Canonical report text: keys sorted lexicographically, floating-point
/// numbers with exactly 6 decimals (-0 printed as 0), integers verbatim.
/// Throws InvalidArgument when any number is NaN or infinite.
std::string render_report(const nlohmann::json& report, ReportFormat format = ReportFormat::kJson);

void write_report(const nlohmann::json& report, const std::filesystem::path& path,
                  ReportFormat format = ReportFormat::kJson);

nlohmann::json stem_report_json(const StemReport& r, bool include_iou_values);
nlohmann::json mtgs_report_json(const MtgsReport& r, bool per_video);
nlohmann::json alignment_report_json(const AlignmentReport& r);
nlohmann::json selection_report_json(const SelectionPlan& plan);

}  // namespace avkit
