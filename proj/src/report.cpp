#include "avkit/report.hpp"

#include <cmath>
#include <cstdio>

#include "avkit/dataio.hpp"
#include "avkit/errors.hpp"

namespace avkit {

using nlohmann::json;

namespace {

std::string format_float(double v) {
  if (!std::isfinite(v)) throw InvalidArgument("report contains a non-finite number");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

void emit(const json& j, bool pretty, int depth, std::string& out) {
  const auto newline = [&](int d) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(d) * 2, ' ');
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      // nlohmann::json stores objects in a std::map, so iteration is sorted.
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(it.key()).dump();
        out += pretty ? ": " : ":";
        emit(it.value(), pretty, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ',';
        newline(depth + 1);
        emit(j[i], pretty, depth + 1, out);
      }
      newline(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float:
      out += format_float(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string render_report(const json& report, ReportFormat format) {
  std::string out;
  emit(report, format == ReportFormat::kJson, 0, out);
  out += '\n';
  return out;
}

void write_report(const json& report, const std::filesystem::path& path, ReportFormat format) {
  // Render first so a bad report never leaves a partial file behind.
  const std::string text = render_report(report, format);
  write_text_file(path, text);
}

json stem_report_json(const StemReport& r, bool include_iou_values) {
  json j = {
      {"counts",
       {{"missing", r.missing},
        {"hallucinated", r.hallucinated},
        {"wrong_order", r.wrong_order},
        {"false_positive", r.false_pos},
        {"false_negative", r.false_neg}}},
      {"denominators",
       {{"gt_steps", r.gt_steps},
        {"pred_steps", r.pred_steps},
        {"matched_pairs", r.matched_pairs},
        {"pred_groundings_matched", r.pred_groundings_matched},
        {"gt_groundings_matched", r.gt_groundings_matched}}},
      {"sm", r.sm},
      {"sh", r.sh},
      {"so", r.so},
      {"sfp", r.sfp},
      {"sfn", r.sfn},
      {"s_iou_mean", r.s_iou_mean},
      {"iou_count", r.iou_values.size()},
  };
  if (include_iou_values) j["iou_values"] = r.iou_values;
  return j;
}

json mtgs_report_json(const MtgsReport& r, bool per_video) {
  json j = {{"score", r.score},
            {"matched_ids", json(std::vector<std::string>(r.matched_ids.begin(), r.matched_ids.end()))},
            {"gt_empty", r.gt_empty},
            {"pred_empty", r.pred_empty}};
  if (per_video) {
    json pv = json::object();
    for (const auto& [id, iou] : r.per_video_iou) pv[id] = iou;
    j["per_video_iou"] = std::move(pv);
  }
  return j;
}

json alignment_report_json(const AlignmentReport& r) {
  return {{"bleu4", r.bleu4},
          {"cider", r.cider},
          {"text_sim", r.text_sim},
          {"scaled", {{"bleu4_x100", r.bleu4_x100()}, {"cider_x100", r.cider_x100()}, {"text_sim_x10", r.text_sim_x10()}}}};
}

json selection_report_json(const SelectionPlan& plan) {
  return {{"k", plan.k}, {"m", plan.m}, {"selected", plan.selected}, {"chain_cost", plan.cost}};
}

}  // namespace avkit
