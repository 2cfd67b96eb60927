#include "avkit/mtgs.hpp"

#include "avkit/errors.hpp"

namespace avkit {

GroundingMap collect_groundings(const std::vector<Step>& steps) {
  std::map<std::string, std::vector<TimeInterval>> raw;
  for (const auto& step : steps) {
    for (const auto& g : step.groundings) raw[trim(g.video_id)].push_back(g.interval);
  }
  GroundingMap out;
  for (auto& [id, intervals] : raw) out.emplace(id, IntervalSet::normalize(std::move(intervals)));
  return out;
}

MtgsReport mtgs_per_query(const GroundingMap& gt, const GroundingMap& pred) {
  MtgsReport r;
  r.gt_empty = gt.empty();
  r.pred_empty = pred.empty();
  double sum = 0.0;
  for (const auto& [id, gt_set] : gt) {
    auto it = pred.find(id);
    if (it == pred.end()) continue;
    const double iou = interval_set_iou(gt_set, it->second);
    r.matched_ids.insert(id);
    r.per_video_iou.emplace(id, iou);
    sum += iou;
  }
  r.score = r.matched_ids.empty() ? 0.0 : sum / static_cast<double>(r.matched_ids.size());
  return r;
}

double mtgs_avg(const std::vector<MtgsReport>& reports) {
  if (reports.empty()) throw InvalidArgument("mtgs_avg: no per-query reports");
  double sum = 0.0;
  for (const auto& r : reports) sum += r.score;
  return sum / static_cast<double>(reports.size());
}

}  // namespace avkit
