#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "avkit/core.hpp"

namespace avkit {

/// video_id -> merged intervals cited for that video. Never holds empty sets.
using GroundingMap = std::map<std::string, IntervalSet>;

struct MtgsReport {
  std::map<std::string, double> per_video_iou;  ///< matched ids only
  std::set<std::string> matched_ids;
  double score = 0.0;
  bool gt_empty = false;    ///< query had no ground-truth groundings
  bool pred_empty = false;
};

/// Groups all step groundings by trimmed video id and merges per video.
GroundingMap collect_groundings(const std::vector<Step>& steps);

/// Mean IoU over the video ids present on both sides; 0 when none match.
MtgsReport mtgs_per_query(const GroundingMap& gt, const GroundingMap& pred);

double mtgs_avg(const std::vector<MtgsReport>& reports);

}  // namespace avkit
