#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "avkit/core.hpp"

namespace avkit {

/// Element-wise product; throws DimensionError on length mismatch.
EmbeddingVector hadamard_fuse(const EmbeddingVector& audio, const EmbeddingVector& visual);

struct VideoEntry {
  std::string video_id;
  EmbeddingVector av;       ///< fused audio-visual embedding
  EmbeddingVector caption;  ///< caption embedding

  friend bool operator==(const VideoEntry&, const VideoEntry&) = default;
};

/// Video entries sharing one dimension, with unique ids.
class RetrievalIndex {
 public:
  RetrievalIndex(std::size_t dim, std::vector<VideoEntry> entries);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<VideoEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const VideoEntry* find(std::string_view video_id) const;

  friend bool operator==(const RetrievalIndex&, const RetrievalIndex&) = default;

 private:
  std::size_t dim_;
  std::vector<VideoEntry> entries_;
};

struct VideoScore {
  std::string video_id;
  double s_av = 0.0;
  double s_cap = 0.0;
  double sim_avg = 0.0;
};

struct ScoreTable {
  std::vector<VideoScore> scores;  ///< sorted by sim_avg desc, then video_id asc

  std::vector<std::string> ranking() const;
};

ScoreTable score_videos(const EmbeddingVector& query, const RetrievalIndex& index);

std::vector<std::string> top_k(const ScoreTable& table, std::size_t k);

enum class RecallDenominator {
  kCapped,    ///< min(k, |relevant|)
  kRelevant,  ///< |relevant|
};

RecallDenominator parse_recall_denominator(std::string_view name);

/// Per-query recall at each k. Empty relevant sets are rejected.
std::map<std::size_t, double> recall_at_k(const std::vector<std::string>& ranking,
                                          const std::set<std::string>& relevant, const std::vector<std::size_t>& ks,
                                          RecallDenominator denominator = RecallDenominator::kCapped);

}  // namespace avkit
