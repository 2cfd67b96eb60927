#include "avkit/retrieval.hpp"

#include <algorithm>

#include "avkit/errors.hpp"

namespace avkit {

EmbeddingVector hadamard_fuse(const EmbeddingVector& audio, const EmbeddingVector& visual) {
  if (audio.dim() != visual.dim()) {
    throw DimensionError("hadamard fusion of dimensions " + std::to_string(audio.dim()) + " and " +
                         std::to_string(visual.dim()));
  }
  std::vector<double> out(audio.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = audio[i] * visual[i];
  return EmbeddingVector(std::move(out));
}

RetrievalIndex::RetrievalIndex(std::size_t dim, std::vector<VideoEntry> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0) throw DimensionError("index dimension must be >= 1");
  std::set<std::string> seen;
  for (const auto& e : entries_) {
    if (trim(e.video_id).empty()) throw InvariantError("index entry with empty video_id");
    if (!seen.insert(e.video_id).second) throw InvariantError("duplicate video_id " + e.video_id);
    if (e.av.dim() != dim_ || e.caption.dim() != dim_) {
      throw DimensionError("video " + e.video_id + " has embedding dimensions av=" + std::to_string(e.av.dim()) +
                           " caption=" + std::to_string(e.caption.dim()) + ", index dim is " + std::to_string(dim_));
    }
  }
}

const VideoEntry* RetrievalIndex::find(std::string_view video_id) const {
  for (const auto& e : entries_) {
    if (e.video_id == video_id) return &e;
  }
  return nullptr;
}

std::vector<std::string> ScoreTable::ranking() const {
  std::vector<std::string> out;
  out.reserve(scores.size());
  for (const auto& s : scores) out.push_back(s.video_id);
  return out;
}

ScoreTable score_videos(const EmbeddingVector& query, const RetrievalIndex& index) {
  if (query.dim() != index.dim()) {
    throw DimensionError("query dimension " + std::to_string(query.dim()) + " does not match index dimension " +
                         std::to_string(index.dim()));
  }
  ScoreTable table;
  table.scores.reserve(index.size());
  for (const auto& e : index.entries()) {
    VideoScore s;
    s.video_id = e.video_id;
    s.s_av = cosine(query, e.av);
    s.s_cap = cosine(query, e.caption);
    s.sim_avg = (s.s_av + s.s_cap) / 2.0;
    table.scores.push_back(std::move(s));
  }
  std::sort(table.scores.begin(), table.scores.end(), [](const VideoScore& a, const VideoScore& b) {
    if (a.sim_avg != b.sim_avg) return a.sim_avg > b.sim_avg;
    return a.video_id < b.video_id;
  });
  return table;
}

std::vector<std::string> top_k(const ScoreTable& table, std::size_t k) {
  if (k < 1 || k > table.scores.size()) {
    throw InvalidArgument("top_k: k=" + std::to_string(k) + " outside 1.." + std::to_string(table.scores.size()));
  }
  std::vector<std::string> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(table.scores[i].video_id);
  return out;
}

RecallDenominator parse_recall_denominator(std::string_view name) {
  if (name == "capped") return RecallDenominator::kCapped;
  if (name == "relevant") return RecallDenominator::kRelevant;
  throw InvalidArgument("unknown recall denominator \"" + std::string(name) + "\" (expected capped|relevant)");
}

std::map<std::size_t, double> recall_at_k(const std::vector<std::string>& ranking,
                                          const std::set<std::string>& relevant, const std::vector<std::size_t>& ks,
                                          RecallDenominator denominator) {
  if (relevant.empty()) throw InvalidArgument("recall_at_k: relevant set is empty");
  std::map<std::size_t, double> out;
  for (std::size_t k : ks) {
    if (k == 0) throw InvalidArgument("recall_at_k: k must be positive");
    std::set<std::string> hits;
    for (std::size_t i = 0; i < std::min(k, ranking.size()); ++i) {
      if (relevant.contains(ranking[i])) hits.insert(ranking[i]);
    }
    const std::size_t den = denominator == RecallDenominator::kCapped ? std::min(k, relevant.size()) : relevant.size();
    out[k] = static_cast<double>(hits.size()) / static_cast<double>(den);
  }
  return out;
}

}  // namespace avkit
