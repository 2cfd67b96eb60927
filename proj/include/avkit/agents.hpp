#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avkit/core.hpp"
#include "avkit/retrieval.hpp"
#include "avkit/text_metrics.hpp"

namespace avkit {

struct Window {
  TimeInterval interval;
  double score = 0.0;  ///< relevance in [0,1]
  std::string snippet;

  friend bool operator==(const Window&, const Window&) = default;
};

/// What one per-video agent reports back: windows sorted by score descending.
struct AgentFinding {
  std::string video_id;
  std::vector<Window> windows;

  friend bool operator==(const AgentFinding&, const AgentFinding&) = default;
};

struct TranscriptSegment {
  TimeInterval interval;
  std::string text;

  friend bool operator==(const TranscriptSegment&, const TranscriptSegment&) = default;
};

/// Everything a spawned agent sees for one video.
struct VideoContext {
  std::string video_id;
  std::vector<TranscriptSegment> segments;  ///< sorted by start
  std::vector<EmbeddingVector> frames;
  std::vector<std::size_t> selected_frames;  ///< 1-based, from frame selection

  friend bool operator==(const VideoContext&, const VideoContext&) = default;
};

void validate_context(const VideoContext& ctx);

/// Per-video agent. Implementations are invoked concurrently from several
/// workers and must not rely on call order. Remote-model adapters plug in
/// here.
class AgentInterface {
 public:
  virtual ~AgentInterface() = default;
  virtual AgentFinding answer(std::string_view query, const VideoContext& ctx) const = 0;
};

/// Deterministic stand-in for a multimodal agent: scores every transcript
/// segment by embedding cosine with the query and keeps the best
/// `max_windows` segments scoring at least `score_threshold`.
class MockTranscriptAgent final : public AgentInterface {
 public:
  MockTranscriptAgent(std::shared_ptr<const TextEmbedder> embedder, double score_threshold, std::size_t max_windows);

  AgentFinding answer(std::string_view query, const VideoContext& ctx) const override;

 private:
  std::shared_ptr<const TextEmbedder> embedder_;
  double threshold_;
  std::size_t max_windows_;
};

std::unique_ptr<AgentInterface> mock_transcript_agent(std::shared_ptr<const TextEmbedder> embedder,
                                                      double score_threshold, std::size_t max_windows);

struct GroundedAnswer {
  std::vector<Step> steps;

  friend bool operator==(const GroundedAnswer&, const GroundedAnswer&) = default;
};

/// Flattens all windows, orders them by (score desc, video_id asc, start asc)
/// and drops a window when an already kept window of the same video overlaps
/// it with IoU > dedupe_iou. Each kept window becomes one step.
GroundedAnswer meta_aggregate(std::string_view query, const std::vector<AgentFinding>& findings, double dedupe_iou);

struct AgentFailure {
  std::string video_id;
  std::string message;
};

struct PipelineOptions {
  std::size_t k = 6;
  double dedupe_iou = 0.7;
  std::size_t workers = 1;
};

struct PipelineResult {
  GroundedAnswer answer;
  std::vector<std::string> retrieved;
  std::vector<AgentFailure> failures;  ///< in retrieval order
  std::vector<std::string> diagnostics;
};

/// Retrieve top-k videos, run one agent per video, aggregate. The result does
/// not depend on worker count or agent completion order.
PipelineResult run_pipeline(std::string_view query, const RetrievalIndex& index,
                            const std::map<std::string, VideoContext>& contexts, const EmbeddingVector& query_embedding,
                            const AgentInterface& agent, const PipelineOptions& options = {});

}  // namespace avkit
