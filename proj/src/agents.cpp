#include "avkit/agents.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>
#include <tuple>

#include "avkit/errors.hpp"

namespace avkit {

void validate_context(const VideoContext& ctx) {
  if (trim(ctx.video_id).empty()) throw InvariantError("video context has empty video_id");
  for (std::size_t i = 1; i < ctx.segments.size(); ++i) {
    if (ctx.segments[i].interval.start_s() < ctx.segments[i - 1].interval.start_s()) {
      throw InvariantError("transcript segments of " + ctx.video_id + " are not sorted by start (segment " +
                           std::to_string(i + 1) + ")");
    }
  }
  if (!ctx.frames.empty()) {
    const std::size_t dim = ctx.frames.front().dim();
    for (std::size_t i = 0; i < ctx.frames.size(); ++i) {
      if (ctx.frames[i].dim() != dim) {
        throw DimensionError("frame " + std::to_string(i + 1) + " of " + ctx.video_id + " has mismatched dimension");
      }
    }
  }
  std::size_t prev = 0;
  for (std::size_t idx : ctx.selected_frames) {
    if (idx <= prev || (!ctx.frames.empty() && idx > ctx.frames.size())) {
      throw InvariantError("selected frame indices of " + ctx.video_id + " must be ascending and within 1..frames");
    }
    prev = idx;
  }
}

MockTranscriptAgent::MockTranscriptAgent(std::shared_ptr<const TextEmbedder> embedder, double score_threshold,
                                         std::size_t max_windows)
    : embedder_(std::move(embedder)), threshold_(score_threshold), max_windows_(max_windows) {
  if (!embedder_) throw InvalidArgument("mock agent needs an embedder");
  if (!(score_threshold >= 0.0 && score_threshold <= 1.0)) {
    throw InvalidArgument("mock agent score threshold must lie in [0,1]");
  }
}

AgentFinding MockTranscriptAgent::answer(std::string_view query, const VideoContext& ctx) const {
  const EmbeddingVector q = embedder_->embed(query);
  std::vector<Window> scored;
  for (const auto& seg : ctx.segments) {
    const double score = std::clamp(cosine(q, embedder_->embed(seg.text)), 0.0, 1.0);
    if (score >= threshold_) scored.push_back(Window{seg.interval, score, seg.text});
  }
  std::stable_sort(scored.begin(), scored.end(), [](const Window& a, const Window& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.interval.start_s() < b.interval.start_s();
  });
  if (scored.size() > max_windows_) scored.erase(scored.begin() + static_cast<std::ptrdiff_t>(max_windows_), scored.end());
  return AgentFinding{ctx.video_id, std::move(scored)};
}

std::unique_ptr<AgentInterface> mock_transcript_agent(std::shared_ptr<const TextEmbedder> embedder,
                                                      double score_threshold, std::size_t max_windows) {
  return std::make_unique<MockTranscriptAgent>(std::move(embedder), score_threshold, max_windows);
}

GroundedAnswer meta_aggregate(std::string_view /*query*/, const std::vector<AgentFinding>& findings,
                              double dedupe_iou) {
  struct Candidate {
    const std::string* video_id;
    const Window* window;
  };
  std::set<std::string> seen;
  std::vector<Candidate> all;
  for (const auto& f : findings) {
    if (!seen.insert(f.video_id).second) {
      throw InvalidArgument("meta_aggregate: two findings for video " + f.video_id);
    }
    for (const auto& w : f.windows) all.push_back({&f.video_id, &w});
  }
  const auto key = [](const Candidate& c) {
    return std::make_tuple(-c.window->score, std::cref(*c.video_id), c.window->interval.start_s(),
                           c.window->interval.end_s(), std::cref(c.window->snippet));
  };
  std::sort(all.begin(), all.end(), [&](const Candidate& a, const Candidate& b) { return key(a) < key(b); });

  GroundedAnswer out;
  std::map<std::string, std::vector<IntervalSet>> kept;
  for (const auto& c : all) {
    const IntervalSet mine = IntervalSet::normalize({c.window->interval});
    auto& same_video = kept[*c.video_id];
    const bool suppressed = std::any_of(same_video.begin(), same_video.end(), [&](const IntervalSet& other) {
      return interval_set_iou(other, mine) > dedupe_iou;
    });
    if (suppressed) continue;
    same_video.push_back(mine);
    Step step;
    step.index = static_cast<int>(out.steps.size() + 1);
    step.text = c.window->snippet;
    step.groundings.push_back(Grounding{*c.video_id, c.window->interval});
    out.steps.push_back(std::move(step));
  }
  return out;
}

PipelineResult run_pipeline(std::string_view query, const RetrievalIndex& index,
                            const std::map<std::string, VideoContext>& contexts, const EmbeddingVector& query_embedding,
                            const AgentInterface& agent, const PipelineOptions& options) {
  PipelineResult result;
  const ScoreTable table = score_videos(query_embedding, index);
  result.retrieved = top_k(table, options.k);

  const std::size_t n = result.retrieved.size();
  std::vector<std::optional<AgentFinding>> findings(n);
  std::vector<std::string> errors(n);
  const auto run_one = [&](std::size_t i) {
    const std::string& vid = result.retrieved[i];
    auto it = contexts.find(vid);
    if (it == contexts.end()) {
      errors[i] = "no context for retrieved video";
      return;
    }
    try {
      AgentFinding f = agent.answer(query, it->second);
      f.video_id = vid;
      findings[i] = std::move(f);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(options.workers, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) run_one(i);
      });
    }
  }

  std::vector<AgentFinding> ok;
  for (std::size_t i = 0; i < n; ++i) {
    if (findings[i]) {
      ok.push_back(std::move(*findings[i]));
    } else {
      result.failures.push_back({result.retrieved[i], errors[i]});
    }
  }
  result.answer = meta_aggregate(query, ok, options.dedupe_iou);
  for (const auto& f : result.failures) result.diagnostics.push_back("agent failed for " + f.video_id + ": " + f.message);
  if (result.answer.steps.empty()) result.diagnostics.push_back("no agent produced a grounded window");
  return result;
}

}  // namespace avkit
