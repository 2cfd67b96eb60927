#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace avkit {

/// Closed time range in seconds. Construction enforces finite bounds,
/// start >= 0 and end > start.
class TimeInterval {
 public:
  TimeInterval(double start_s, double end_s);

  double start_s() const noexcept { return start_; }
  double end_s() const noexcept { return end_; }
  double duration() const noexcept { return end_ - start_; }

  friend bool operator==(const TimeInterval&, const TimeInterval&) = default;

 private:
  double start_;
  double end_;
};

/// Sorted, pairwise-disjoint intervals. Touching intervals are merged, so
/// [0,5] and [5,9] normalize to [0,9].
class IntervalSet {
 public:
  IntervalSet() = default;

  static IntervalSet normalize(std::vector<TimeInterval> raw);

  std::span<const TimeInterval> intervals() const noexcept { return intervals_; }
  bool empty() const noexcept { return intervals_.empty(); }
  std::size_t size() const noexcept { return intervals_.size(); }
  double duration() const noexcept;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<TimeInterval> intervals_;
};

IntervalSet normalize_interval_set(std::vector<TimeInterval> raw);
double total_duration(const IntervalSet& s);
IntervalSet interval_union(const IntervalSet& a, const IntervalSet& b);
double intersection_duration(const IntervalSet& a, const IntervalSet& b);
/// Duration(a ∩ b) / Duration(a ∪ b); 0 when both are empty.
double interval_set_iou(const IntervalSet& a, const IntervalSet& b);

/// Strips leading and trailing ASCII whitespace.
std::string trim(std::string_view s);

struct Grounding {
  std::string video_id;
  TimeInterval interval;

  friend bool operator==(const Grounding&, const Grounding&) = default;
};

/// Throws InvariantError when the video id is empty after trimming.
Grounding make_grounding(std::string_view video_id, TimeInterval interval);

struct Step {
  int index = 1;
  std::string text;
  std::vector<Grounding> groundings;

  friend bool operator==(const Step&, const Step&) = default;
};

struct QAItem {
  std::string id;
  std::string question;
  std::vector<Step> steps;
  /// Flat answer text; when absent the step texts joined by "\n" stand in.
  std::optional<std::string> answer;

  friend bool operator==(const QAItem&, const QAItem&) = default;
};

void validate_step(const Step& step);
/// Checks id, every step, and that step indices run 1..n.
void validate_item(const QAItem& item);

/// Step texts joined with "\n", or the flat answer when present.
std::string answer_text(const QAItem& item);

/// Fixed-dimension real vector with finite entries and D >= 1.
class EmbeddingVector {
 public:
  explicit EmbeddingVector(std::vector<double> values);

  static EmbeddingVector zeros(std::size_t dim);

  std::size_t dim() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double norm() const noexcept;

  friend bool operator==(const EmbeddingVector&, const EmbeddingVector&) = default;

 private:
  std::vector<double> values_;
};

/// Cosine similarity; 0 when either vector has zero norm. Throws
/// DimensionError on length mismatch.
double cosine(const EmbeddingVector& a, const EmbeddingVector& b);

}  // namespace avkit
