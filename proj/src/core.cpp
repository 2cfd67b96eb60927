#include "avkit/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "avkit/errors.hpp"

namespace avkit {

TimeInterval::TimeInterval(double start_s, double end_s) : start_(start_s), end_(end_s) {
  if (!std::isfinite(start_s) || !std::isfinite(end_s)) {
    throw InvariantError("interval bounds must be finite");
  }
  if (start_s < 0.0) {
    throw InvariantError("interval start " + std::to_string(start_s) + " is negative");
  }
  if (end_s <= start_s) {
    throw InvariantError("interval end " + std::to_string(end_s) + " is not after start " +
                         std::to_string(start_s));
  }
}

IntervalSet IntervalSet::normalize(std::vector<TimeInterval> raw) {
  std::sort(raw.begin(), raw.end(), [](const TimeInterval& a, const TimeInterval& b) {
    return a.start_s() < b.start_s() || (a.start_s() == b.start_s() && a.end_s() < b.end_s());
  });
  IntervalSet out;
  for (const auto& iv : raw) {
    if (!out.intervals_.empty() && iv.start_s() <= out.intervals_.back().end_s()) {
      auto& last = out.intervals_.back();
      if (iv.end_s() > last.end_s()) last = TimeInterval(last.start_s(), iv.end_s());
    } else {
      out.intervals_.push_back(iv);
    }
  }
  return out;
}

double IntervalSet::duration() const noexcept {
  double total = 0.0;
  for (const auto& iv : intervals_) total += iv.duration();
  return total;
}

IntervalSet normalize_interval_set(std::vector<TimeInterval> raw) {
  return IntervalSet::normalize(std::move(raw));
}

double total_duration(const IntervalSet& s) { return s.duration(); }

IntervalSet interval_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<TimeInterval> all(a.intervals().begin(), a.intervals().end());
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return IntervalSet::normalize(std::move(all));
}

double intersection_duration(const IntervalSet& a, const IntervalSet& b) {
  const auto xs = a.intervals();
  const auto ys = b.intervals();
  std::size_t i = 0;
  std::size_t j = 0;
  double total = 0.0;
  while (i < xs.size() && j < ys.size()) {
    const double lo = std::max(xs[i].start_s(), ys[j].start_s());
    const double hi = std::min(xs[i].end_s(), ys[j].end_s());
    if (hi > lo) total += hi - lo;
    if (xs[i].end_s() < ys[j].end_s()) {
      ++i;
    } else {
      ++j;
    }
  }
  return total;
}

double interval_set_iou(const IntervalSet& a, const IntervalSet& b) {
  const double uni = interval_union(a, b).duration();
  if (uni <= 0.0) return 0.0;
  return intersection_duration(a, b) / uni;
}

std::string trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  };
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

Grounding make_grounding(std::string_view video_id, TimeInterval interval) {
  std::string id = trim(video_id);
  if (id.empty()) throw InvariantError("grounding video_id is empty");
  return Grounding{std::move(id), interval};
}

void validate_step(const Step& step) {
  if (step.index < 1) throw InvariantError("step index " + std::to_string(step.index) + " < 1");
  if (trim(step.text).empty()) {
    throw InvariantError("step " + std::to_string(step.index) + " has empty text");
  }
  for (const auto& g : step.groundings) {
    if (trim(g.video_id).empty()) {
      throw InvariantError("step " + std::to_string(step.index) + " has a grounding with empty video_id");
    }
  }
}

void validate_item(const QAItem& item) {
  if (trim(item.id).empty()) throw InvariantError("record id is empty");
  for (std::size_t i = 0; i < item.steps.size(); ++i) {
    validate_step(item.steps[i]);
    if (item.steps[i].index != static_cast<int>(i + 1)) {
      throw InvariantError("step indices must run 1..n; position " + std::to_string(i + 1) +
                           " has index " + std::to_string(item.steps[i].index));
    }
  }
}

std::string answer_text(const QAItem& item) {
  if (item.answer) return *item.answer;
  std::string out;
  for (std::size_t i = 0; i < item.steps.size(); ++i) {
    if (i > 0) out += '\n';
    out += item.steps[i].text;
  }
  return out;
}

EmbeddingVector::EmbeddingVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw DimensionError("embedding dimension must be >= 1");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw InvariantError("embedding value at position " + std::to_string(i) + " is not finite");
    }
  }
}

EmbeddingVector EmbeddingVector::zeros(std::size_t dim) {
  return EmbeddingVector(std::vector<double>(dim, 0.0));
}

double EmbeddingVector::norm() const noexcept {
  double s = 0.0;
  for (double v : values_) s += v * v;
  return std::sqrt(s);
}

double cosine(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("cosine of vectors with dimensions " + std::to_string(a.dim()) + " and " +
                         std::to_string(b.dim()));
  }
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  const double c = dot / (std::sqrt(na) * std::sqrt(nb));
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace avkit
