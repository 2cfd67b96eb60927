#include "avkit/stem.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "avkit/errors.hpp"

namespace avkit {

SimilarityMatrix::SimilarityMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows_ * cols_) {
    throw DimensionError("similarity matrix has " + std::to_string(values_.size()) + " values for shape " +
                         std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

SimilarityMatrix text_similarity_matrix(const std::vector<std::string>& gt_texts,
                                        const std::vector<std::string>& pred_texts, const TextEmbedder& embedder) {
  if (gt_texts.empty() || pred_texts.empty()) {
    throw InvalidArgument("text_similarity_matrix needs non-empty step lists");
  }
  const auto embed_all = [&](const std::vector<std::string>& texts, const char* side) {
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (std::size_t i = 0; i < texts.size(); ++i) {
      try {
        out.push_back(embedder.embed(texts[i]));
      } catch (const DataError& e) {
        throw SchemaError(e.detail(), ErrorContext{"", "", std::string(side) + " step " + std::to_string(i + 1)});
      }
    }
    return out;
  };
  const auto gt = embed_all(gt_texts, "ground truth");
  const auto pred = embed_all(pred_texts, "predicted");
  std::vector<double> values;
  values.reserve(gt.size() * pred.size());
  for (const auto& g : gt) {
    for (const auto& p : pred) values.push_back(cosine(g, p));
  }
  return SimilarityMatrix(gt.size(), pred.size(), std::move(values));
}

std::vector<std::size_t> solve_assignment(std::size_t n, const std::vector<double>& cost) {
  if (cost.size() != n * n) throw DimensionError("assignment cost matrix is not square");
  if (n == 0) return {};
  const double inf = std::numeric_limits<double>::infinity();
  const auto a = [&](std::size_t i, std::size_t j) { return cost[(i - 1) * n + (j - 1)]; };
  // Potentials and the current matching, 1-based with column 0 as the root.
  std::vector<double> u(n + 1, 0.0);
  std::vector<double> v(n + 1, 0.0);
  std::vector<std::size_t> row_of(n + 1, 0);
  std::vector<std::size_t> way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    row_of[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = row_of[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = a(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      row_of[j0] = row_of[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> col_of_row(n, 0);
  for (std::size_t j = 1; j <= n; ++j) col_of_row[row_of[j] - 1] = j - 1;
  return col_of_row;
}

std::vector<MatchedPair> optimal_assignment(const SimilarityMatrix& sim) {
  const std::size_t n = std::max(sim.rows(), sim.cols());
  // Padding cells cost 1, i.e. similarity 0.
  std::vector<double> cost(n * n, 1.0);
  for (std::size_t r = 0; r < sim.rows(); ++r) {
    for (std::size_t c = 0; c < sim.cols(); ++c) cost[r * n + c] = 1.0 - sim.at(r, c);
  }
  const auto assignment = solve_assignment(n, cost);
  std::vector<MatchedPair> pairs;
  for (std::size_t r = 0; r < sim.rows(); ++r) {
    const std::size_t c = assignment[r];
    if (c < sim.cols()) pairs.push_back({r, c, sim.at(r, c)});
  }
  return pairs;
}

MatchSet hungarian_match(const SimilarityMatrix& sim, double tau_s) {
  if (!(tau_s >= 0.0 && tau_s <= 1.0)) throw InvalidArgument("tau_s must lie in [0,1]");
  MatchSet out;
  out.threshold = tau_s;
  for (const auto& p : optimal_assignment(sim)) {
    if (p.similarity >= tau_s) out.pairs.push_back(p);
  }
  return out;
}

namespace {

double ratio(long long num, long long den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

IntervalSet intervals_for(const Step& step, const std::string& video_id) {
  std::vector<TimeInterval> raw;
  for (const auto& g : step.groundings) {
    if (g.video_id == video_id) raw.push_back(g.interval);
  }
  return IntervalSet::normalize(std::move(raw));
}

std::set<std::string> video_ids(const Step& step) {
  std::set<std::string> ids;
  for (const auto& g : step.groundings) ids.insert(g.video_id);
  return ids;
}

void finalize(StemReport& r) {
  r.sm = ratio(r.missing, r.gt_steps);
  r.sh = ratio(r.hallucinated, r.pred_steps);
  r.so = ratio(r.wrong_order, r.matched_pairs);
  r.sfp = ratio(r.false_pos, r.pred_groundings_matched);
  r.sfn = ratio(r.false_neg, r.gt_groundings_matched);
  double sum = 0.0;
  for (double v : r.iou_values) sum += v;
  r.s_iou_mean = r.iou_values.empty() ? 0.0 : sum / static_cast<double>(r.iou_values.size());
}

}  // namespace

StemReport stem_evaluate_with(const std::vector<Step>& gt, const std::vector<Step>& pred,
                              const SimilarityMatrix& sim, double tau_s) {
  if (gt.empty()) throw InvalidArgument("stem: ground truth step list is empty");
  if (sim.rows() != gt.size() || sim.cols() != pred.size()) {
    throw DimensionError("stem: similarity matrix shape does not match the step lists");
  }
  const MatchSet matches = hungarian_match(sim, tau_s);

  StemReport r;
  r.gt_steps = static_cast<long long>(gt.size());
  r.pred_steps = static_cast<long long>(pred.size());
  r.matched_pairs = static_cast<long long>(matches.pairs.size());

  std::vector<char> gt_matched(gt.size(), 0);
  std::vector<char> pred_matched(pred.size(), 0);
  for (const auto& pair : matches.pairs) {
    gt_matched[pair.gt] = 1;
    pred_matched[pair.pred] = 1;
    if (pair.gt != pair.pred) ++r.wrong_order;

    const Step& g = gt[pair.gt];
    const Step& p = pred[pair.pred];
    const auto gt_ids = video_ids(g);
    const auto pred_ids = video_ids(p);
    for (const auto& pg : p.groundings) {
      ++r.pred_groundings_matched;
      if (!gt_ids.contains(pg.video_id)) {
        ++r.false_pos;
      } else {
        r.iou_values.push_back(interval_set_iou(intervals_for(g, pg.video_id), intervals_for(p, pg.video_id)));
      }
    }
    for (const auto& gg : g.groundings) {
      ++r.gt_groundings_matched;
      if (!pred_ids.contains(gg.video_id)) ++r.false_neg;
    }
  }
  for (char m : gt_matched) r.missing += m ? 0 : 1;
  for (char m : pred_matched) r.hallucinated += m ? 0 : 1;
  finalize(r);
  return r;
}

StemReport stem_evaluate(const std::vector<Step>& gt, const std::vector<Step>& pred, double tau_s,
                         const TextEmbedder& embedder) {
  if (gt.empty()) throw InvalidArgument("stem: ground truth step list is empty");
  if (pred.empty()) return stem_evaluate_with(gt, pred, SimilarityMatrix(gt.size(), 0, {}), tau_s);
  std::vector<std::string> gt_texts;
  std::vector<std::string> pred_texts;
  for (const auto& s : gt) gt_texts.push_back(s.text);
  for (const auto& s : pred) pred_texts.push_back(s.text);
  return stem_evaluate_with(gt, pred, text_similarity_matrix(gt_texts, pred_texts, embedder), tau_s);
}

StemReport stem_aggregate(const std::vector<StemReport>& reports) {
  if (reports.empty()) throw InvalidArgument("stem_aggregate: no reports");
  StemReport out;
  for (const auto& r : reports) {
    out.missing += r.missing;
    out.hallucinated += r.hallucinated;
    out.wrong_order += r.wrong_order;
    out.false_pos += r.false_pos;
    out.false_neg += r.false_neg;
    out.iou_values.insert(out.iou_values.end(), r.iou_values.begin(), r.iou_values.end());
    out.gt_steps += r.gt_steps;
    out.pred_steps += r.pred_steps;
    out.matched_pairs += r.matched_pairs;
    out.pred_groundings_matched += r.pred_groundings_matched;
    out.gt_groundings_matched += r.gt_groundings_matched;
    out.sm += r.sm;
    out.sh += r.sh;
    out.so += r.so;
    out.sfp += r.sfp;
    out.sfn += r.sfn;
    out.s_iou_mean += r.s_iou_mean;
  }
  const double n = static_cast<double>(reports.size());
  out.sm /= n;
  out.sh /= n;
  out.so /= n;
  out.sfp /= n;
  out.sfn /= n;
  out.s_iou_mean /= n;
  return out;
}

}  // namespace avkit
