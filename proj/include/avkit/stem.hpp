#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "avkit/core.hpp"
#include "avkit/text_metrics.hpp"

namespace avkit {

/// Row-major n x m matrix of step similarities (rows = ground truth steps).
class SimilarityMatrix {
 public:
  SimilarityMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double at(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
};

SimilarityMatrix text_similarity_matrix(const std::vector<std::string>& gt_texts,
                                        const std::vector<std::string>& pred_texts, const TextEmbedder& embedder);

/// Indices are 0-based positions into the step lists.
struct MatchedPair {
  std::size_t gt = 0;
  std::size_t pred = 0;
  double similarity = 0.0;

  friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

struct MatchSet {
  std::vector<MatchedPair> pairs;  ///< ascending by gt index
  double threshold = 0.0;
};

/// Minimum-cost assignment over `cost` (square, row-major, size n*n).
/// Returns the column assigned to each row. Rows are processed in ascending
/// order and the first optimum found is kept.
std::vector<std::size_t> solve_assignment(std::size_t n, const std::vector<double>& cost);

/// Optimal one-to-one pairing of rows and columns maximizing total
/// similarity (min(n,m) pairs, no threshold applied).
std::vector<MatchedPair> optimal_assignment(const SimilarityMatrix& sim);

/// optimal_assignment with pairs below tau_s discarded.
MatchSet hungarian_match(const SimilarityMatrix& sim, double tau_s);

struct StemReport {
  // Raw counts.
  long long missing = 0;        ///< S_M
  long long hallucinated = 0;   ///< S_H
  long long wrong_order = 0;    ///< S_O
  long long false_pos = 0;      ///< S_FP
  long long false_neg = 0;      ///< S_FN
  std::vector<double> iou_values;

  // Denominators for the normalized values.
  long long gt_steps = 0;
  long long pred_steps = 0;
  long long matched_pairs = 0;
  long long pred_groundings_matched = 0;
  long long gt_groundings_matched = 0;

  // Normalized into [0,1]; 0/0 is 0.
  double sm = 0.0;
  double sh = 0.0;
  double so = 0.0;
  double sfp = 0.0;
  double sfn = 0.0;
  double s_iou_mean = 0.0;
};

StemReport stem_evaluate(const std::vector<Step>& gt, const std::vector<Step>& pred, double tau_s,
                         const TextEmbedder& embedder);

/// Same as stem_evaluate but with a caller-supplied similarity matrix.
StemReport stem_evaluate_with(const std::vector<Step>& gt, const std::vector<Step>& pred,
                              const SimilarityMatrix& sim, double tau_s);

/// Means of the normalized fields, sums of raw counts and denominators.
StemReport stem_aggregate(const std::vector<StemReport>& reports);

}  // namespace avkit
