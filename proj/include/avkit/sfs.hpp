#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avkit/core.hpp"

namespace avkit {

enum class PenaltyKind { kSine, kCosine, kExp, kNone };

std::string_view to_string(PenaltyKind kind) noexcept;
/// Accepts "sine", "cosine", "exp", "none"; throws InvalidArgument otherwise.
PenaltyKind parse_penalty_kind(std::string_view name);

enum class DistanceMode {
  kNormalized,  ///< d = |a-b| / m, in (0,1]
  kRawIndex,    ///< d = |a-b|; sine denominator clamped at 1e-6
};

/// Temporal separation penalty for one frame pair at distance d:
///   sine:   gamma * (1 / (sin(pi d / 2) + 1) - 1)
///   cosine: gamma * (cos(pi d / 2) - 1)
///   exp:    gamma * (exp(lambda d) - 1)
///   none:   0
double separation_penalty(PenaltyKind kind, double d, double gamma, double lambda,
                          DistanceMode mode = DistanceMode::kNormalized);

struct AffinityOptions {
  double gamma = 20.0;
  PenaltyKind penalty = PenaltyKind::kSine;
  double lambda = 5.0;
  DistanceMode distance = DistanceMode::kNormalized;
};

/// Q = cosine similarity + separation penalty over m frames. Indexing is
/// 1-based to line up with frame positions in reports.
class AffinityMatrix {
 public:
  AffinityMatrix(std::size_t m, std::vector<double> q, AffinityOptions options);

  std::size_t m() const noexcept { return m_; }
  double at(std::size_t a, std::size_t b) const { return q_[(a - 1) * m_ + (b - 1)]; }
  const AffinityOptions& options() const noexcept { return options_; }

  /// 1-based positions of frames whose embedding had zero norm.
  std::vector<std::size_t> zero_norm_frames;

 private:
  std::size_t m_;
  std::vector<double> q_;
  AffinityOptions options_;
};

AffinityMatrix build_affinity(const std::vector<EmbeddingVector>& frames, const AffinityOptions& options = {});

struct SelectOptions {
  /// End the chain at argmin_i C[i][k] instead of always at frame m.
  bool free_endpoint = false;
};

struct SelectionPlan {
  std::size_t m = 0;
  std::size_t k = 0;
  std::vector<double> cost_table;          ///< (m+1) x (k+1), row-major
  std::vector<long long> backtrack;        ///< (m+1) x (k+1), -1 when unset
  std::vector<std::size_t> selected;       ///< ascending 1-based frame positions
  double cost = 0.0;

  double cost_at(std::size_t i, std::size_t j) const { return cost_table[i * (k + 1) + j]; }
  long long backtrack_at(std::size_t i, std::size_t j) const { return backtrack[i * (k + 1) + j]; }
};

/// Exact DP over ascending k-chains minimizing the sum of Q over consecutive
/// selected frames. The first pick costs nothing (sentinel row Q[0][i] = 0).
/// Ties keep the smallest predecessor.
SelectionPlan select_frames(const AffinityMatrix& q, std::size_t k, const SelectOptions& options = {});

/// Sum of Q over consecutive entries of `chain`, accumulated left to right
/// exactly as the DP does.
double chain_cost(const AffinityMatrix& q, const std::vector<std::size_t>& chain);

/// m evenly spaced 1-based positions over 1..total. Endpoints are included
/// for m >= 2; m == 1 picks (total + 1) / 2 (integer division).
std::vector<std::size_t> uniform_sample_indices(std::size_t total_frames, std::size_t m);

}  // namespace avkit
