#include "avkit/sfs.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "avkit/errors.hpp"

namespace avkit {

namespace {
constexpr double kSineClamp = 1e-6;
}

std::string_view to_string(PenaltyKind kind) noexcept {
  switch (kind) {
    case PenaltyKind::kSine: return "sine";
    case PenaltyKind::kCosine: return "cosine";
    case PenaltyKind::kExp: return "exp";
    case PenaltyKind::kNone: return "none";
  }
  return "none";
}

PenaltyKind parse_penalty_kind(std::string_view name) {
  if (name == "sine") return PenaltyKind::kSine;
  if (name == "cosine") return PenaltyKind::kCosine;
  if (name == "exp") return PenaltyKind::kExp;
  if (name == "none") return PenaltyKind::kNone;
  throw InvalidArgument("unknown penalty kind \"" + std::string(name) + "\" (expected sine|cosine|exp|none)");
}

double separation_penalty(PenaltyKind kind, double d, double gamma, double lambda, DistanceMode mode) {
  const double half_pi = std::numbers::pi / 2.0;
  switch (kind) {
    case PenaltyKind::kSine: {
      double denom = std::sin(half_pi * d) + 1.0;
      if (mode == DistanceMode::kRawIndex && denom < kSineClamp) denom = kSineClamp;
      return gamma * (1.0 / denom - 1.0);
    }
    case PenaltyKind::kCosine: return gamma * (std::cos(half_pi * d) - 1.0);
    case PenaltyKind::kExp: return gamma * (std::exp(lambda * d) - 1.0);
    case PenaltyKind::kNone: return 0.0;
  }
  return 0.0;
}

AffinityMatrix::AffinityMatrix(std::size_t m, std::vector<double> q, AffinityOptions options)
    : m_(m), q_(std::move(q)), options_(options) {
  if (q_.size() != m_ * m_) throw DimensionError("affinity matrix size does not match m*m");
  for (std::size_t i = 0; i < q_.size(); ++i) {
    if (!std::isfinite(q_[i])) {
      throw InvariantError("affinity entry (" + std::to_string(i / m_ + 1) + "," + std::to_string(i % m_ + 1) +
                           ") is not finite");
    }
  }
}

AffinityMatrix build_affinity(const std::vector<EmbeddingVector>& frames, const AffinityOptions& options) {
  const std::size_t m = frames.size();
  if (m < 2) throw InvalidArgument("build_affinity needs at least 2 frames");
  if (!(options.gamma >= 0.0) || !std::isfinite(options.gamma)) {
    throw InvalidArgument("gamma must be a finite value >= 0");
  }
  if (!std::isfinite(options.lambda)) throw InvalidArgument("lambda must be finite");
  const std::size_t dim = frames.front().dim();
  std::vector<std::size_t> zero_norm;
  for (std::size_t a = 0; a < m; ++a) {
    if (frames[a].dim() != dim) {
      throw DimensionError("frame " + std::to_string(a + 1) + " has dimension " + std::to_string(frames[a].dim()) +
                           ", expected " + std::to_string(dim));
    }
    if (frames[a].norm() == 0.0) zero_norm.push_back(a + 1);
  }
  std::vector<double> q(m * m, 0.0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      const double sim = cosine(frames[a], frames[b]);
      double penalty = 0.0;
      if (a != b) {
        const double gap = static_cast<double>(b - a);
        const double d = options.distance == DistanceMode::kNormalized ? gap / static_cast<double>(m) : gap;
        penalty = separation_penalty(options.penalty, d, options.gamma, options.lambda, options.distance);
      }
      q[a * m + b] = sim + penalty;
      q[b * m + a] = sim + penalty;
    }
  }
  AffinityMatrix out(m, std::move(q), options);
  out.zero_norm_frames = std::move(zero_norm);
  return out;
}

SelectionPlan select_frames(const AffinityMatrix& q, std::size_t k, const SelectOptions& options) {
  const std::size_t m = q.m();
  if (k < 1 || k > m) {
    throw InvalidArgument("select_frames: k=" + std::to_string(k) + " must satisfy 1 <= k <= m=" + std::to_string(m));
  }
  const double inf = std::numeric_limits<double>::infinity();
  SelectionPlan plan;
  plan.m = m;
  plan.k = k;
  plan.cost_table.assign((m + 1) * (k + 1), inf);
  plan.backtrack.assign((m + 1) * (k + 1), -1);
  const auto cell = [k](std::size_t i, std::size_t j) { return i * (k + 1) + j; };
  // Row 0 is the sentinel start: Q[0][i] = 0.
  const auto link = [&q](std::size_t p, std::size_t i) { return p == 0 ? 0.0 : q.at(p, i); };

  plan.cost_table[cell(0, 0)] = 0.0;
  for (std::size_t j = 1; j <= k; ++j) {
    for (std::size_t i = j; i <= m; ++i) {
      for (std::size_t p = j - 1; p <= i - 1; ++p) {
        const double prev = plan.cost_table[cell(p, j - 1)];
        if (prev == inf) continue;
        const double cand = prev + link(p, i);
        if (cand < plan.cost_table[cell(i, j)]) {
          plan.cost_table[cell(i, j)] = cand;
          plan.backtrack[cell(i, j)] = static_cast<long long>(p);
        }
      }
    }
  }

  std::size_t end = m;
  if (options.free_endpoint) {
    for (std::size_t i = k; i <= m; ++i) {
      if (plan.cost_table[cell(i, k)] < plan.cost_table[cell(end, k)]) end = i;
    }
  }
  if (plan.cost_table[cell(end, k)] == inf) throw Error("select_frames: no feasible chain (internal error)");
  plan.cost = plan.cost_table[cell(end, k)];

  std::vector<std::size_t> chain;
  std::size_t i = end;
  for (std::size_t j = k; j > 0; --j) {
    chain.push_back(i);
    i = static_cast<std::size_t>(plan.backtrack[cell(i, j)]);
  }
  plan.selected.assign(chain.rbegin(), chain.rend());
  return plan;
}

double chain_cost(const AffinityMatrix& q, const std::vector<std::size_t>& chain) {
  double total = 0.0;
  for (std::size_t t = 0; t < chain.size(); ++t) total += t == 0 ? 0.0 : q.at(chain[t - 1], chain[t]);
  return total;
}

std::vector<std::size_t> uniform_sample_indices(std::size_t total_frames, std::size_t m) {
  if (total_frames < 1 || m < 1) throw InvalidArgument("uniform_sample_indices: counts must be >= 1");
  if (m > total_frames) {
    throw InvalidArgument("cannot sample m=" + std::to_string(m) + " frames from " + std::to_string(total_frames));
  }
  if (m == 1) return {(total_frames + 1) / 2};
  std::vector<std::size_t> out;
  out.reserve(m);
  const std::size_t span = total_frames - 1;
  const std::size_t steps = m - 1;
  for (std::size_t i = 0; i < m; ++i) {
    // round(i * span / steps), half up, in integer arithmetic
    out.push_back(1 + (2 * i * span + steps) / (2 * steps));
  }
  return out;
}

}  // namespace avkit
