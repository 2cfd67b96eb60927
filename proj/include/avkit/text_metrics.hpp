#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "avkit/core.hpp"

namespace avkit {

/// Maps text to a fixed-dimension vector. Implementations must be
/// deterministic and callable concurrently from several threads.
class TextEmbedder {
 public:
  virtual ~TextEmbedder() = default;
  virtual std::size_t dimension() const = 0;
  virtual EmbeddingVector embed(std::string_view text) const = 0;
};

/// Lowercases ASCII letters and splits on runs of non-alphanumeric bytes.
/// Bytes outside ASCII are separators.
std::vector<std::string> tokenize(std::string_view text);

/// 64-bit FNV-1a. Bucket assignment in the hashed embedder depends on it, so
/// it must never change without bumping HashedBowEmbedder::kVersion.
std::uint64_t stable_hash(std::string_view s) noexcept;

/// Bag-of-words embedder: token counts hashed into `dim` buckets, then L2
/// normalized. Empty token streams give the zero vector.
class HashedBowEmbedder final : public TextEmbedder {
 public:
  static constexpr std::size_t kDefaultDim = 256;
  static constexpr int kVersion = 1;

  explicit HashedBowEmbedder(std::size_t dim = kDefaultDim);

  std::size_t dimension() const override { return dim_; }
  EmbeddingVector embed(std::string_view text) const override;
  std::size_t bucket(std::string_view token) const noexcept;

 private:
  std::size_t dim_;
};

/// Looks texts up in a table of precomputed vectors; unknown text throws
/// DataError naming the text.
class PrecomputedEmbedder final : public TextEmbedder {
 public:
  PrecomputedEmbedder(std::size_t dim, std::map<std::string, EmbeddingVector> table);

  std::size_t dimension() const override { return dim_; }
  EmbeddingVector embed(std::string_view text) const override;
  const std::map<std::string, EmbeddingVector>& table() const noexcept { return table_; }

 private:
  std::size_t dim_;
  std::map<std::string, EmbeddingVector> table_;
};

std::unique_ptr<TextEmbedder> default_embedder();

/// Corpus-level BLEU with uniform weights over 1..4-gram modified precisions
/// and the standard brevity penalty. No smoothing.
double bleu4(const std::vector<std::string>& predictions, const std::vector<std::string>& references);

enum class CiderVariant {
  kCiderD,  ///< clipped TF-IDF, Gaussian length penalty, x10
  kPlain,   ///< plain TF-IDF cosine averaged over n, no clipping or penalty
};

struct CiderOptions {
  CiderVariant variant = CiderVariant::kCiderD;
  double sigma = 6.0;
};

/// Corpus mean of per-pair CIDEr scores. IDF comes from the reference corpus,
/// which therefore needs at least two pairs.
double cider(const std::vector<std::string>& predictions, const std::vector<std::string>& references,
             const CiderOptions& options = {});

/// Per-pair CIDEr values in input order.
std::vector<double> cider_per_pair(const std::vector<std::string>& predictions,
                                   const std::vector<std::string>& references,
                                   const CiderOptions& options = {});

double text_sim(std::string_view prediction, std::string_view reference, const TextEmbedder& embedder);

struct AlignmentReport {
  double bleu4 = 0.0;
  double cider = 0.0;
  double text_sim = 0.0;

  double bleu4_x100() const noexcept { return bleu4 * 100.0; }
  double cider_x100() const noexcept { return cider * 100.0; }
  double text_sim_x10() const noexcept { return text_sim * 10.0; }
};

/// BLEU@4 and CIDEr over the corpus; text_sim is the mean of per-pair cosines.
AlignmentReport evaluate_alignment(const std::vector<std::string>& predictions,
                                   const std::vector<std::string>& references,
                                   const TextEmbedder& embedder, const CiderOptions& cider_options = {});

}  // namespace avkit
