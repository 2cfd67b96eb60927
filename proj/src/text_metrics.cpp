#include "avkit/text_metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "avkit/errors.hpp"

namespace avkit {

namespace {

constexpr int kMaxN = 4;

using NgramCounts = std::map<std::string, int>;

// counts[n-1] holds the n-grams of the token stream.
std::array<NgramCounts, kMaxN> count_ngrams(const std::vector<std::string>& tokens) {
  std::array<NgramCounts, kMaxN> counts;
  for (int n = 1; n <= kMaxN; ++n) {
    if (tokens.size() < static_cast<std::size_t>(n)) break;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      std::string key = tokens[i];
      for (int k = 1; k < n; ++k) key += ' ' + tokens[i + k];
      ++counts[n - 1][key];
    }
  }
  return counts;
}

void check_corpus(const std::vector<std::string>& predictions, const std::vector<std::string>& references,
                  const char* metric) {
  if (predictions.empty()) throw InvalidArgument(std::string(metric) + ": empty corpus");
  if (predictions.size() != references.size()) {
    throw InvalidArgument(std::string(metric) + ": " + std::to_string(predictions.size()) +
                          " predictions but " + std::to_string(references.size()) + " references");
  }
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    const bool alnum = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    if (alnum) {
      cur += static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

std::uint64_t stable_hash(std::string_view s) noexcept {
  std::uint64_t h = 14695981039346656037ULL;
  for (char ch : s) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  return h;
}

HashedBowEmbedder::HashedBowEmbedder(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw InvalidArgument("embedder dimension must be >= 1");
}

std::size_t HashedBowEmbedder::bucket(std::string_view token) const noexcept {
  return static_cast<std::size_t>(stable_hash(token) % dim_);
}

EmbeddingVector HashedBowEmbedder::embed(std::string_view text) const {
  std::vector<double> v(dim_, 0.0);
  for (const auto& tok : tokenize(text)) v[bucket(tok)] += 1.0;
  double sq = 0.0;
  for (double x : v) sq += x * x;
  if (sq > 0.0) {
    const double n = std::sqrt(sq);
    for (double& x : v) x /= n;
  }
  return EmbeddingVector(std::move(v));
}

PrecomputedEmbedder::PrecomputedEmbedder(std::size_t dim, std::map<std::string, EmbeddingVector> table)
    : dim_(dim), table_(std::move(table)) {
  for (const auto& [text, vec] : table_) {
    if (vec.dim() != dim_) {
      throw DimensionError("embedding for text \"" + text + "\" has dimension " + std::to_string(vec.dim()) +
                           ", expected " + std::to_string(dim_));
    }
  }
}

EmbeddingVector PrecomputedEmbedder::embed(std::string_view text) const {
  auto it = table_.find(std::string(text));
  if (it == table_.end()) {
    throw SchemaError("no precomputed embedding for text \"" + std::string(text) + "\"");
  }
  return it->second;
}

std::unique_ptr<TextEmbedder> default_embedder() { return std::make_unique<HashedBowEmbedder>(); }

double bleu4(const std::vector<std::string>& predictions, const std::vector<std::string>& references) {
  check_corpus(predictions, references, "bleu4");
  std::array<long long, kMaxN> matched{};
  std::array<long long, kMaxN> total{};
  long long hyp_len = 0;
  long long ref_len = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const auto hyp = tokenize(predictions[i]);
    const auto ref = tokenize(references[i]);
    hyp_len += static_cast<long long>(hyp.size());
    ref_len += static_cast<long long>(ref.size());
    const auto hc = count_ngrams(hyp);
    const auto rc = count_ngrams(ref);
    for (int n = 0; n < kMaxN; ++n) {
      for (const auto& [gram, cnt] : hc[n]) {
        total[n] += cnt;
        auto it = rc[n].find(gram);
        if (it != rc[n].end()) matched[n] += std::min(cnt, it->second);
      }
    }
  }
  double log_sum = 0.0;
  for (int n = 0; n < kMaxN; ++n) {
    if (matched[n] == 0 || total[n] == 0) return 0.0;
    log_sum += std::log(static_cast<double>(matched[n]) / static_cast<double>(total[n]));
  }
  const double bp =
      hyp_len < ref_len ? std::exp(1.0 - static_cast<double>(ref_len) / static_cast<double>(hyp_len)) : 1.0;
  return bp * std::exp(log_sum / kMaxN);
}

std::vector<double> cider_per_pair(const std::vector<std::string>& predictions,
                                   const std::vector<std::string>& references, const CiderOptions& options) {
  check_corpus(predictions, references, "cider");
  if (predictions.size() < 2) {
    throw InvalidArgument("cider: IDF needs a corpus of at least 2 prediction/reference pairs");
  }
  const std::size_t pairs = predictions.size();
  std::vector<std::vector<std::string>> hyp_tokens(pairs);
  std::vector<std::vector<std::string>> ref_tokens(pairs);
  std::vector<std::array<NgramCounts, kMaxN>> hyp_counts(pairs);
  std::vector<std::array<NgramCounts, kMaxN>> ref_counts(pairs);
  std::map<std::string, int> doc_freq;
  for (std::size_t i = 0; i < pairs; ++i) {
    hyp_tokens[i] = tokenize(predictions[i]);
    ref_tokens[i] = tokenize(references[i]);
    hyp_counts[i] = count_ngrams(hyp_tokens[i]);
    ref_counts[i] = count_ngrams(ref_tokens[i]);
    for (const auto& by_n : ref_counts[i]) {
      for (const auto& [gram, cnt] : by_n) ++doc_freq[gram];
    }
  }
  const double log_docs = std::log(static_cast<double>(pairs));
  const auto idf = [&](const std::string& gram) {
    auto it = doc_freq.find(gram);
    const double df = it == doc_freq.end() ? 1.0 : static_cast<double>(it->second);
    return log_docs - std::log(df);
  };

  std::vector<double> scores(pairs, 0.0);
  for (std::size_t i = 0; i < pairs; ++i) {
    double sum_over_n = 0.0;
    for (int n = 0; n < kMaxN; ++n) {
      std::map<std::string, double> hv;
      std::map<std::string, double> rv;
      double hn = 0.0;
      double rn = 0.0;
      for (const auto& [gram, cnt] : hyp_counts[i][n]) {
        const double w = cnt * idf(gram);
        hv[gram] = w;
        hn += w * w;
      }
      for (const auto& [gram, cnt] : ref_counts[i][n]) {
        const double w = cnt * idf(gram);
        rv[gram] = w;
        rn += w * w;
      }
      double dot = 0.0;
      for (const auto& [gram, w] : hv) {
        auto it = rv.find(gram);
        if (it == rv.end()) continue;
        dot += options.variant == CiderVariant::kCiderD ? std::min(w, it->second) * it->second : w * it->second;
      }
      double val = 0.0;
      if (hn > 0.0 && rn > 0.0) val = dot / (std::sqrt(hn) * std::sqrt(rn));
      if (options.variant == CiderVariant::kCiderD) {
        const double delta = static_cast<double>(hyp_tokens[i].size()) - static_cast<double>(ref_tokens[i].size());
        val *= std::exp(-(delta * delta) / (2.0 * options.sigma * options.sigma));
      }
      sum_over_n += val;
    }
    double score = sum_over_n / kMaxN;
    if (options.variant == CiderVariant::kCiderD) score *= 10.0;
    scores[i] = score;
  }
  return scores;
}

double cider(const std::vector<std::string>& predictions, const std::vector<std::string>& references,
             const CiderOptions& options) {
  const auto per_pair = cider_per_pair(predictions, references, options);
  double sum = 0.0;
  for (double s : per_pair) sum += s;
  return sum / static_cast<double>(per_pair.size());
}

double text_sim(std::string_view prediction, std::string_view reference, const TextEmbedder& embedder) {
  return cosine(embedder.embed(prediction), embedder.embed(reference));
}

AlignmentReport evaluate_alignment(const std::vector<std::string>& predictions,
                                   const std::vector<std::string>& references, const TextEmbedder& embedder,
                                   const CiderOptions& cider_options) {
  AlignmentReport r;
  r.bleu4 = bleu4(predictions, references);
  r.cider = cider(predictions, references, cider_options);
  double sum = 0.0;
  for (std::size_t i = 0; i < predictions.size(); ++i) sum += text_sim(predictions[i], references[i], embedder);
  r.text_sim = sum / static_cast<double>(predictions.size());
  return r;
}

}  // namespace avkit
