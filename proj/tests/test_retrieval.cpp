#include <doctest.h>

#include <algorithm>
#include <random>

#include "avkit/errors.hpp"
#include "avkit/retrieval.hpp"
#include "oracles.hpp"

using namespace avkit;

namespace {

EmbeddingVector vec(std::vector<double> v) { return EmbeddingVector(std::move(v)); }

RetrievalIndex small_index() {
  return RetrievalIndex(2, {{"a", vec({1, 0}), vec({1, 0})},
                            {"b", vec({0, 1}), vec({0, 1})},
                            {"c", vec({1, 1}), vec({1, 0})}});
}

}  // namespace

TEST_CASE("hadamard_fuse") {
  CHECK(hadamard_fuse(vec({1, 2, 3}), vec({4, 5, 6})) == vec({4, 10, 18}));
  CHECK(hadamard_fuse(vec({1, 0}), vec({0, 1})) == vec({0, 0}));
  CHECK_THROWS_AS(hadamard_fuse(vec({1}), vec({1, 2})), DimensionError);
}

TEST_CASE("RetrievalIndex validation") {
  CHECK(small_index().size() == 3);
  CHECK(small_index().find("b") != nullptr);
  CHECK(small_index().find("zz") == nullptr);
  CHECK_THROWS_AS(RetrievalIndex(2, {{"a", vec({1, 0}), vec({1, 0})}, {"a", vec({0, 1}), vec({0, 1})}}),
                  InvariantError);
  CHECK_THROWS_AS(RetrievalIndex(3, {{"a", vec({1, 0}), vec({1, 0})}}), DimensionError);
}

TEST_CASE("score_videos averages the two cosines") {
  const auto table = score_videos(vec({1, 0}), small_index());
  REQUIRE(table.scores.size() == 3);
  CHECK(table.scores[0].video_id == "a");
  CHECK(table.scores[0].sim_avg == 1.0);
  CHECK(table.scores[1].video_id == "c");
  CHECK(table.scores[1].s_av == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(table.scores[1].s_cap == 1.0);
  CHECK(table.scores[1].sim_avg == doctest::Approx((1.0 / std::sqrt(2.0) + 1.0) / 2.0));
  CHECK(table.scores[2].video_id == "b");
  CHECK(table.scores[2].sim_avg == 0.0);
  CHECK_THROWS_AS(score_videos(vec({1, 0, 0}), small_index()), DimensionError);
}

TEST_CASE("ties are broken by video id") {
  const RetrievalIndex idx(2, {{"z", vec({1, 0}), vec({1, 0})}, {"m", vec({1, 0}), vec({1, 0})},
                               {"a", vec({1, 0}), vec({1, 0})}});
  CHECK(score_videos(vec({1, 0}), idx).ranking() == std::vector<std::string>{"a", "m", "z"});
}

TEST_CASE("top_k") {
  const auto table = score_videos(vec({1, 0}), small_index());
  CHECK(top_k(table, 2) == std::vector<std::string>{"a", "c"});
  CHECK(top_k(table, 3).size() == 3);
  CHECK_THROWS_AS(top_k(table, 4), InvalidArgument);
  CHECK_THROWS_AS(top_k(table, 0), InvalidArgument);
}

TEST_CASE("recall_at_k") {
  const std::vector<std::string> ranking{"a", "b", "c", "d", "e"};
  const auto r = recall_at_k(ranking, {"b", "d", "x"}, {1, 3, 5});
  CHECK(r.at(1) == 0.0);
  CHECK(r.at(3) == doctest::Approx(1.0 / 3.0));
  CHECK(r.at(5) == doctest::Approx(2.0 / 3.0));

  // Capped: one relevant found at k=1 counts fully.
  CHECK(recall_at_k(ranking, {"a", "b"}, {1}).at(1) == 1.0);
  CHECK(recall_at_k(ranking, {"a", "b"}, {1}, RecallDenominator::kRelevant).at(1) == 0.5);
  CHECK_THROWS_AS(recall_at_k(ranking, {}, {1}), InvalidArgument);
  CHECK(parse_recall_denominator("capped") == RecallDenominator::kCapped);
  CHECK(parse_recall_denominator("relevant") == RecallDenominator::kRelevant);
  CHECK_THROWS_AS(parse_recall_denominator("other"), InvalidArgument);
}

TEST_CASE("retrieval properties") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  const std::size_t dim = 8;
  const auto random_vec = [&] {
    std::vector<double> v(dim);
    for (double& x : v) x = u(rng);
    return EmbeddingVector(std::move(v));
  };
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<VideoEntry> entries;
    std::vector<VideoEntry> scaled;
    for (int i = 0; i < 12; ++i) {
      const std::string id = "v" + std::to_string(i);
      const auto av = random_vec();
      const auto cap = random_vec();
      entries.push_back({id, av, cap});
      std::vector<double> av2(av.values().begin(), av.values().end());
      const double s = scale(rng);
      for (double& x : av2) x *= s;
      scaled.push_back({id, EmbeddingVector(std::move(av2)), cap});
    }
    const RetrievalIndex idx(dim, entries);
    const RetrievalIndex idx2(dim, scaled);
    const auto q = random_vec();
    const auto ranking = score_videos(q, idx).ranking();
    // Positive rescaling of an entry leaves cosine, and so the ranking, unchanged
    // up to floating point ties.
    const auto t1 = score_videos(q, idx);
    const auto t2 = score_videos(q, idx2);
    for (std::size_t i = 0; i < t1.scores.size(); ++i) {
      CHECK(t1.scores[i].sim_avg == doctest::Approx(t2.scores[i].sim_avg).epsilon(1e-12));
    }

    // Recall is monotone in k and bounded.
    std::set<std::string> relevant{"v1", "v5", "v9"};
    const auto r = recall_at_k(ranking, relevant, {1, 2, 3, 5, 8, 12});
    double prev_hits = 0;
    for (auto [k, v] : r) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
      const double hits = v * static_cast<double>(std::min<std::size_t>(k, relevant.size()));
      CHECK(hits >= prev_hits - 1e-12);
      prev_hits = hits;
    }
    CHECK(r.at(12) == 1.0);
  }
}
