#include <doctest.h>

#include <random>

#include "avkit/core.hpp"
#include "avkit/errors.hpp"
#include "oracles.hpp"

using namespace avkit;

namespace {

IntervalSet set_of(std::vector<std::pair<double, double>> spans) {
  std::vector<TimeInterval> raw;
  for (auto [a, b] : spans) raw.emplace_back(a, b);
  return normalize_interval_set(std::move(raw));
}

std::vector<std::pair<double, double>> spans_of(const IntervalSet& s) {
  std::vector<std::pair<double, double>> out;
  for (const auto& iv : s.intervals()) out.emplace_back(iv.start_s(), iv.end_s());
  return out;
}

// Endpoints on a 0.1 s lattice so the 0.01 s grid oracle is exact.
std::vector<std::pair<double, double>> random_spans(std::mt19937_64& rng, int max_count) {
  std::uniform_int_distribution<int> count(0, max_count);
  std::uniform_int_distribution<int> start(0, 600);
  std::uniform_int_distribution<int> len(1, 150);
  std::vector<std::pair<double, double>> out;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    const int s = start(rng);
    out.emplace_back(s / 10.0, (s + len(rng)) / 10.0);
  }
  return out;
}

}  // namespace

TEST_CASE("TimeInterval rejects degenerate and non-finite bounds") {
  CHECK_THROWS_AS(TimeInterval(5, 5), InvariantError);
  CHECK_THROWS_AS(TimeInterval(6, 5), InvariantError);
  CHECK_THROWS_AS(TimeInterval(-1, 5), InvariantError);
  CHECK_THROWS_AS(TimeInterval(0, std::numeric_limits<double>::infinity()), InvariantError);
  CHECK_THROWS_AS(TimeInterval(std::nan(""), 1), InvariantError);
  CHECK(TimeInterval(0, 0.5).duration() == 0.5);
}

TEST_CASE("normalize_interval_set") {
  CHECK(normalize_interval_set({}).empty());
  CHECK(spans_of(set_of({{0, 10}, {5, 15}})) == std::vector<std::pair<double, double>>{{0, 15}});
  CHECK(spans_of(set_of({{0, 5}, {5, 9}, {20, 21}})) == std::vector<std::pair<double, double>>{{0, 9}, {20, 21}});
  CHECK(spans_of(set_of({{20, 21}, {0, 5}, {1, 2}})) == std::vector<std::pair<double, double>>{{0, 5}, {20, 21}});
}

TEST_CASE("total_duration") {
  CHECK(total_duration(IntervalSet{}) == 0.0);
  CHECK(total_duration(set_of({{0, 15}})) == 15.0);
  CHECK(total_duration(set_of({{0, 9}, {20, 21}})) == 10.0);
}

TEST_CASE("interval_set_iou examples") {
  const auto a = set_of({{0, 10}, {20, 25}});
  CHECK(interval_set_iou(a, a) == 1.0);
  CHECK(interval_set_iou(set_of({{0, 10}}), set_of({{20, 30}})) == 0.0);
  CHECK(interval_set_iou(set_of({{0, 10}}), set_of({{5, 15}})) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(interval_set_iou(IntervalSet{}, IntervalSet{}) == 0.0);
  CHECK(interval_set_iou(a, IntervalSet{}) == 0.0);
}

TEST_CASE("interval properties over random sets") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ra = random_spans(rng, 4);
    const auto rb = random_spans(rng, 4);
    const auto a = set_of(ra);
    const auto b = set_of(rb);

    CHECK(normalize_interval_set(std::vector<TimeInterval>(a.intervals().begin(), a.intervals().end())) == a);
    CHECK(interval_set_iou(a, b) == interval_set_iou(b, a));

    const double du = total_duration(interval_union(a, b));
    const double sum = total_duration(a) + total_duration(b);
    CHECK(du <= sum + 1e-9);
    if (intersection_duration(a, b) == 0.0) {
      CHECK(du == doctest::Approx(sum).epsilon(1e-12));
    } else {
      CHECK(du < sum);
    }

    std::vector<oracle::Span> oa;
    std::vector<oracle::Span> ob;
    for (auto [s, e] : ra) oa.push_back({s, e});
    for (auto [s, e] : rb) ob.push_back({s, e});
    CHECK(std::abs(interval_set_iou(a, b) - oracle::grid_iou(oa, ob)) <= 1e-3);
  }
}

TEST_CASE("cosine zero-vector convention and dimension check") {
  const EmbeddingVector a({1.0, 0.0});
  const EmbeddingVector z = EmbeddingVector::zeros(2);
  CHECK(cosine(a, z) == 0.0);
  CHECK(cosine(a, a) == 1.0);
  CHECK_THROWS_AS(cosine(a, EmbeddingVector({1.0})), DimensionError);
  CHECK_THROWS_AS(EmbeddingVector({}), DimensionError);
  CHECK_THROWS_AS(EmbeddingVector({1.0, std::nan("")}), InvariantError);
}

TEST_CASE("item validation") {
  QAItem item{"q1", "how?", {{1, "one", {}}, {2, "two", {}}}, std::nullopt};
  CHECK_NOTHROW(validate_item(item));
  CHECK(answer_text(item) == "one\ntwo");
  item.steps[1].index = 3;
  CHECK_THROWS_AS(validate_item(item), InvariantError);
  item.steps[1].index = 2;
  item.steps[1].text = "   ";
  CHECK_THROWS_AS(validate_item(item), InvariantError);
  CHECK_THROWS_AS(make_grounding("  ", TimeInterval(0, 1)), InvariantError);
  CHECK(make_grounding(" v1 ", TimeInterval(0, 1)).video_id == "v1");
}
