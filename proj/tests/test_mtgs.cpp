#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "avkit/errors.hpp"
#include "avkit/mtgs.hpp"
#include "oracles.hpp"

using namespace avkit;

namespace {

Grounding g(const std::string& vid, double a, double b) { return Grounding{vid, TimeInterval(a, b)}; }

GroundingMap map_of(std::vector<Grounding> gs) { return collect_groundings({Step{1, "x", std::move(gs)}}); }

}  // namespace

TEST_CASE("collect_groundings") {
  CHECK(collect_groundings({}).empty());
  CHECK(collect_groundings({Step{1, "a", {}}}).empty());
  const auto m = collect_groundings({Step{1, "a", {g("v1", 0, 10)}}, Step{2, "b", {g("v1", 5, 15)}}});
  REQUIRE(m.size() == 1);
  REQUIRE(m.at("v1").size() == 1);
  CHECK(m.at("v1").intervals()[0] == TimeInterval(0, 15));
  CHECK(map_of({g("v1", 0, 1), g("v2", 0, 1)}).size() == 2);
  CHECK(map_of({g(" v1 ", 0, 1), g("v1", 3, 4)}).size() == 1);
}

TEST_CASE("mtgs_per_query examples") {
  const auto gt = map_of({g("v1", 0, 10), g("v2", 0, 4)});
  CHECK(mtgs_per_query(gt, gt).score == 1.0);
  CHECK(mtgs_per_query(map_of({g("v1", 0, 10)}), map_of({g("v2", 0, 10)})).score == 0.0);

  const auto r = mtgs_per_query(gt, map_of({g("v1", 5, 15), g("v2", 0, 4)}));
  CHECK(r.per_video_iou.at("v1") == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(r.per_video_iou.at("v2") == 1.0);
  CHECK(r.score == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(r.matched_ids == std::set<std::string>{"v1", "v2"});

  const auto empty = mtgs_per_query({}, {});
  CHECK(empty.score == 0.0);
  CHECK(empty.gt_empty);
  CHECK(empty.pred_empty);
}

TEST_CASE("mtgs_avg") {
  MtgsReport a;
  a.score = 1.0;
  MtgsReport b;
  b.score = 0.0;
  MtgsReport c;
  c.score = 0.333333;
  MtgsReport d;
  d.score = 0.666667;
  CHECK(mtgs_avg({a}) == 1.0);
  CHECK(mtgs_avg({a, b}) == 0.5);
  CHECK(std::abs(mtgs_avg({c, d, a}) - 0.666667) < 5e-7);
  CHECK_THROWS_AS(mtgs_avg({}), InvalidArgument);
}

TEST_CASE("mtgs properties on random grounding sets") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> nvid(0, 3);
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<int> start(0, 300);
  std::uniform_int_distribution<int> len(1, 80);
  const auto random_groundings = [&] {
    std::vector<Grounding> out;
    for (int v = nvid(rng); v > 0; --v) {
      const std::string vid = "v" + std::to_string(v + (start(rng) % 2));
      for (int c = count(rng); c > 0; --c) {
        const int s = start(rng);
        out.push_back(g(vid, s / 10.0, (s + len(rng)) / 10.0));
      }
    }
    return out;
  };
  for (int trial = 0; trial < 200; ++trial) {
    auto gt_list = random_groundings();
    auto pred_list = random_groundings();
    const auto r = mtgs_per_query(map_of(gt_list), map_of(pred_list));
    CHECK(r.score >= 0.0);
    CHECK(r.score <= 1.0);

    // Permutation invariance.
    std::shuffle(gt_list.begin(), gt_list.end(), rng);
    std::shuffle(pred_list.begin(), pred_list.end(), rng);
    CHECK(mtgs_per_query(map_of(gt_list), map_of(pred_list)).score == r.score);

    // Grid oracle per matched video.
    for (const auto& [vid, iou] : r.per_video_iou) {
      std::vector<oracle::Span> a;
      std::vector<oracle::Span> b;
      for (const auto& x : gt_list) {
        if (x.video_id == vid) a.push_back({x.interval.start_s(), x.interval.end_s()});
      }
      for (const auto& x : pred_list) {
        if (x.video_id == vid) b.push_back({x.interval.start_s(), x.interval.end_s()});
      }
      CHECK(std::abs(iou - oracle::grid_iou(a, b)) <= 1e-3);
    }

    // Excision: a grounding for a video only the prediction cites changes nothing.
    auto extended = pred_list;
    extended.push_back(g("only-pred", 0, 1));
    const auto r2 = mtgs_per_query(map_of(gt_list), map_of(extended));
    CHECK(r2.per_video_iou == r.per_video_iou);
  }
}

TEST_CASE("mtgs is 1 only for identical matched sets") {
  const auto gt = map_of({g("v1", 0, 10)});
  CHECK(mtgs_per_query(gt, map_of({g("v1", 0, 10), g("v2", 0, 3)})).score == 1.0);
  CHECK(mtgs_per_query(gt, map_of({g("v1", 0, 9.5)})).score < 1.0);
}
