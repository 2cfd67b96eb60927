#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <random>

#include "avkit/errors.hpp"
#include "avkit/sfs.hpp"
#include "oracles.hpp"

using namespace avkit;

namespace {

AffinityMatrix random_q(std::mt19937_64& rng, std::size_t m) {
  std::vector<double> q(m * m);
  for (double& v : q) v = oracle::dyadic(rng) * 4.0;
  return AffinityMatrix(m, std::move(q), AffinityOptions{});
}

std::vector<EmbeddingVector> unit_frames(std::size_t m) {
  std::vector<EmbeddingVector> out;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> v(m, 0.0);
    v[i] = 1.0;
    out.emplace_back(std::move(v));
  }
  return out;
}

}  // namespace

TEST_CASE("separation penalty values") {
  // sine, gamma 20, d = 1/3: sin(pi/6) = 0.5 -> 20 * (1/1.5 - 1).
  CHECK(separation_penalty(PenaltyKind::kSine, 1.0 / 3.0, 20, 0) == doctest::Approx(-20.0 / 3.0).epsilon(1e-12));
  CHECK(separation_penalty(PenaltyKind::kCosine, 1.0, 10, 0) == doctest::Approx(-10.0).epsilon(1e-12));
  CHECK(separation_penalty(PenaltyKind::kExp, 0.5, 10, 5) == doctest::Approx(10.0 * (std::exp(2.5) - 1.0)));
  CHECK(separation_penalty(PenaltyKind::kNone, 0.7, 10, 5) == 0.0);
  for (auto kind : {PenaltyKind::kSine, PenaltyKind::kCosine, PenaltyKind::kExp}) {
    CHECK(separation_penalty(kind, 0.0, 10, 5) == 0.0);
  }
  // Literal integer distance hits sin = -1 at |a-b| = 3; the clamp keeps it finite.
  const double raw = separation_penalty(PenaltyKind::kSine, 3.0, 20, 0, DistanceMode::kRawIndex);
  CHECK(std::isfinite(raw));
  CHECK(raw > 1e6);
}

TEST_CASE("build_affinity") {
  const auto frames = unit_frames(3);
  AffinityOptions none;
  none.gamma = 0.0;
  const auto pure = build_affinity(frames, none);
  for (std::size_t a = 1; a <= 3; ++a) {
    for (std::size_t b = 1; b <= 3; ++b) CHECK(pure.at(a, b) == (a == b ? 1.0 : 0.0));
  }

  AffinityOptions sine;  // defaults: sine, gamma 20
  const auto q = build_affinity(frames, sine);
  CHECK(q.at(1, 2) == doctest::Approx(-6.666667).epsilon(1e-6));
  CHECK(q.at(2, 1) == q.at(1, 2));
  CHECK(q.at(2, 2) == 1.0);

  CHECK_THROWS_AS(build_affinity({EmbeddingVector({1.0})}, sine), InvalidArgument);
  CHECK_THROWS_AS(build_affinity({EmbeddingVector({1.0}), EmbeddingVector({1.0, 2.0})}, sine), DimensionError);
  AffinityOptions neg;
  neg.gamma = -1.0;
  CHECK_THROWS_AS(build_affinity(frames, neg), InvalidArgument);
}

TEST_CASE("build_affinity records zero-norm frames") {
  const auto q = build_affinity({EmbeddingVector({1.0, 0.0}), EmbeddingVector({0.0, 0.0}), EmbeddingVector({0.0, 1.0})});
  CHECK(q.zero_norm_frames == std::vector<std::size_t>{2});
  CHECK(std::isfinite(q.at(2, 2)));
}

TEST_CASE("select_frames edge cases") {
  std::mt19937_64 rng(1);
  const auto q = random_q(rng, 7);
  CHECK(select_frames(q, 7).selected == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7});
  const auto one = select_frames(q, 1);
  CHECK(one.selected == std::vector<std::size_t>{7});
  CHECK(one.cost == 0.0);
  CHECK_THROWS_AS(select_frames(q, 0), InvalidArgument);
  CHECK_THROWS_AS(select_frames(q, 8), InvalidArgument);
}

TEST_CASE("select_frames m=6 k=3 against brute force") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const auto q = random_q(rng, 6);
    const auto plan = select_frames(q, 3);
    CHECK(plan.selected.back() == 6);
    CHECK(plan.cost == chain_cost(q, plan.selected));
    CHECK(plan.cost == oracle::best_chain_cost(6, 3, [&](std::size_t a, std::size_t b) { return q.at(a, b); }));
  }
}

TEST_CASE("select_frames: ties resolve to the smallest predecessor") {
  // No penalty and identical frames: every chain costs (k-1).
  std::vector<EmbeddingVector> frames(8, EmbeddingVector({1.0, 2.0, 3.0}));
  AffinityOptions opt;
  opt.penalty = PenaltyKind::kNone;
  const auto plan = select_frames(build_affinity(frames, opt), 4);
  CHECK(plan.selected == std::vector<std::size_t>{1, 2, 3, 8});
}

TEST_CASE("select_frames is shift invariant") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 9;
    std::vector<double> base(m * m);
    for (double& v : base) v = oracle::dyadic(rng);
    std::vector<double> shifted = base;
    for (double& v : shifted) v += 3.0;
    const AffinityMatrix a(m, base, {});
    const AffinityMatrix b(m, shifted, {});
    CHECK(select_frames(a, 4).selected == select_frames(b, 4).selected);
  }
}

TEST_CASE("select_frames free endpoint") {
  // Chains ending early are cheaper when late links are expensive.
  const std::size_t m = 4;
  std::vector<double> q(m * m, 0.0);
  const auto set = [&](std::size_t a, std::size_t b, double v) {
    q[(a - 1) * m + (b - 1)] = v;
    q[(b - 1) * m + (a - 1)] = v;
  };
  set(1, 2, 0.0);
  set(1, 3, 0.5);
  set(2, 3, 0.5);
  set(1, 4, 5.0);
  set(2, 4, 5.0);
  set(3, 4, 5.0);
  const AffinityMatrix a(m, q, {});
  CHECK(select_frames(a, 2).selected.back() == 4);
  SelectOptions free;
  free.free_endpoint = true;
  const auto plan = select_frames(a, 2, free);
  CHECK(plan.selected == std::vector<std::size_t>{1, 2});
  CHECK(plan.cost == 0.0);
}

TEST_CASE("uniform_sample_indices") {
  CHECK(uniform_sample_indices(10, 10) == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(uniform_sample_indices(9, 3) == std::vector<std::size_t>{1, 5, 9});
  CHECK(uniform_sample_indices(5, 1) == std::vector<std::size_t>{3});
  CHECK(uniform_sample_indices(100, 2) == std::vector<std::size_t>{1, 100});
  const auto many = uniform_sample_indices(1000, 75);
  CHECK(many.size() == 75);
  CHECK(std::is_sorted(many.begin(), many.end()));
  CHECK(std::adjacent_find(many.begin(), many.end()) == many.end());
  CHECK_THROWS_AS(uniform_sample_indices(3, 4), InvalidArgument);
}

TEST_CASE("penalty kind names round-trip") {
  for (auto k : {PenaltyKind::kSine, PenaltyKind::kCosine, PenaltyKind::kExp, PenaltyKind::kNone}) {
    CHECK(parse_penalty_kind(to_string(k)) == k);
  }
  CHECK_THROWS_AS(parse_penalty_kind("tan"), InvalidArgument);
}
