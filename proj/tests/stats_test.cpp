#include "ldyn/stats.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "ldyn/roots.hpp"

using namespace ldyn;

TEST(Histogram, ConstantValuesFallInOneBin) {
  const std::vector<double> v{5, 5, 5, 5};
  const Histogram h = histogram(v, 3);
  EXPECT_EQ(h.total, 4);
  EXPECT_EQ(std::count(h.counts.begin(), h.counts.end(), 4), 1);
  EXPECT_EQ(std::count(h.counts.begin(), h.counts.end(), 0), 2);
}

TEST(Histogram, ExplicitRange) {
  const std::vector<double> v{0.5, 1.5, 2.5, 3.5};
  const Histogram h = histogram(v, 4, std::pair{0.0, 4.0});
  EXPECT_EQ(h.counts, (std::vector<long>{1, 1, 1, 1}));
  EXPECT_EQ(h.edges, (std::vector<double>{0, 1, 2, 3, 4}));
}

TEST(Histogram, MaximumLandsInLastBin) {
  const std::vector<double> v{0.0, 1.0, 2.0, 3.0};
  const Histogram h = histogram(v, 3);
  EXPECT_EQ(h.counts.back(), 1 + (h.edges[2] <= 2.0 ? 1 : 0));
  EXPECT_EQ(h.total, 4);
  EXPECT_GT(h.edges.back(), 3.0);
  EXPECT_LT(h.edges.back(), 3.0 + 1e-8);
}

TEST(Histogram, ValuesOutsideExplicitRangeAreDropped) {
  const std::vector<double> v{-1.0, 0.5, 4.0, 9.0};
  const Histogram h = histogram(v, 2, std::pair{0.0, 4.0});
  EXPECT_EQ(h.total, 2);
  EXPECT_EQ(h.counts, (std::vector<long>{1, 1}));
}

TEST(Histogram, Errors) {
  EXPECT_THROW(histogram(std::vector<double>{}, 3), ArgumentError);
  EXPECT_THROW(histogram(std::vector<double>{1.0}, 0), ArgumentError);
  EXPECT_THROW(histogram(std::vector<double>{1.0}, 2, std::pair{1.0, 1.0}), ArgumentError);
}

TEST(Histogram, PermutationInvariant) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> n(-601.0, 3.0);
  std::vector<double> v(500);
  for (auto& x : v) x = n(rng);
  const Histogram a = histogram(v, 17);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(v.begin(), v.end(), rng);
    const Histogram b = histogram(v, 17);
    EXPECT_EQ(a.counts, b.counts);
    EXPECT_EQ(a.edges, b.edges);
  }
}

TEST(Histogram, RootsOfStableLogisticShareOneBin) {
  MapSpec s;
  s.family = MapFamily::Logistic;
  s.r = 2.5;
  std::vector<double> guesses;
  for (int i = 4; i <= 9; ++i) guesses.push_back(0.1 * i);
  std::vector<double> roots;
  for (const auto& r : guess_sweep(s, guesses)) roots.push_back(*r.root);
  const Histogram h = histogram(roots, 10);
  EXPECT_EQ(std::count_if(h.counts.begin(), h.counts.end(), [](long c) { return c > 0; }), 1);
  const auto it = std::find_if(h.counts.begin(), h.counts.end(), [](long c) { return c > 0; });
  const auto k = static_cast<std::size_t>(it - h.counts.begin());
  EXPECT_LE(h.edges[k], 0.6 + 1e-12);
  EXPECT_GE(h.edges[k + 1], 0.6 - 1e-12);
}

TEST(Shannon, DeltaIsZero) {
  const Histogram h = histogram(std::vector<double>{2, 2, 2}, 5);
  const auto e = shannon_entropy(h);
  EXPECT_EQ(e.raw, 0.0);
  EXPECT_EQ(e.normalized, 0.0);
}

TEST(Shannon, UniformIsMaximal) {
  std::vector<double> v;
  for (int i = 0; i < 8; ++i) v.push_back(i + 0.5);
  const auto e = shannon_entropy(histogram(v, 8, std::pair{0.0, 8.0}));
  EXPECT_NEAR(e.raw, std::log(8.0), 1e-12);
  EXPECT_NEAR(e.normalized, 1.0, 1e-12);
}

TEST(Shannon, BoundedByLogBins) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> bins(2, 40);
  std::exponential_distribution<double> ex(1.0);
  for (int t = 0; t < 300; ++t) {
    std::vector<double> v(1 + t * 3);
    for (auto& x : v) x = ex(rng);
    const Histogram h = histogram(v, bins(rng));
    const auto e = shannon_entropy(h);
    EXPECT_LE(e.raw, std::log(static_cast<double>(h.bins())) + 1e-12);
    EXPECT_GE(e.normalized, 0.0);
    EXPECT_LE(e.normalized, 1.0 + 1e-12);
    const bool uniform = std::all_of(h.counts.begin(), h.counts.end(), [&](long c) { return c == h.counts[0]; });
    if (!uniform) { EXPECT_LT(e.raw, std::log(static_cast<double>(h.bins())) - 1e-12); }
  }
}

TEST(Shannon, SingleBinNormalizesToZero) {
  const auto e = shannon_entropy(histogram(std::vector<double>{1, 2, 3}, 1));
  EXPECT_EQ(e.raw, 0.0);
  EXPECT_EQ(e.normalized, 0.0);
}

TEST(Pesin, Examples) {
  EXPECT_EQ(pesin_entropy(std::vector<double>{-0.3, -0.39, -0.348}), 0.0);
  EXPECT_NEAR(pesin_entropy(std::vector<double>{0.21, -0.348, 0.1}), 0.31, 1e-12);
  EXPECT_THROW(pesin_entropy(std::vector<double>{}), ArgumentError);
}

TEST(Pesin, PermutationAndPaddingInvariant) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(600);
  for (auto& x : v) x = u(rng);
  const double base = pesin_entropy(v);
  for (int t = 0; t < 20; ++t) {
    std::shuffle(v.begin(), v.end(), rng);
    EXPECT_EQ(pesin_entropy(v), base);
    std::vector<double> padded = v;
    padded.push_back(-u(rng) * u(rng) - 1.0);
    padded.push_back(0.0);
    EXPECT_EQ(pesin_entropy(padded), base);
  }
}

namespace {

Histogram from_counts(std::vector<long> counts) {
  Histogram h;
  h.counts = std::move(counts);
  for (std::size_t i = 0; i <= h.counts.size(); ++i) h.edges.push_back(static_cast<double>(i));
  for (long c : h.counts) h.total += c;
  return h;
}

}  // namespace

TEST(Unimodality, Examples) {
  auto single = unimodality_check(from_counts({0, 0, 9, 0}), 1);
  EXPECT_TRUE(single.is_unimodal);
  EXPECT_DOUBLE_EQ(*single.mode_center, 2.5);

  auto split = unimodality_check(from_counts({5, 0, 0, 5}), 1);
  EXPECT_FALSE(split.is_unimodal);
  EXPECT_FALSE(split.mode_center);

  auto peak = unimodality_check(from_counts({1, 3, 7, 3, 1}), 1);
  EXPECT_TRUE(peak.is_unimodal);
  EXPECT_DOUBLE_EQ(*peak.mode_center, 2.5);
}

TEST(Unimodality, PlateauAndDips) {
  auto plateau = unimodality_check(from_counts({1, 4, 4, 2}), 1);
  EXPECT_TRUE(plateau.is_unimodal);
  EXPECT_DOUBLE_EQ(*plateau.mode_center, 2.0);
  EXPECT_FALSE(unimodality_check(from_counts({1, 4, 2, 4}), 1).is_unimodal);
  EXPECT_FALSE(unimodality_check(from_counts({2, 1, 5, 1}), 1).is_unimodal);
}

TEST(Unimodality, SmoothingRemovesSmallDip) {
  const Histogram h = from_counts({1, 2, 6, 5, 8, 4, 2, 1});
  EXPECT_FALSE(unimodality_check(h, 1).is_unimodal);
  EXPECT_TRUE(unimodality_check(h, 3).is_unimodal);
}

TEST(Unimodality, WindowMustBeOdd) {
  EXPECT_THROW(unimodality_check(from_counts({1, 2, 1}), 2), ArgumentError);
  EXPECT_THROW(unimodality_check(from_counts({1, 2, 1}), 0), ArgumentError);
}
