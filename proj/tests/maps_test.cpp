#include "ldyn/maps.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fd_oracle.hpp"

using namespace ldyn;

namespace {

MapSpec odd_with_beta(double beta, double c, double alpha) {
  MapSpec s;
  s.family = MapFamily::OddDynamics;
  s.beta_override = beta;
  s.c = c;
  s.alpha = alpha;
  return s;
}

MapSpec logistic(double r) {
  MapSpec s;
  s.family = MapFamily::Logistic;
  s.r = r;
  return s;
}

}  // namespace

TEST(MapSpec, DefaultsGiveBetaPi) {
  MapSpec s;
  EXPECT_DOUBLE_EQ(s.beta(), std::numbers::pi);
  EXPECT_DOUBLE_EQ(s.epsilon, std::numbers::phi);
  EXPECT_EQ(s.escape_bound, 1e100);
  EXPECT_NO_THROW(s.validate());
}

TEST(MapSpec, EvenCoefficient) {
  MapSpec s;
  s.family = MapFamily::EvenDynamics;
  EXPECT_DOUBLE_EQ(s.sqrt_coefficient(), std::log(std::numbers::phi));
}

TEST(MapSpec, ValidationRejectsBadParameters) {
  MapSpec s;
  s.alpha = -1.0;
  EXPECT_THROW(s.validate(), ArgumentError);
  s = logistic(4.5);
  EXPECT_THROW(s.validate(), ArgumentError);
  s = logistic(0.0);
  EXPECT_THROW(s.validate(), ArgumentError);
  s = MapSpec{};
  s.family = MapFamily::EvenDynamics;
  s.epsilon = 1.0;
  EXPECT_THROW(s.validate(), ArgumentError);
  s = MapSpec{};
  s.w = 0;
  EXPECT_THROW(s.validate(), ArgumentError);
}

TEST(EvalMap, Examples) {
  EXPECT_DOUBLE_EQ(eval_map(odd_with_beta(1.0, 0.0, 0.0), 4.0).value(), 0.5);
  EXPECT_DOUBLE_EQ(eval_map(odd_with_beta(0.0, 1.0, 1.0), std::numbers::e).value(), 1.0);

  MapSpec pole = odd_with_beta(1.0, 3.0, 2.0);
  EXPECT_EQ(eval_map(pole, 1.0), EvalOutcome::escaped(Escape::LogPole));
  EXPECT_EQ(eval_map(MapSpec{}, -2.0), EvalOutcome::escaped(Escape::DomainViolation));
  EXPECT_EQ(eval_map(MapSpec{}, 0.0), EvalOutcome::escaped(Escape::DomainViolation));
  EXPECT_EQ(eval_map(MapSpec{}, std::nan("")), EvalOutcome::escaped(Escape::DomainViolation));
}

TEST(EvalMap, EvenFamily) {
  MapSpec s;
  s.family = MapFamily::EvenDynamics;
  s.beta_override = std::numbers::pi;
  s.epsilon = std::numbers::e;
  // beta*log(eps)/pi = 1
  EXPECT_DOUBLE_EQ(eval_map(s, 4.0).value(), 0.5);
  EXPECT_EQ(eval_map(s, -1.0).escape(), Escape::DomainViolation);
}

TEST(EvalMap, SignedPowerBelowOne) {
  // log(1/e) = -1, P(-1) = -1 for any alpha
  MapSpec s = odd_with_beta(0.0, 2.0, 2.5);
  EXPECT_DOUBLE_EQ(eval_map(s, 1.0 / std::numbers::e).value(), -2.0);
  EXPECT_DOUBLE_EQ(signed_power(-0.5, 2.0), -4.0);
  EXPECT_DOUBLE_EQ(signed_power(0.5, 2.0), 4.0);
  EXPECT_EQ(signed_power(0.0, 3.0), 0.0);
}

TEST(EvalMap, SignedPowerIsOdd) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> y(-50.0, 50.0), a(0.0, 10.0);
  for (int i = 0; i < 10'000; ++i) {
    const double v = y(rng), alpha = a(rng);
    if (v == 0.0) continue;
    EXPECT_EQ(signed_power(-v, alpha), -signed_power(v, alpha));
  }
}

TEST(EvalMap, OverflowEscapes) {
  MapSpec s = odd_with_beta(1.0, 0.0, 0.0);
  s.escape_bound = 10.0;
  EXPECT_EQ(eval_map(s, 1e-4).escape(), Escape::Overflow);
  EXPECT_TRUE(eval_map(s, 1.0).has_value());
  // close to the log pole the c-term blows past the default bound
  MapSpec p = odd_with_beta(1.0, 1.0, 60.0);
  EXPECT_EQ(eval_map(p, 1.0 + 1e-5).escape(), Escape::Overflow);
}

TEST(EvalMap, ZeroAlphaHasNoPole) {
  MapSpec s = odd_with_beta(1.0, 1.0, 0.0);
  EXPECT_DOUBLE_EQ(eval_map(s, 1.0).value(), 1.0);
}

TEST(EvalMap, Deterministic) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const auto p = oracle::random_point(MapFamily::OddDynamics, rng);
    EXPECT_EQ(eval_map(p.spec, p.x), eval_map(p.spec, p.x));
  }
}

TEST(EvalMap, LogisticKeepsUnitInterval) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 10'000; ++i) {
    const MapSpec s = logistic(4.0 * (1.0 - unit(rng) * 0.999));
    const EvalOutcome o = eval_map(s, unit(rng));
    ASSERT_TRUE(o.has_value());
    EXPECT_GE(o.value(), 0.0);
    EXPECT_LE(o.value(), 1.0);
  }
  EXPECT_EQ(eval_map(logistic(4.0), 0.5).value(), 1.0);
}

TEST(EvalDerivative, Examples) {
  EXPECT_DOUBLE_EQ(eval_derivative(odd_with_beta(1.0, 0.0, 0.0), 4.0).value(), -0.0625);
  EXPECT_DOUBLE_EQ(eval_derivative(logistic(2.5), 0.6).value(), -0.5);

  const MapSpec s = odd_with_beta(0.0, 1.0, 1.0);
  const double d = eval_derivative(s, std::numbers::e).value();
  const double fd = *oracle::central_difference(s, std::numbers::e, 1e-6);
  EXPECT_NEAR(d, fd, 1e-6);
  EXPECT_NEAR(d, -0.36787944117144233, 1e-15);
}

TEST(EvalDerivative, SharesEscapeSemantics) {
  EXPECT_EQ(eval_derivative(odd_with_beta(1.0, 1.0, 2.0), 1.0).escape(), Escape::LogPole);
  EXPECT_EQ(eval_derivative(MapSpec{}, -1.0).escape(), Escape::DomainViolation);
}

class DerivativeVsFiniteDifference : public ::testing::TestWithParam<MapFamily> {};

TEST_P(DerivativeVsFiniteDifference, RelativeErrorBelow1e5) {
  std::mt19937_64 rng(1234 + static_cast<int>(GetParam()));
  int checked = 0;
  while (checked < 1000) {
    const auto p = oracle::random_point(GetParam(), rng);
    const EvalOutcome d = eval_derivative(p.spec, p.x);
    const auto fd = oracle::central_difference(p.spec, p.x, oracle::fd_step(p.spec, p.x));
    if (!d || !fd) continue;
    ++checked;
    const double rel = std::abs(d.value() - *fd) / std::max(std::abs(d.value()), 1e-300);
    EXPECT_LT(rel, 1e-5) << "x=" << p.x << " c=" << p.spec.c << " alpha=" << p.spec.alpha
                         << " r=" << p.spec.r << " d=" << d.value() << " fd=" << *fd;
  }
}

INSTANTIATE_TEST_SUITE_P(AllFamilies, DerivativeVsFiniteDifference,
                         ::testing::Values(MapFamily::OddDynamics, MapFamily::EvenDynamics, MapFamily::Logistic));
