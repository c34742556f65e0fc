#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "qopt/error.hpp"
#include "qopt/local/local_opt.hpp"

using namespace qopt;
using namespace qopt::local;

namespace {

double sphere(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double rosenbrock(std::span<const double> x) {
  const double a = x[1] - x[0] * x[0];
  const double b = 1.0 - x[0];
  return 100.0 * a * a + b * b;
}

}  // namespace

TEST(FdGradient, Quadratic) {
  const std::vector<double> x{1.0, 2.0};
  const auto g = fd_gradient(sphere, x, 1e-6);
  EXPECT_NEAR(g[0], 2.0, 1e-6);
  EXPECT_NEAR(g[1], 4.0, 1e-6);
}

TEST(FdGradient, ConstantAndSine) {
  const std::vector<double> x{0.3, -0.7, 4.0};
  for (double v : fd_gradient([](std::span<const double>) { return 1.0; }, x, 1e-6)) EXPECT_EQ(v, 0.0);
  const std::vector<double> zero{0.0};
  EXPECT_NEAR(fd_gradient([](std::span<const double> y) { return std::sin(y[0]); }, zero, 1e-6)[0], 1.0, 1e-8);
}

TEST(FdGradient, SecondOrderAccuracy) {
  const double h = 1e-3;
  auto f = [](std::span<const double> y) { return 0.7 * y[0] * y[0] - 0.3 * y[0] * y[1] + 0.2 * y[1]; };
  const std::vector<double> x{0.4, -1.1};
  const auto g = fd_gradient(f, x, h);
  EXPECT_LT(std::abs(g[0] - (1.4 * 0.4 + 0.3 * 1.1)), 10 * h * h);
  EXPECT_LT(std::abs(g[1] - (-0.3 * 0.4 + 0.2)), 10 * h * h);
}

TEST(FdGradient, CountsAndErrors) {
  int calls = 0;
  auto f = [&calls](std::span<const double> y) {
    ++calls;
    return y[1] > 0.5 ? std::numeric_limits<double>::infinity() : y[0];
  };
  const std::vector<double> ok{0.0, 0.0, 0.0};
  fd_gradient(f, ok, 1e-6);
  EXPECT_EQ(calls, 6);
  const std::vector<double> bad{0.0, 0.5, 0.0};
  try {
    fd_gradient(f, bad, 1e-6);
    FAIL();
  } catch (const GradientError& e) {
    EXPECT_EQ(e.index(), 1u);
  }
}

TEST(GradientDescent, ExactStep) {
  LocalOptConfig c;
  c.gd_learning_rate = 0.5;
  const auto r = gradient_descent([](std::span<const double> y) { return y[0] * y[0]; }, {3.0}, c);
  EXPECT_NEAR(r.x[0], 0.0, 1e-9);
  EXPECT_EQ(r.iterations, 1u);
  EXPECT_EQ(r.stop_reason, LocalStopReason::grad_tol);
}

TEST(GradientDescent, ZeroRateStaysPut) {
  LocalOptConfig c;
  c.gd_learning_rate = 0.0;
  c.max_iters = 5;
  const auto r = gradient_descent(sphere, {1.0, -2.0}, c);
  EXPECT_EQ(r.x, (std::vector<double>{1.0, -2.0}));
  EXPECT_EQ(r.value, 5.0);
  EXPECT_EQ(r.stop_reason, LocalStopReason::max_iters);
}

TEST(GradientDescent, QuadraticBowl) {
  const auto r = gradient_descent(sphere, {1.0, 1.0}, LocalOptConfig{});
  EXPECT_LT(r.gradient_norm, 1e-6);
  EXPECT_LE(r.iterations, 200u);
}

TEST(GradientDescent, StopsInsteadOfIncreasing) {
  LocalOptConfig c;
  c.gd_learning_rate = 1.5;  // overshoots x² every step
  const auto r = gradient_descent([](std::span<const double> y) { return y[0] * y[0]; }, {1.0}, c);
  EXPECT_EQ(r.stop_reason, LocalStopReason::no_improvement);
  EXPECT_EQ(r.x[0], 1.0);
}

TEST(GradientDescent, TraceValuesNonIncreasing) {
  const auto r = gradient_descent(rosenbrock, {-1.2, 1.0}, LocalOptConfig{.gd_learning_rate = 1e-3});
  const auto& ev = r.trace.events();
  ASSERT_GE(ev.size(), 2u);
  for (std::size_t k = 1; k < ev.size(); ++k) {
    EXPECT_LE(ev[k].e_sa, ev[k - 1].e_sa);
    EXPECT_GE(ev[k].cumulative_evaluations, ev[k - 1].cumulative_evaluations);
  }
}

TEST(Bfgs, AlreadyAtMinimum) {
  const auto r = bfgs_minimize(sphere, {0.0, 0.0}, LocalOptConfig{});
  EXPECT_EQ(r.x, (std::vector<double>{0.0, 0.0}));
  EXPECT_EQ(r.iterations, 0u);
  EXPECT_LT(r.gradient_norm, 1e-6);
}

TEST(Bfgs, Rosenbrock) {
  const auto r = bfgs_minimize(rosenbrock, {-1.2, 1.0}, LocalOptConfig{});
  EXPECT_NEAR(r.x[0], 1.0, 1e-5);
  EXPECT_NEAR(r.x[1], 1.0, 1e-5);
  EXPECT_LE(r.iterations, 200u);
}

TEST(Bfgs, IllConditionedQuadratic) {
  auto f = [](std::span<const double> y) { return 0.5 * (y[0] * y[0] + 10.0 * y[1] * y[1]); };
  const auto r = bfgs_minimize(f, {3.0, -2.0}, LocalOptConfig{});
  // |g| < grad_tol and the smallest curvature is 1, so |x| < grad_tol
  EXPECT_LT(std::hypot(r.x[0], r.x[1]), 1e-6);
  EXPECT_EQ(r.stop_reason, LocalStopReason::grad_tol);
  EXPECT_LE(r.iterations, 50u);
}

TEST(Bfgs, InverseHessianStaysPositiveDefinite) {
  int checks = 0;
  auto observe = [&checks](const Eigen::MatrixXd& h) {
    ++checks;
    EXPECT_LT((h - h.transpose()).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_EQ(Eigen::LLT<Eigen::MatrixXd>(h).info(), Eigen::Success);
  };
  bfgs_minimize(rosenbrock, {-1.2, 1.0}, LocalOptConfig{}, {}, observe);
  EXPECT_GT(checks, 5);
}

TEST(Bfgs, EvaluationCountIsExact) {
  int calls = 0;
  auto f = [&calls](std::span<const double> y) {
    ++calls;
    return rosenbrock(y);
  };
  const auto r = bfgs_minimize(f, {-1.2, 1.0}, LocalOptConfig{});
  EXPECT_EQ(r.evaluations, static_cast<std::size_t>(calls));
  EXPECT_EQ(r.trace.events().back().cumulative_evaluations <= r.evaluations, true);
}

TEST(Bfgs, LineSearchFailureReturnsBestSoFar) {
  // Isolated minimum at 0: every trial point along the descent direction is worse.
  auto f = [](std::span<const double> y) { return y[0] == 0.0 ? 0.0 : 1.0 + std::max(y[0], 0.0); };
  LocalOptConfig c;
  const auto r = bfgs_minimize(f, {0.0}, c);
  EXPECT_EQ(r.stop_reason, LocalStopReason::line_search_failed);
  EXPECT_EQ(r.x[0], 0.0);
  EXPECT_EQ(r.value, 0.0);
}

TEST(LocalOptConfig, Validation) {
  EXPECT_THROW(bfgs_minimize(sphere, {1.0}, LocalOptConfig{.grad_step = 0.0}), ConfigError);
  EXPECT_THROW(bfgs_minimize(sphere, {1.0}, LocalOptConfig{.armijo_c = 1.0}), ConfigError);
  EXPECT_THROW(gradient_descent(sphere, {1.0}, LocalOptConfig{.backtrack_factor = 0.0}), ConfigError);
}
