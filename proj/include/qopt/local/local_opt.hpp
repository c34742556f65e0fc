#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qopt/objective.hpp"
#include "qopt/trace.hpp"

namespace qopt::local {

struct LocalOptConfig {
  double grad_step = 1e-6;  // central-difference half-step h
  std::size_t max_iters = 200;
  double grad_tol = 1e-6;
  double gd_learning_rate = 0.1;
  double armijo_c = 1e-4;
  double backtrack_factor = 0.5;

  void validate() const;
};

enum class LocalStopReason { grad_tol, max_iters, no_improvement, line_search_failed };

std::string_view to_string(LocalStopReason r) noexcept;

struct LocalResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
  std::size_t iterations = 0;
  double gradient_norm = 0.0;  // at the returned point, when known
  LocalStopReason stop_reason = LocalStopReason::max_iters;
  /// One optimizer_step event per accepted step, plus the starting point.
  OptimizationTrace trace;
};

struct StepInfo {
  std::size_t iteration;
  std::span<const double> x;
  double value;
  std::size_t evaluations;
};

/// Invoked for the starting point (iteration 0) and after every accepted step.
using StepCallback = std::function<void(const StepInfo&)>;

/// Central-difference gradient; 2·D objective calls. Throws GradientError on a
/// non-finite stencil value.
std::vector<double> fd_gradient(const Objective& objective, std::span<const double> x, double h);

/// x_{k+1} = x_k - lr·g(x_k). Stops on grad_tol, max_iters, or when a step would
/// increase the objective (that step is not taken).
LocalResult gradient_descent(const Objective& objective, std::vector<double> x0,
                             const LocalOptConfig& config, const StepCallback& on_step = {});

/// Inverse-Hessian approximation after each accepted iteration.
using HessianObserver = std::function<void(const Eigen::MatrixXd& inverse_hessian)>;

/// BFGS with Armijo backtracking and finite-difference gradients. The
/// curvature update is skipped when s·y <= 1e-12.
LocalResult bfgs_minimize(const Objective& objective, std::vector<double> x0,
                          const LocalOptConfig& config, const StepCallback& on_step = {},
                          const HessianObserver& on_hessian = {});

}  // namespace qopt::local
