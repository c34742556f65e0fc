#include <cmath>

#include "qopt/local/local_opt.hpp"

namespace qopt::local {

namespace {

constexpr int kMaxBacktracks = 40;
constexpr double kCurvatureFloor = 1e-12;

Eigen::VectorXd to_eigen(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

LocalResult bfgs_minimize(const Objective& objective, std::vector<double> x0,
                          const LocalOptConfig& config, const StepCallback& on_step,
                          const HessianObserver& on_hessian) {
  config.validate();
  CountingObjective f(objective);
  const Objective counted = [&f](std::span<const double> x) { return f(x); };
  const auto n = static_cast<Eigen::Index>(x0.size());

  LocalResult r;
  r.x = std::move(x0);
  r.value = f(r.x);
  auto report = [&] {
    r.trace.append({f.count(), TraceScope::optimizer_step, 0, r.value, {}});
    if (on_step) on_step({r.iterations, r.x, r.value, f.count()});
  };
  report();

  Eigen::VectorXd x = to_eigen(r.x);
  Eigen::VectorXd g = to_eigen(fd_gradient(counted, r.x, config.grad_step));
  Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(n, n);
  bool first_update = true;

  for (;;) {
    r.gradient_norm = g.norm();
    if (r.gradient_norm < config.grad_tol) {
      r.stop_reason = LocalStopReason::grad_tol;
      break;
    }
    if (r.iterations >= config.max_iters) {
      r.stop_reason = LocalStopReason::max_iters;
      break;
    }

    Eigen::VectorXd p = -h_inv * g;
    double slope = g.dot(p);
    if (!(slope < 0.0)) {
      h_inv.setIdentity();
      p = -g;
      slope = g.dot(p);
    }

    double alpha = 1.0;
    bool accepted = false;
    double trial_value = 0.0;
    Eigen::VectorXd trial;
    for (int k = 0; k <= kMaxBacktracks; ++k) {
      trial = x + alpha * p;
      trial_value = f(to_std(trial));
      if (std::isfinite(trial_value) && trial_value <= r.value + config.armijo_c * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= config.backtrack_factor;
    }
    if (!accepted) {
      r.stop_reason = LocalStopReason::line_search_failed;
      break;
    }

    const Eigen::VectorXd s = trial - x;
    x = trial;
    r.x = to_std(x);
    r.value = trial_value;
    ++r.iterations;
    report();

    const Eigen::VectorXd g_new = to_eigen(fd_gradient(counted, r.x, config.grad_step));
    const Eigen::VectorXd y = g_new - g;
    g = g_new;
    const double sy = s.dot(y);
    if (sy > kCurvatureFloor) {
      if (first_update) {
        // Rescale the identity seed to the observed curvature before the first update.
        h_inv *= sy / y.squaredNorm();
        first_update = false;
      }
      const double rho = 1.0 / sy;
      const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
      const Eigen::MatrixXd left = eye - rho * s * y.transpose();
      h_inv = left * h_inv * left.transpose() + rho * s * s.transpose();
      h_inv = 0.5 * (h_inv + h_inv.transpose());
    }
    if (on_hessian) on_hessian(h_inv);
  }
  r.evaluations = f.count();
  return r;
}

}  // namespace qopt::local
