#include <cmath>

#include "qopt/local/local_opt.hpp"

namespace qopt::local {

namespace {

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

LocalResult gradient_descent(const Objective& objective, std::vector<double> x0,
                             const LocalOptConfig& config, const StepCallback& on_step) {
  config.validate();
  CountingObjective f(objective);
  const Objective counted = [&f](std::span<const double> x) { return f(x); };

  LocalResult r;
  r.x = std::move(x0);
  r.value = f(r.x);
  auto report = [&] {
    r.trace.append({f.count(), TraceScope::optimizer_step, 0, r.value, {}});
    if (on_step) on_step({r.iterations, r.x, r.value, f.count()});
  };
  report();

  std::vector<double> candidate(r.x.size());
  for (;;) {
    const auto g = fd_gradient(counted, r.x, config.grad_step);
    r.gradient_norm = norm(g);
    if (r.gradient_norm < config.grad_tol) {
      r.stop_reason = LocalStopReason::grad_tol;
      break;
    }
    if (r.iterations >= config.max_iters) {
      r.stop_reason = LocalStopReason::max_iters;
      break;
    }
    for (std::size_t j = 0; j < r.x.size(); ++j) candidate[j] = r.x[j] - config.gd_learning_rate * g[j];
    const double value = f(candidate);
    if (!(value <= r.value)) {
      r.stop_reason = LocalStopReason::no_improvement;
      break;
    }
    r.x = candidate;
    r.value = value;
    ++r.iterations;
    report();
  }
  r.evaluations = f.count();
  return r;
}

}  // namespace qopt::local
