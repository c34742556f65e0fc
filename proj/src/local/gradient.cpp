#include <cmath>

#include "qopt/error.hpp"
#include "qopt/local/local_opt.hpp"

namespace qopt::local {

void LocalOptConfig::validate() const {
  if (!(grad_step > 0.0)) throw ConfigError("local: grad_step must be > 0");
  if (!(grad_tol > 0.0)) throw ConfigError("local: grad_tol must be > 0");
  if (!(armijo_c > 0.0 && armijo_c < 1.0)) throw ConfigError("local: armijo_c must lie in (0, 1)");
  if (!(backtrack_factor > 0.0 && backtrack_factor < 1.0)) {
    throw ConfigError("local: backtrack_factor must lie in (0, 1)");
  }
  if (!(gd_learning_rate >= 0.0)) throw ConfigError("local: learning rate must be >= 0");
}

std::string_view to_string(LocalStopReason r) noexcept {
  switch (r) {
    case LocalStopReason::grad_tol: return "grad_tol";
    case LocalStopReason::max_iters: return "max_iters";
    case LocalStopReason::no_improvement: return "no_improvement";
    case LocalStopReason::line_search_failed: return "line_search_failed";
  }
  return "?";
}

std::vector<double> fd_gradient(const Objective& objective, std::span<const double> x, double h) {
  std::vector<double> probe(x.begin(), x.end());
  std::vector<double> g(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    probe[j] = x[j] + h;
    const double fp = objective(probe);
    probe[j] = x[j] - h;
    const double fm = objective(probe);
    probe[j] = x[j];
    if (!std::isfinite(fp) || !std::isfinite(fm)) {
      throw GradientError("fd_gradient: non-finite objective in stencil", j);
    }
    g[j] = (fp - fm) / (2.0 * h);
  }
  return g;
}

}  // namespace qopt::local
