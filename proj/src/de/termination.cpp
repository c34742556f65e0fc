#include <cmath>

#include "qopt/de/differential_evolution.hpp"
#include "qopt/error.hpp"

namespace qopt::de {

void TerminationCriteria::validate() const {
  if (!max_evals && !max_generations && !abs_tol && !rel_tol && !running_mean && !best_worst) {
    throw ConfigError("termination: at least one criterion must be set");
  }
  auto positive = [](double eps, const char* name) {
    if (!(eps > 0.0)) throw ConfigError(std::string("termination: ") + name + " tolerance must be > 0");
  };
  auto window = [](std::size_t n, const char* name) {
    if (n < 1) throw ConfigError(std::string("termination: ") + name + " window must be >= 1");
  };
  if (abs_tol) {
    positive(abs_tol->eps, "abs_tol");
    window(abs_tol->n_tol, "abs_tol");
  }
  if (rel_tol) {
    positive(rel_tol->eps, "rel_tol");
    positive(rel_tol->delta, "rel_tol delta");
    window(rel_tol->n_tol, "rel_tol");
  }
  if (running_mean) {
    positive(running_mean->eps, "running_mean");
    window(running_mean->n_mean, "running_mean n_mean");
    window(running_mean->n_tol, "running_mean n_tol");
  }
  if (best_worst) {
    positive(best_worst->eps, "best_worst");
    window(best_worst->n_tol, "best_worst");
  }
}

namespace {

// True when `holds(k)` is true for the last n generations k = G, G-1, ..., G-n+1,
// where every k must satisfy k >= first_valid.
template <typename Pred>
bool holds_for_last(std::span<const GenerationRecord> h, std::size_t n, std::size_t first_valid,
                    Pred holds) {
  if (h.size() < first_valid + n) return false;
  for (std::size_t k = h.size() - n; k < h.size(); ++k) {
    if (!holds(k)) return false;
  }
  return true;
}

double improvement(std::span<const GenerationRecord> h, std::size_t k) {
  return std::abs(h[k].best - h[k - 1].best);
}

}  // namespace

bool criterion_satisfied(StopReason which, std::span<const GenerationRecord> h,
                         const TerminationCriteria& c) {
  if (h.empty()) return false;
  const GenerationRecord& last = h.back();
  switch (which) {
    case StopReason::max_evals:
      return c.max_evals && last.evaluations >= *c.max_evals;
    case StopReason::max_generations:
      return c.max_generations && last.generation >= *c.max_generations;
    case StopReason::abs_tol:
      if (!c.abs_tol) return false;
      return holds_for_last(h, c.abs_tol->n_tol, 1,
                            [&](std::size_t k) { return improvement(h, k) < c.abs_tol->eps; });
    case StopReason::rel_tol:
      if (!c.rel_tol) return false;
      return holds_for_last(h, c.rel_tol->n_tol, 1, [&](std::size_t k) {
        return improvement(h, k) / (std::abs(h[k].best) + c.rel_tol->delta) < c.rel_tol->eps;
      });
    case StopReason::running_mean: {
      if (!c.running_mean) return false;
      const auto& rm = *c.running_mean;
      return holds_for_last(h, rm.n_tol, rm.n_mean, [&](std::size_t k) {
        double sum = 0.0;
        for (std::size_t m = 0; m < rm.n_mean; ++m) sum += improvement(h, k - m);
        return sum / static_cast<double>(rm.n_mean) < rm.eps;
      });
    }
    case StopReason::best_worst:
      if (!c.best_worst) return false;
      return holds_for_last(h, c.best_worst->n_tol, 0, [&](std::size_t k) {
        return std::abs(h[k].worst - h[k].best) < c.best_worst->eps;
      });
  }
  return false;
}

std::optional<StopReason> should_terminate(std::span<const GenerationRecord> history,
                                           const TerminationCriteria& criteria) {
  for (StopReason r : {StopReason::max_evals, StopReason::max_generations, StopReason::abs_tol,
                       StopReason::rel_tol, StopReason::running_mean, StopReason::best_worst}) {
    if (criterion_satisfied(r, history, criteria)) return r;
  }
  return std::nullopt;
}

}  // namespace qopt::de
