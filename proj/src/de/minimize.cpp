#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "qopt/de/differential_evolution.hpp"
#include "qopt/error.hpp"

namespace qopt::de {

DEConfig DEConfig::defaults(std::size_t dimension) {
  DEConfig c;
  c.np = std::max<std::size_t>(15, 5 * dimension);
  c.termination.max_generations = 1000;
  return c;
}

void DEConfig::validate() const {
  if (np < 4) throw ConfigError("DE: population size must be at least 4");
  if (np < min_population(strategy)) {
    throw ConfigError("DE: strategy " + std::string(to_string(strategy)) +
                      " needs a population of at least " + std::to_string(min_population(strategy)));
  }
  if (!(f > 0.0) || !std::isfinite(f)) throw ConfigError("DE: scale factor F must be > 0");
  if (!(cr >= 0.0 && cr <= 1.0)) throw ConfigError("DE: crossover rate must lie in [0, 1]");
  if (!(p_best_fraction > 0.0 && p_best_fraction <= 1.0)) {
    throw ConfigError("DE: p_best_fraction must lie in (0, 1]");
  }
  if (workers == 0) throw ConfigError("DE: workers must be >= 1");
  termination.validate();
}

namespace {

double sanitize(double value) {
  return std::isfinite(value) ? value : std::numeric_limits<double>::infinity();
}

// Evaluates every vector in `xs`; fitness order matches input order for any
// worker count. The first objective exception is rethrown after all workers join.
std::vector<double> evaluate_all(const Objective& objective, const std::vector<std::vector<double>>& xs,
                                 std::size_t workers) {
  std::vector<double> out(xs.size());
  const std::size_t n_threads = std::min(workers, xs.size());
  if (n_threads <= 1) {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = sanitize(objective(xs[i]));
    return out;
  }
  std::vector<std::exception_ptr> errors(n_threads);
  {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < xs.size(); i += n_threads) out[i] = sanitize(objective(xs[i]));
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

GenerationRecord summarize(const Population& pop, std::size_t evaluations) {
  return {pop.generation, evaluations, pop.fitness[pop.best_index()], pop.fitness[pop.worst_index()]};
}

}  // namespace

DEResult de_minimize(const Objective& objective, const Bounds& bounds, const DEConfig& config,
                     const GenerationCallback& on_generation) {
  bounds.validate();
  config.validate();
  const std::size_t dim = bounds.dimension();
  if (!config.initial_member.empty() && config.initial_member.size() != dim) {
    throw ShapeError("DE: initial member dimension differs from bounds");
  }

  CounterRng rng(config.seed);
  DEResult result;
  Population pop = initialize_population(bounds, config.np, config.init, rng);
  if (!config.initial_member.empty()) {
    for (std::size_t j = 0; j < dim; ++j) {
      pop.members[0][j] = std::clamp(config.initial_member[j], bounds.lower[j], bounds.upper[j]);
    }
  }

  std::size_t evaluations = 0;
  auto record = [&] {
    const GenerationRecord rec = summarize(pop, evaluations);
    result.history.push_back(rec);
    result.trace.append({rec.evaluations, TraceScope::optimizer_step, 0, rec.best, {}});
    if (on_generation) on_generation(rec, pop.members[pop.best_index()]);
  };
  auto evaluate = [&](const std::vector<std::vector<double>>& xs) {
    try {
      auto f = evaluate_all(objective, xs, config.workers);
      evaluations += xs.size();
      return f;
    } catch (const std::exception& e) {
      throw RunAborted(std::string("DE: objective failed: ") + e.what(), result.trace);
    }
  };

  pop.fitness = evaluate(pop.members);
  record();

  std::optional<StopReason> stop = should_terminate(result.history, config.termination);
  std::vector<std::vector<double>> trials(config.np);
  while (!stop) {
    // All random draws for the generation happen here, serially, before any evaluation.
    for (std::size_t i = 0; i < config.np; ++i) {
      const auto donor = mutate(config.strategy, pop, i, config.f, config.p_best_fraction, rng);
      auto trial = config.crossover == Crossover::binomial
                       ? crossover_binomial(pop.members[i], donor, config.cr, rng)
                       : crossover_exponential(pop.members[i], donor, config.cr, rng);
      trials[i] = handle_bounds(trial, bounds, config.boundary, rng);
    }
    const auto trial_fitness = evaluate(trials);
    pop = select(pop, trials, trial_fitness);
    record();
    stop = should_terminate(result.history, config.termination);
  }

  const std::size_t best = pop.best_index();
  result.best_vector = pop.members[best];
  result.best_fitness = pop.fitness[best];
  result.evaluations = evaluations;
  result.generations = pop.generation;
  result.stop_reason = *stop;
  result.final_population = std::move(pop);
  return result;
}

}  // namespace qopt::de
