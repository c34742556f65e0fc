#include <algorithm>
#include <cmath>
#include <limits>

#include "qopt/de/differential_evolution.hpp"
#include "qopt/error.hpp"

namespace qopt::de {

Bounds Bounds::box(std::size_t dimension, double lo, double hi) {
  Bounds b{std::vector<double>(dimension, lo), std::vector<double>(dimension, hi)};
  b.validate();
  return b;
}

Bounds Bounds::unbounded(std::size_t dimension) {
  return {std::vector<double>(dimension, std::numeric_limits<double>::lowest()),
          std::vector<double>(dimension, std::numeric_limits<double>::max())};
}

bool Bounds::contains(std::span<const double> x) const noexcept {
  if (x.size() != lower.size()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!(x[j] >= lower[j] && x[j] <= upper[j])) return false;
  }
  return true;
}

void Bounds::validate() const {
  if (lower.size() != upper.size()) {
    throw BoundsError("bounds: lower and upper have different lengths");
  }
  if (lower.empty()) throw BoundsError("bounds: dimension must be positive");
  for (std::size_t j = 0; j < lower.size(); ++j) {
    if (!(lower[j] <= upper[j])) {
      throw BoundsError("bounds: lower > upper at component " + std::to_string(j));
    }
  }
}

std::size_t Population::best_index() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < fitness.size(); ++i) {
    if (fitness[i] < fitness[best]) best = i;
  }
  return best;
}

std::size_t Population::worst_index() const {
  std::size_t worst = 0;
  for (std::size_t i = 1; i < fitness.size(); ++i) {
    if (fitness[i] > fitness[worst]) worst = i;
  }
  return worst;
}

namespace {

double uniform_in(double lo, double hi, CounterRng& rng) {
  const double r = rng.uniform01();
  const double width = hi - lo;
  if (std::isfinite(width)) return r * width + lo;
  // Full-range default bounds overflow the width; interpolate instead.
  return lo + r * hi - r * lo;
}

}  // namespace

Population initialize_population(const Bounds& bounds, std::size_t np, InitDistribution distribution,
                                 CounterRng& rng) {
  bounds.validate();
  if (np < 4) throw ConfigError("population size must be at least 4");
  if (distribution.kind == InitDistribution::Kind::normal && !(distribution.sigma > 0.0)) {
    throw ConfigError("normal initialization needs sigma > 0");
  }
  const std::size_t dim = bounds.dimension();
  Population pop;
  pop.members.assign(np, std::vector<double>(dim));
  pop.fitness.assign(np, std::numeric_limits<double>::quiet_NaN());
  for (auto& member : pop.members) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (distribution.kind == InitDistribution::Kind::uniform) {
        member[j] = uniform_in(bounds.lower[j], bounds.upper[j], rng);
      } else {
        member[j] = std::clamp(rng.normal(distribution.mean, distribution.sigma), bounds.lower[j],
                               bounds.upper[j]);
      }
    }
  }
  return pop;
}

std::string_view to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::rand1: return "rand1";
    case Strategy::rand2: return "rand2";
    case Strategy::best1: return "best1";
    case Strategy::best2: return "best2";
    case Strategy::current_to_rand1: return "current_to_rand1";
    case Strategy::current_to_best1: return "current_to_best1";
    case Strategy::current_to_pbest1: return "current_to_pbest1";
    case Strategy::rand_to_best1: return "rand_to_best1";
  }
  return "?";
}

std::string_view to_string(Crossover c) noexcept {
  return c == Crossover::binomial ? "bin" : "exp";
}

std::string_view to_string(BoundaryHandling b) noexcept {
  switch (b) {
    case BoundaryHandling::clamp: return "clamp";
    case BoundaryHandling::toroidal: return "toroidal";
    case BoundaryHandling::reinit: return "reinit";
  }
  return "?";
}

std::string_view to_string(StopReason r) noexcept {
  switch (r) {
    case StopReason::max_evals: return "max_evals";
    case StopReason::max_generations: return "max_generations";
    case StopReason::abs_tol: return "abs_tol";
    case StopReason::rel_tol: return "rel_tol";
    case StopReason::running_mean: return "running_mean";
    case StopReason::best_worst: return "best_worst";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (Strategy s : kAllStrategies) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::optional<Crossover> parse_crossover(std::string_view name) {
  if (name == "bin" || name == "binomial") return Crossover::binomial;
  if (name == "exp" || name == "exponential") return Crossover::exponential;
  return std::nullopt;
}

std::optional<BoundaryHandling> parse_boundary(std::string_view name) {
  for (auto b : {BoundaryHandling::clamp, BoundaryHandling::toroidal, BoundaryHandling::reinit}) {
    if (to_string(b) == name) return b;
  }
  return std::nullopt;
}

std::size_t min_population(Strategy s) noexcept {
  switch (s) {
    case Strategy::rand1: return 4;
    case Strategy::rand2: return 6;
    case Strategy::best1: return 3;
    case Strategy::best2: return 5;
    case Strategy::current_to_rand1: return 3;
    case Strategy::current_to_best1: return 3;
    case Strategy::current_to_pbest1: return 4;
    case Strategy::rand_to_best1: return 4;
  }
  return 4;
}

}  // namespace qopt::de
