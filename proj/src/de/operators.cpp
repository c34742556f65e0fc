#include <algorithm>
#include <cmath>
#include <numeric>

#include "qopt/de/differential_evolution.hpp"
#include "qopt/error.hpp"

namespace qopt::de {

namespace {

// Rejection draw from [0, np) avoiding everything in `taken[0..count)`.
std::size_t draw_excluding(std::size_t np, std::span<const std::size_t> taken, CounterRng& rng) {
  for (;;) {
    const auto candidate = static_cast<std::size_t>(rng.index(np));
    if (std::find(taken.begin(), taken.end(), candidate) == taken.end()) return candidate;
  }
}

std::size_t random_count(Strategy s) noexcept {
  switch (s) {
    case Strategy::rand1: return 3;
    case Strategy::rand2: return 5;
    case Strategy::best1: return 2;
    case Strategy::best2: return 4;
    case Strategy::current_to_rand1: return 2;
    case Strategy::current_to_best1: return 2;
    case Strategy::current_to_pbest1: return 2;
    case Strategy::rand_to_best1: return 3;
  }
  return 0;
}

void check_same_dimension(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) {
    throw ShapeError("crossover: target and donor dimensions differ (" + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()) + ")");
  }
}

}  // namespace

DonorIndices draw_donor_indices(Strategy strategy, const Population& pop, std::size_t target,
                                double p_best_fraction, CounterRng& rng) {
  const std::size_t np = pop.size();
  if (np < min_population(strategy)) {
    throw ConfigError("strategy " + std::string(to_string(strategy)) + " needs a population of at least " +
                      std::to_string(min_population(strategy)));
  }
  if (target >= np) throw IndexError("mutation target out of range");

  DonorIndices idx;
  std::array<std::size_t, 7> taken{};
  std::size_t n_taken = 0;
  taken[n_taken++] = target;

  if (strategy == Strategy::current_to_pbest1) {
    std::vector<std::size_t> order(np);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return pop.fitness[a] < pop.fitness[b]; });
    order.erase(std::find(order.begin(), order.end(), target));
    const auto top = std::clamp<std::size_t>(
        static_cast<std::size_t>(std::ceil(p_best_fraction * static_cast<double>(np))), 1, order.size());
    idx.pbest = order[static_cast<std::size_t>(rng.index(top))];
    taken[n_taken++] = idx.pbest;
  }
  if (strategy == Strategy::best1 || strategy == Strategy::best2 ||
      strategy == Strategy::current_to_best1 || strategy == Strategy::rand_to_best1) {
    idx.best = pop.best_index();
  }

  for (std::size_t k = 0; k < random_count(strategy); ++k) {
    idx.r[k] = draw_excluding(np, std::span(taken.data(), n_taken), rng);
    taken[n_taken++] = idx.r[k];
  }
  return idx;
}

std::vector<double> donor_vector(Strategy strategy, const Population& pop, std::size_t target,
                                 const DonorIndices& idx, double f) {
  const auto& m = pop.members;
  const std::size_t dim = pop.dimension();
  std::vector<double> v(dim);
  const auto& xi = m.at(target);
  const auto& r = idx.r;
  for (std::size_t j = 0; j < dim; ++j) {
    switch (strategy) {
      case Strategy::rand1:
        v[j] = m[r[0]][j] + f * (m[r[1]][j] - m[r[2]][j]);
        break;
      case Strategy::rand2:
        v[j] = m[r[0]][j] + f * (m[r[1]][j] - m[r[2]][j]) + f * (m[r[3]][j] - m[r[4]][j]);
        break;
      case Strategy::best1:
        v[j] = m[idx.best][j] + f * (m[r[0]][j] - m[r[1]][j]);
        break;
      case Strategy::best2:
        v[j] = m[idx.best][j] + f * (m[r[0]][j] - m[r[1]][j]) + f * (m[r[2]][j] - m[r[3]][j]);
        break;
      case Strategy::current_to_rand1:
        v[j] = xi[j] + f * (m[r[0]][j] - m[r[1]][j]);
        break;
      case Strategy::current_to_best1:
        v[j] = xi[j] + f * (m[idx.best][j] - xi[j]) + f * (m[r[0]][j] - m[r[1]][j]);
        break;
      case Strategy::current_to_pbest1:
        v[j] = xi[j] + f * (m[idx.pbest][j] - xi[j]) + f * (m[r[0]][j] - m[r[1]][j]);
        break;
      case Strategy::rand_to_best1:
        v[j] = m[r[0]][j] + f * (m[idx.best][j] - m[r[0]][j]) + f * (m[r[1]][j] - m[r[2]][j]);
        break;
    }
  }
  return v;
}

std::vector<double> mutate(Strategy strategy, const Population& pop, std::size_t target, double f,
                           double p_best_fraction, CounterRng& rng) {
  const DonorIndices idx = draw_donor_indices(strategy, pop, target, p_best_fraction, rng);
  return donor_vector(strategy, pop, target, idx, f);
}

std::vector<double> crossover_binomial(std::span<const double> target, std::span<const double> donor,
                                       double cr, CounterRng& rng) {
  check_same_dimension(target, donor);
  const std::size_t dim = target.size();
  const auto j_rand = static_cast<std::size_t>(rng.index(dim));
  std::vector<double> u(target.begin(), target.end());
  for (std::size_t j = 0; j < dim; ++j) {
    // Draw for every j so the stream position does not depend on j_rand.
    const double r = rng.uniform01();
    if (r <= cr || j == j_rand) u[j] = donor[j];
  }
  return u;
}

std::vector<double> crossover_exponential(std::span<const double> target,
                                          std::span<const double> donor, double cr, CounterRng& rng) {
  check_same_dimension(target, donor);
  const std::size_t dim = target.size();
  const auto start = static_cast<std::size_t>(rng.index(dim));
  std::size_t length = 1;
  while (length < dim && rng.uniform01() <= cr) ++length;
  std::vector<double> u(target.begin(), target.end());
  for (std::size_t k = 0; k < length; ++k) {
    const std::size_t j = (start + k) % dim;
    u[j] = donor[j];
  }
  return u;
}

std::vector<double> handle_bounds(std::span<const double> x, const Bounds& bounds,
                                  BoundaryHandling strategy, CounterRng& rng) {
  if (x.size() != bounds.dimension()) throw ShapeError("handle_bounds: dimension mismatch");
  std::vector<double> out(x.begin(), x.end());
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double lo = bounds.lower[j];
    const double hi = bounds.upper[j];
    double& v = out[j];
    if (v >= lo && v <= hi) continue;
    if (std::isnan(v)) v = hi;  // NaN compares false both ways; treat as overflow
    const double width = hi - lo;
    switch (strategy) {
      case BoundaryHandling::clamp:
        v = std::clamp(v, lo, hi);
        break;
      case BoundaryHandling::toroidal:
        if (width == 0.0) {
          throw BoundsError("toroidal wrap on zero-width range at component " + std::to_string(j));
        }
        if (v > hi) {
          v = lo + std::fmod(v - hi, width);
        } else {
          v = hi - std::fmod(lo - v, width);
        }
        // fmod of an infinite excursion is NaN; fall back to the violated edge.
        if (!(v >= lo && v <= hi)) v = std::clamp(std::isnan(v) ? lo : v, lo, hi);
        break;
      case BoundaryHandling::reinit:
        if (width == 0.0) {
          v = lo;
        } else {
          const double r = rng.uniform01();
          v = std::isfinite(width) ? r * width + lo : lo + r * hi - r * lo;
        }
        break;
    }
  }
  return out;
}

Population select(const Population& current, std::span<const std::vector<double>> trials,
                  std::span<const double> trial_fitness) {
  if (trials.size() != current.size() || trial_fitness.size() != current.size()) {
    throw ShapeError("select: trial population size differs from current population");
  }
  Population next;
  next.generation = current.generation + 1;
  next.members.reserve(current.size());
  next.fitness.reserve(current.size());
  for (std::size_t i = 0; i < current.size(); ++i) {
    if (trial_fitness[i] <= current.fitness[i]) {
      next.members.push_back(trials[i]);
      next.fitness.push_back(trial_fitness[i]);
    } else {
      next.members.push_back(current.members[i]);
      next.fitness.push_back(current.fitness[i]);
    }
  }
  return next;
}

}  // namespace qopt::de
