#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qopt/objective.hpp"
#include "qopt/rng.hpp"
#include "qopt/trace.hpp"

namespace qopt::de {

/// Box constraints. Missing bounds are represented by the extreme finite
/// doubles, see `unbounded`.
struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;

  static Bounds box(std::size_t dimension, double lo, double hi);
  static Bounds unbounded(std::size_t dimension);

  std::size_t dimension() const noexcept { return lower.size(); }
  bool contains(std::span<const double> x) const noexcept;
  /// Throws BoundsError unless lower[j] <= upper[j] for every j.
  void validate() const;
};

enum class Strategy {
  rand1,
  rand2,
  best1,
  best2,
  current_to_rand1,
  current_to_best1,
  current_to_pbest1,
  rand_to_best1,
};

enum class Crossover { binomial, exponential };
enum class BoundaryHandling { clamp, toroidal, reinit };

inline constexpr std::array kAllStrategies = {
    Strategy::rand1,          Strategy::rand2,           Strategy::best1,
    Strategy::best2,          Strategy::current_to_rand1, Strategy::current_to_best1,
    Strategy::current_to_pbest1, Strategy::rand_to_best1,
};

std::string_view to_string(Strategy s) noexcept;
std::string_view to_string(Crossover c) noexcept;
std::string_view to_string(BoundaryHandling b) noexcept;
std::optional<Strategy> parse_strategy(std::string_view name);
std::optional<Crossover> parse_crossover(std::string_view name);
std::optional<BoundaryHandling> parse_boundary(std::string_view name);

/// Smallest population that can draw the distinct indices `s` needs.
std::size_t min_population(Strategy s) noexcept;

struct AbsoluteTolerance {
  double eps;
  std::size_t n_tol;
};

struct RelativeTolerance {
  double eps;
  std::size_t n_tol;
  double delta;
};

struct RunningMeanTolerance {
  double eps;
  std::size_t n_mean;
  std::size_t n_tol;
};

struct BestWorstTolerance {
  double eps;
  std::size_t n_tol;
};

enum class StopReason { max_evals, max_generations, abs_tol, rel_tol, running_mean, best_worst };

std::string_view to_string(StopReason r) noexcept;

/// Composable stopping rules. When several are set, the first satisfied one
/// in declaration order wins.
struct TerminationCriteria {
  std::optional<std::size_t> max_evals;
  std::optional<std::size_t> max_generations;
  std::optional<AbsoluteTolerance> abs_tol;
  std::optional<RelativeTolerance> rel_tol;
  std::optional<RunningMeanTolerance> running_mean;
  std::optional<BestWorstTolerance> best_worst;

  void validate() const;
};

/// Per-generation summary used by the termination rules.
struct GenerationRecord {
  std::size_t generation = 0;
  std::size_t evaluations = 0;  // cumulative
  double best = 0.0;
  double worst = 0.0;
};

/// First satisfied criterion in fixed order, or nothing.
std::optional<StopReason> should_terminate(std::span<const GenerationRecord> history,
                                           const TerminationCriteria& criteria);

/// Whether the single criterion `which` holds on `history`. Unset criteria never hold.
bool criterion_satisfied(StopReason which, std::span<const GenerationRecord> history,
                         const TerminationCriteria& criteria);

struct Population {
  std::size_t generation = 0;
  std::vector<std::vector<double>> members;
  std::vector<double> fitness;  // NaN until evaluated

  std::size_t size() const noexcept { return members.size(); }
  std::size_t dimension() const noexcept { return members.empty() ? 0 : members.front().size(); }
  /// Lowest fitness, ties to the lower index.
  std::size_t best_index() const;
  std::size_t worst_index() const;
};

struct InitDistribution {
  enum class Kind { uniform, normal } kind = Kind::uniform;
  double mean = 0.0;
  double sigma = 1.0;

  static InitDistribution uniform() { return {}; }
  static InitDistribution normal(double mean, double sigma) { return {Kind::normal, mean, sigma}; }
};

/// Population of `np` members drawn inside `bounds`. Normal draws are clamped
/// into the box.
Population initialize_population(const Bounds& bounds, std::size_t np, InitDistribution distribution,
                                 CounterRng& rng);

/// Indices consumed by one donor. Unused slots are left at zero.
struct DonorIndices {
  std::array<std::size_t, 5> r{};
  std::size_t best = 0;
  std::size_t pbest = 0;
};

DonorIndices draw_donor_indices(Strategy strategy, const Population& pop, std::size_t target,
                                double p_best_fraction, CounterRng& rng);

/// Donor formula for `strategy` on already drawn indices.
std::vector<double> donor_vector(Strategy strategy, const Population& pop, std::size_t target,
                                 const DonorIndices& idx, double f);

/// Draws indices and forms the donor for `target`. `pop` is not modified.
std::vector<double> mutate(Strategy strategy, const Population& pop, std::size_t target, double f,
                           double p_best_fraction, CounterRng& rng);

std::vector<double> crossover_binomial(std::span<const double> target, std::span<const double> donor,
                                       double cr, CounterRng& rng);
std::vector<double> crossover_exponential(std::span<const double> target,
                                          std::span<const double> donor, double cr, CounterRng& rng);

std::vector<double> handle_bounds(std::span<const double> x, const Bounds& bounds,
                                  BoundaryHandling strategy, CounterRng& rng);

/// Greedy one-to-one selection; a trial replaces its target on ties.
Population select(const Population& current, std::span<const std::vector<double>> trials,
                  std::span<const double> trial_fitness);

struct DEConfig {
  std::size_t np = 15;
  double f = 0.5;
  double cr = 0.9;
  Strategy strategy = Strategy::rand1;
  Crossover crossover = Crossover::binomial;
  BoundaryHandling boundary = BoundaryHandling::clamp;
  double p_best_fraction = 0.11;
  std::uint64_t seed = 0;
  TerminationCriteria termination;
  InitDistribution init = InitDistribution::uniform();
  /// Optional vector injected as population member 0 after initialization.
  std::vector<double> initial_member;
  /// Threads used to evaluate one generation's trials. Results do not depend on it.
  std::size_t workers = 1;

  /// Np = max(15, 5D), F = 0.5, Cr = 0.9, rand/1/bin, 1000 generations.
  static DEConfig defaults(std::size_t dimension);
  void validate() const;
};

struct DEResult {
  std::vector<double> best_vector;
  double best_fitness = 0.0;
  std::size_t evaluations = 0;
  std::size_t generations = 0;
  StopReason stop_reason = StopReason::max_generations;
  std::vector<GenerationRecord> history;
  OptimizationTrace trace;
  Population final_population;
};

/// Called once per generation (including generation 0) with the population best.
using GenerationCallback =
    std::function<void(const GenerationRecord& record, std::span<const double> best_vector)>;

/// Minimizes `objective` over `bounds`. Non-finite objective values count as
/// +infinity. An objective exception aborts the run with RunAborted.
DEResult de_minimize(const Objective& objective, const Bounds& bounds, const DEConfig& config,
                     const GenerationCallback& on_generation = {});

}  // namespace qopt::de
