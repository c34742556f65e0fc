#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "qopt/de/differential_evolution.hpp"
#include "qopt/local/local_opt.hpp"
#include "qopt/qsim/rdm.hpp"
#include "qopt/trace.hpp"
#include "qopt/vqe/ansatz.hpp"

namespace qopt::vqe {

struct DifferentialEvolution {
  de::DEConfig config;
  /// Search box is [−bound, bound] per parameter.
  double bound = 3.141592653589793;
};

struct GradientDescent {
  local::LocalOptConfig config;
};

struct Bfgs {
  local::LocalOptConfig config;
};

using InnerOptimizer = std::variant<DifferentialEvolution, GradientDescent, Bfgs>;

/// "bfgs", "gd", or "de_<strategy>_<bin|exp>".
std::string method_label(const InnerOptimizer& optimizer);

struct SAVQEResult {
  std::vector<double> theta_star;
  double e_sa = 0.0;
  std::vector<double> state_energies;
  std::vector<qsim::StateVector> final_states;
  std::vector<qsim::RDMPair> rdms;
  /// optimizer_step events; e_states carry the per-state energies at each point.
  OptimizationTrace trace;
  /// sa_energy calls made by the optimizer.
  std::size_t evaluations = 0;
};

/// Minimizes the ensemble energy over θ starting from `theta0` (zeros when
/// empty). For DE, `theta0` is injected as population member 0. Failures
/// surface as RunAborted carrying the trace so far.
SAVQEResult run_sa_vqe(const chem::QubitHamiltonian& h, const AnsatzSpec& ansatz,
                       std::span<const qsim::StateVector> initial_states, const EnsembleSpec& weights,
                       const InnerOptimizer& optimizer, std::vector<double> theta0 = {},
                       int macro_index = 1);

}  // namespace qopt::vqe
