#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qopt/chem/integrals.hpp"
#include "qopt/trace.hpp"
#include "qopt/vqe/orbital_rotation.hpp"
#include "qopt/vqe/sa_vqe.hpp"

namespace qopt::vqe {

struct MacroConfig {
  double macro_tol = 1e-4;
  std::size_t max_macro_iters = 20;
  /// Start each SA-VQE stage from the previous θ*. When false every stage
  /// restarts from θ = 0.
  bool warm_start = true;
  /// When false the orbital step is skipped (κ = 0).
  bool optimize_orbitals = true;

  void validate() const;
};

struct MacroRecord {
  int macro_index = 0;
  double e_sa_vqe = 0.0;  // after the SA-VQE stage
  double e_sa_oo = 0.0;   // after the orbital stage
  std::vector<double> e_states;  // per-state energies after the orbital stage
  std::size_t cumulative_evaluations = 0;
  double kappa_gradient_norm = 0.0;
  bool oo_warning = false;
  std::string error;  // nonempty when the SA-VQE stage failed
};

enum class MacroStatus { converged, max_iterations, aborted };

std::string_view to_string(MacroStatus s) noexcept;

struct SAOOVQEResult {
  MacroStatus status = MacroStatus::max_iterations;
  double e_sa = 0.0;
  std::vector<double> state_energies;
  std::vector<double> theta;
  chem::MolecularIntegrals integrals;  // in the final orbital basis
  std::vector<MacroRecord> macro_trace;
  OptimizationTrace trace;
  std::size_t evaluations = 0;
};

/// Alternates SA-VQE over θ and state-averaged orbital optimization over κ
/// until |ΔE_SA| < macro_tol between macro iterations. Aborts after two
/// consecutive SA-VQE failures.
SAOOVQEResult run_sa_oo_vqe(const chem::MolecularIntegrals& integrals, const AnsatzSpec& ansatz,
                            const EnsembleSpec& weights, const InnerOptimizer& inner,
                            const OrbitalOptConfig& oo_config = {}, const MacroConfig& macro = {});

}  // namespace qopt::vqe
