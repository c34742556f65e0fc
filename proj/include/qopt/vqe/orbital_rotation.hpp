#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qopt/chem/integrals.hpp"
#include "qopt/local/local_opt.hpp"
#include "qopt/qsim/rdm.hpp"
#include "qopt/vqe/ansatz.hpp"

namespace qopt::vqe {

/// Antisymmetric generator κ stored by its strictly lower triangle:
/// params = (κ_10, κ_20, κ_21, κ_30, …).
struct KappaMatrix {
  std::size_t n_orb = 0;
  std::vector<double> params;

  static KappaMatrix zero(std::size_t n_orb);
  static std::size_t parameter_count(std::size_t n_orb) noexcept { return n_orb * (n_orb - (n_orb > 0)) / 2; }

  Eigen::MatrixXd full() const;
  /// U = exp(−κ).
  Eigen::MatrixXd rotation() const;
};

/// Matrix exponential by scaling and squaring with a Taylor core.
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);

/// h' = Uᵀ h U and g'_pqrs = Σ U_ap U_bq U_cr U_ds g_abcd. Core energy unchanged.
chem::MolecularIntegrals rotate_integrals(const chem::MolecularIntegrals& ints, const Eigen::MatrixXd& u);
chem::MolecularIntegrals rotate_integrals(const chem::MolecularIntegrals& ints, const KappaMatrix& kappa);

/// Σ_k w_k E_k(κ) with the RDMs held fixed.
double sa_oo_energy(const KappaMatrix& kappa, const chem::MolecularIntegrals& base,
                    std::span<const qsim::RDMPair> rdms, const EnsembleSpec& weights);

struct OrbitalOptConfig {
  local::LocalOptConfig bfgs;
  /// Optional, one flag per κ parameter; false pins that rotation to zero.
  std::vector<bool> pair_mask;
};

struct OrbitalOptResult {
  KappaMatrix kappa;
  chem::MolecularIntegrals rotated;
  double e_sa = 0.0;
  double e_sa_initial = 0.0;
  double gradient_norm = 0.0;
  std::size_t evaluations = 0;
  local::LocalStopReason stop_reason = local::LocalStopReason::grad_tol;
  /// Set when the line search failed and the rotation was discarded.
  bool warning = false;
};

/// BFGS over the free κ parameters. Never returns an energy above the κ = 0 value.
OrbitalOptResult minimize_orbitals(const chem::MolecularIntegrals& base,
                                   std::span<const qsim::RDMPair> rdms, const EnsembleSpec& weights,
                                   const OrbitalOptConfig& config = {});

}  // namespace qopt::vqe
