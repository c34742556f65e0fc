#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "qopt/chem/jordan_wigner.hpp"
#include "qopt/qsim/excitation.hpp"
#include "qopt/qsim/state_vector.hpp"

namespace qopt::vqe {

/// Ensemble weights w_k >= 0 with Σ w_k = 1.
struct EnsembleSpec {
  std::vector<double> weights{0.5, 0.5};

  std::size_t n_states() const noexcept { return weights.size(); }
  /// Throws ConfigError unless there are two nonnegative weights summing to 1 within 1e-12.
  void validate() const;
};

/// Ordered generator list; U(θ) applies excitations[0] first.
struct AnsatzSpec {
  std::vector<qsim::Excitation> excitations;

  std::size_t parameter_count() const noexcept { return excitations.size(); }
};

/// Spin-adapted singles followed by paired doubles, each over
/// (occupied, virtual) spatial orbitals in lexicographic order.
AnsatzSpec default_ansatz(std::size_t n_orb, std::size_t n_elec);

void apply_ansatz(qsim::StateVector& state, const AnsatzSpec& ansatz, std::span<const double> theta);

/// Hartree–Fock determinant and the normalized singlet HOMO→LUMO excitation.
/// Throws UnsupportedError for odd electron counts or no virtual orbital.
std::array<qsim::StateVector, 2> build_initial_states(std::size_t n_orb, std::size_t n_elec);

struct EnsembleEnergy {
  double e_sa = 0.0;
  std::vector<double> energies;  // by initial-state lineage
  std::vector<qsim::StateVector> states;
};

/// Applies U(θ) to every initial state and returns Σ w_k E_k.
EnsembleEnergy sa_energy(std::span<const double> theta, const chem::QubitHamiltonian& h,
                         const AnsatzSpec& ansatz, std::span<const qsim::StateVector> initial_states,
                         const EnsembleSpec& weights);

}  // namespace qopt::vqe
