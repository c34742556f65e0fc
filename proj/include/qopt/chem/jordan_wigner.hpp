#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "qopt/chem/integrals.hpp"
#include "qopt/chem/pauli.hpp"

namespace qopt::chem {

struct PauliTerm {
  double coefficient = 0.0;
  PauliString string;
};

/// Real-weighted Pauli sum. Strings are unique and sorted.
struct QubitHamiltonian {
  std::size_t n_qubits = 0;
  std::vector<PauliTerm> terms;

  Eigen::MatrixXcd to_matrix() const;
  /// Coefficient of the identity string, 0 when absent.
  double constant() const noexcept;
};

/// Spin orbital of spatial orbital p: 2p is spin up, 2p + 1 spin down.
constexpr std::size_t spin_orbital(std::size_t p, int spin) noexcept {
  return 2 * p + static_cast<std::size_t>(spin);
}

/// Converts a Hermitian PauliSum into a QubitHamiltonian. Drops |w| < drop_tol
/// and throws AlgebraError if any imaginary part exceeds 1e-10.
QubitHamiltonian to_qubit_hamiltonian(const PauliSum& sum, std::size_t n_qubits,
                                      double drop_tol = 1e-12);

/// H = Σ h_pq a†_pσ a_qσ + ½ Σ <pq|rs> a†_pσ a†_qτ a_sτ a_rσ + core, mapped
/// with the Jordan–Wigner transformation on 2·n_orb qubits.
QubitHamiltonian jordan_wigner(const MolecularIntegrals& ints);

/// Σ_j (I − Z_j)/2 on n qubits.
QubitHamiltonian number_operator(std::size_t n_qubits);

}  // namespace qopt::chem
