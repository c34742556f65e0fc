#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "qopt/chem/integrals.hpp"
#include "qopt/qsim/state_vector.hpp"

namespace qopt::qsim {

/// Spin-summed reduced density matrices.
/// one_rdm(p, q) = Σ_σ <a†_pσ a_qσ>;
/// two_rdm[((p·n + q)·n + r)·n + s] = Σ_στ <a†_pσ a†_qτ a_sτ a_rσ>.
struct RDMPair {
  std::size_t n_orb = 0;
  Eigen::MatrixXd one_rdm;
  std::vector<double> two_rdm;

  double two(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const noexcept {
    return two_rdm[((p * n_orb + q) * n_orb + r) * n_orb + s];
  }
};

/// Throws ShapeError unless the state has exactly 2·n_orb qubits.
RDMPair measure_rdms(const StateVector& state, std::size_t n_orb);

/// core + Σ h_pq D_pq + ½ Σ <pq|rs> d_pqrs.
double contract_energy(const chem::MolecularIntegrals& ints, const RDMPair& rdms);

}  // namespace qopt::qsim
