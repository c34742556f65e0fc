#include <cmath>
#include <string>

#include "qopt/error.hpp"
#include "qopt/vqe/ansatz.hpp"

namespace qopt::vqe {

using chem::annihilation;
using chem::creation;
using chem::spin_orbital;

void EnsembleSpec::validate() const {
  if (weights.size() != 2) throw ConfigError("ensemble: exactly two states are supported");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw ConfigError("ensemble: weights must be nonnegative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw ConfigError("ensemble: weights must sum to 1");
}

AnsatzSpec default_ansatz(std::size_t n_orb, std::size_t n_elec) {
  if (n_elec % 2 != 0) throw UnsupportedError("default ansatz: open-shell electron count");
  const std::size_t n_occ = n_elec / 2;
  if (n_occ > n_orb) throw ConfigError("default ansatz: more electrons than orbitals");
  AnsatzSpec a;
  for (std::size_t i = 0; i < n_occ; ++i)
    for (std::size_t v = n_occ; v < n_orb; ++v) a.excitations.push_back(qsim::Excitation::spin_adapted_single(i, v));
  for (std::size_t i = 0; i < n_occ; ++i)
    for (std::size_t v = n_occ; v < n_orb; ++v) a.excitations.push_back(qsim::Excitation::paired_double(i, v));
  return a;
}

void apply_ansatz(qsim::StateVector& state, const AnsatzSpec& ansatz, std::span<const double> theta) {
  if (theta.size() != ansatz.parameter_count()) {
    throw ShapeError("ansatz expects " + std::to_string(ansatz.parameter_count()) +
                     " parameters, got " + std::to_string(theta.size()));
  }
  for (std::size_t k = 0; k < theta.size(); ++k) {
    if (theta[k] != 0.0) qsim::apply_excitation(state, ansatz.excitations[k], theta[k]);
  }
}

std::array<qsim::StateVector, 2> build_initial_states(std::size_t n_orb, std::size_t n_elec) {
  if (n_elec % 2 != 0) throw UnsupportedError("initial states: open-shell electron count");
  if (n_elec == 0 || n_elec / 2 >= n_orb) {
    throw UnsupportedError("initial states: need an occupied and a virtual orbital");
  }
  std::vector<std::size_t> occ(n_elec);
  for (std::size_t m = 0; m < n_elec; ++m) occ[m] = m;
  qsim::StateVector hf = qsim::basis_state(2 * n_orb, occ);

  const std::size_t homo = n_elec / 2 - 1;
  const std::size_t lumo = homo + 1;
  chem::PauliSum e;
  for (int s = 0; s < 2; ++s) e += creation(spin_orbital(lumo, s)) * annihilation(spin_orbital(homo, s));
  qsim::StateVector b = qsim::apply_sum(hf, e);
  const double nb = b.norm();
  for (auto& amp : b.amplitudes()) amp /= nb;
  return {std::move(hf), std::move(b)};
}

EnsembleEnergy sa_energy(std::span<const double> theta, const chem::QubitHamiltonian& h,
                         const AnsatzSpec& ansatz, std::span<const qsim::StateVector> initial_states,
                         const EnsembleSpec& weights) {
  if (initial_states.size() != weights.n_states()) {
    throw ShapeError("sa_energy: state count does not match weight count");
  }
  EnsembleEnergy out;
  for (std::size_t k = 0; k < initial_states.size(); ++k) {
    if (initial_states[k].n_qubits() != h.n_qubits) throw ShapeError("sa_energy: qubit counts differ");
    qsim::StateVector s = initial_states[k];
    apply_ansatz(s, ansatz, theta);
    const double e = qsim::expectation(s, h);
    out.energies.push_back(e);
    out.e_sa += weights.weights[k] * e;
    out.states.push_back(std::move(s));
  }
  return out;
}

}  // namespace qopt::vqe
