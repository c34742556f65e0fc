#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qopt/chem/jordan_wigner.hpp"
#include "qopt/chem/pauli.hpp"

namespace qopt::qsim {

using chem::cplx;

/// Dense n-qubit state. Amplitude index bit j is qubit j.
class StateVector {
 public:
  StateVector() = default;
  /// |0…0>.
  explicit StateVector(std::size_t n_qubits);
  StateVector(std::size_t n_qubits, std::vector<cplx> amplitudes);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  std::span<const cplx> amplitudes() const noexcept { return amps_; }
  std::span<cplx> amplitudes() noexcept { return amps_; }
  cplx operator[](std::size_t i) const noexcept { return amps_[i]; }

  double norm() const noexcept;
  cplx inner(const StateVector& other) const;  // <this|other>

 private:
  std::size_t n_qubits_ = 0;
  std::vector<cplx> amps_;
};

/// Occupation-number basis state with the listed modes set. Throws IndexError
/// on duplicate or out-of-range modes.
StateVector basis_state(std::size_t n_qubits, std::span<const std::size_t> occupied_modes);

/// state ← P·state, phase included.
void apply_pauli(StateVector& state, const chem::PauliString& p);

/// state ← exp(−iθ/2·P)·state.
void apply_pauli_rotation(StateVector& state, const chem::PauliString& p, double theta);

/// Σ c_k P_k |ψ>, not renormalized.
StateVector apply_sum(const StateVector& state, const chem::PauliSum& op);

/// Σ w_k <ψ|P_k|ψ>. Throws HermiticityError if the imaginary residue exceeds 1e-10.
double expectation(const StateVector& state, const chem::QubitHamiltonian& h);

}  // namespace qopt::qsim
