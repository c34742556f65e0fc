#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qopt/chem/pauli.hpp"
#include "qopt/qsim/state_vector.hpp"

namespace qopt::qsim {

/// Anti-Hermitian generator G = τ − τ† written as G = i·Σ a_k P_k with
/// mutually commuting words P_k, so exp(θG) = Π_k exp(iθ a_k P_k) exactly.
struct Excitation {
  enum class Kind { single, double_, spin_adapted_single, paired_double };

  Kind kind = Kind::single;
  /// Spin-orbital modes for single/double; spatial orbitals for the spin-adapted kinds.
  std::vector<std::size_t> from;
  std::vector<std::size_t> to;
  std::vector<std::pair<chem::PauliString, double>> decomposition;

  std::string label() const;
  /// Highest qubit touched plus one.
  std::size_t min_qubits() const noexcept;

  /// τ = a†_q a_p.
  static Excitation single(std::size_t p, std::size_t q);
  /// τ = a†_r a†_s a_q a_p.
  static Excitation double_(std::size_t p, std::size_t q, std::size_t r, std::size_t s);
  /// τ = Σ_σ a†_{aσ} a_{iσ} over spatial orbitals i → a.
  static Excitation spin_adapted_single(std::size_t i, std::size_t a);
  /// τ = a†_{a↑} a†_{a↓} a_{i↓} a_{i↑}: both electrons of spatial orbital i move to a.
  static Excitation paired_double(std::size_t i, std::size_t a);

  /// Builds the decomposition from τ. Throws AlgebraError if G is not
  /// anti-Hermitian or its words do not commute.
  static Excitation from_operator(Kind kind, std::vector<std::size_t> from,
                                  std::vector<std::size_t> to, const chem::PauliSum& tau);
};

/// state ← exp(θ(τ − τ†))·state.
void apply_excitation(StateVector& state, const Excitation& excitation, double theta);

}  // namespace qopt::qsim
