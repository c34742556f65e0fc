#include <bit>
#include <cmath>
#include <string>

#include "qopt/error.hpp"
#include "qopt/qsim/state_vector.hpp"

namespace qopt::qsim {

namespace {

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

cplx word_phase(const chem::PauliString& p) noexcept { return kIPow[std::popcount(p.x & p.z) % 4]; }

double parity_sign(std::uint64_t z, std::uint64_t b) noexcept {
  return (std::popcount(z & b) & 1) ? -1.0 : 1.0;
}

void check_width(const StateVector& s, const chem::PauliString& p) {
  const std::uint64_t used = p.x | p.z;
  if (s.n_qubits() < 64 && (used >> s.n_qubits()) != 0) {
    throw ShapeError("Pauli string acts on qubits beyond the state's " +
                     std::to_string(s.n_qubits()));
  }
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits > 30) throw ShapeError("state vector: too many qubits");
  amps_.assign(std::size_t{1} << n_qubits, cplx{});
  amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits > 30 || amps_.size() != (std::size_t{1} << n_qubits)) {
    throw ShapeError("state vector: amplitude count must be 2^n_qubits");
  }
}

double StateVector::norm() const noexcept {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

cplx StateVector::inner(const StateVector& other) const {
  if (other.amps_.size() != amps_.size()) throw ShapeError("inner product: qubit counts differ");
  cplx s{};
  for (std::size_t i = 0; i < amps_.size(); ++i) s += std::conj(amps_[i]) * other.amps_[i];
  return s;
}

StateVector basis_state(std::size_t n_qubits, std::span<const std::size_t> occupied_modes) {
  StateVector s(n_qubits);
  std::size_t index = 0;
  for (const std::size_t m : occupied_modes) {
    if (m >= n_qubits) throw IndexError("basis_state: mode " + std::to_string(m) + " out of range");
    const std::size_t bit = std::size_t{1} << m;
    if (index & bit) throw IndexError("basis_state: duplicate mode " + std::to_string(m));
    index |= bit;
  }
  auto a = s.amplitudes();
  a[0] = 0.0;
  a[index] = 1.0;
  return s;
}

void apply_pauli(StateVector& state, const chem::PauliString& p) {
  check_width(state, p);
  auto a = state.amplitudes();
  const cplx ph = word_phase(p);
  if (p.x == 0) {
    for (std::size_t b = 0; b < a.size(); ++b) a[b] *= ph * parity_sign(p.z, b);
    return;
  }
  for (std::size_t b = 0; b < a.size(); ++b) {
    const std::size_t c = b ^ p.x;
    if (c < b) continue;
    const cplx ab = a[b];
    const cplx ac = a[c];
    a[c] = ph * parity_sign(p.z, b) * ab;
    a[b] = ph * parity_sign(p.z, c) * ac;
  }
}

void apply_pauli_rotation(StateVector& state, const chem::PauliString& p, double theta) {
  check_width(state, p);
  auto a = state.amplitudes();
  const double c = std::cos(0.5 * theta);
  const cplx mis = cplx(0.0, -std::sin(0.5 * theta)) * word_phase(p);
  if (p.x == 0) {
    for (std::size_t b = 0; b < a.size(); ++b) a[b] *= c + mis * parity_sign(p.z, b);
    return;
  }
  for (std::size_t b = 0; b < a.size(); ++b) {
    const std::size_t d = b ^ p.x;
    if (d < b) continue;
    const cplx ab = a[b];
    const cplx ad = a[d];
    a[b] = c * ab + mis * parity_sign(p.z, d) * ad;
    a[d] = c * ad + mis * parity_sign(p.z, b) * ab;
  }
}

StateVector apply_sum(const StateVector& state, const chem::PauliSum& op) {
  std::vector<cplx> acc(state.dimension(), cplx{});
  for (const auto& [p, c] : op.terms()) {
    StateVector tmp = state;
    apply_pauli(tmp, p);
    const auto t = tmp.amplitudes();
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * t[i];
  }
  return StateVector(state.n_qubits(), std::move(acc));
}

double expectation(const StateVector& state, const chem::QubitHamiltonian& h) {
  if (h.n_qubits != state.n_qubits()) throw ShapeError("expectation: qubit counts differ");
  const auto a = state.amplitudes();
  cplx total{};
  for (const auto& t : h.terms) {
    const auto& p = t.string;
    cplx s{};
    for (std::size_t b = 0; b < a.size(); ++b) {
      s += std::conj(a[b ^ p.x]) * (parity_sign(p.z, b) * a[b]);
    }
    total += t.coefficient * word_phase(p) * s;
  }
  if (std::abs(total.imag()) > 1e-10) {
    throw HermiticityError("expectation has imaginary part " + std::to_string(total.imag()));
  }
  return total.real();
}

}  // namespace qopt::qsim
