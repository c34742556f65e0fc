#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qopt/chem/jordan_wigner.hpp"
#include "qopt/error.hpp"
#include "qopt/qsim/excitation.hpp"

namespace qopt::qsim {

using chem::annihilation;
using chem::creation;
using chem::spin_orbital;

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string Excitation::label() const {
  const char* k = kind == Kind::single                ? "single"
                  : kind == Kind::double_             ? "double"
                  : kind == Kind::spin_adapted_single ? "sa_single"
                                                      : "paired_double";
  return std::string(k) + "(" + join(from) + " -> " + join(to) + ")";
}

std::size_t Excitation::min_qubits() const noexcept {
  std::uint64_t used = 0;
  for (const auto& [p, a] : decomposition) used |= p.x | p.z;
  return used == 0 ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(used));
}

Excitation Excitation::from_operator(Kind kind, std::vector<std::size_t> from,
                                     std::vector<std::size_t> to, const chem::PauliSum& tau) {
  chem::PauliSum g = tau + chem::cplx(-1.0) * tau.adjoint();
  g.prune(1e-14);
  if (g.empty()) throw AlgebraError("excitation generator vanishes");
  Excitation e;
  e.kind = kind;
  e.from = std::move(from);
  e.to = std::move(to);
  for (const auto& [p, c] : g.terms()) {
    if (std::abs(c.real()) > 1e-12) throw AlgebraError("excitation generator is not anti-Hermitian");
    e.decomposition.emplace_back(p, c.imag());
  }
  for (std::size_t i = 0; i < e.decomposition.size(); ++i) {
    for (std::size_t j = i + 1; j < e.decomposition.size(); ++j) {
      if (!e.decomposition[i].first.commutes_with(e.decomposition[j].first)) {
        throw AlgebraError("excitation words do not commute: " + e.label());
      }
    }
  }
  return e;
}

Excitation Excitation::single(std::size_t p, std::size_t q) {
  if (p == q) throw IndexError("single excitation needs distinct modes");
  return from_operator(Kind::single, {p}, {q}, creation(q) * annihilation(p));
}

Excitation Excitation::double_(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
  if (p == q || r == s) throw IndexError("double excitation needs distinct modes per pair");
  return from_operator(Kind::double_, {p, q}, {r, s},
                       creation(r) * creation(s) * annihilation(q) * annihilation(p));
}

Excitation Excitation::spin_adapted_single(std::size_t i, std::size_t a) {
  if (i == a) throw IndexError("spin-adapted single needs distinct orbitals");
  chem::PauliSum tau;
  for (int s = 0; s < 2; ++s) {
    tau += creation(spin_orbital(a, s)) * annihilation(spin_orbital(i, s));
  }
  return from_operator(Kind::spin_adapted_single, {i}, {a}, tau);
}

Excitation Excitation::paired_double(std::size_t i, std::size_t a) {
  if (i == a) throw IndexError("paired double needs distinct orbitals");
  return from_operator(Kind::paired_double, {i}, {a},
                       creation(spin_orbital(a, 0)) * creation(spin_orbital(a, 1)) *
                           annihilation(spin_orbital(i, 1)) * annihilation(spin_orbital(i, 0)));
}

void apply_excitation(StateVector& state, const Excitation& excitation, double theta) {
  if (excitation.min_qubits() > state.n_qubits()) {
    throw ShapeError("excitation " + excitation.label() + " exceeds the state's qubits");
  }
  // exp(iθ a P) = exp(−i(−2θa)/2 · P)
  for (const auto& [p, a] : excitation.decomposition) {
    apply_pauli_rotation(state, p, -2.0 * theta * a);
  }
}

}  // namespace qopt::qsim
