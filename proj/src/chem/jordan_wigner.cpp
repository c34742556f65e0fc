#include <cmath>
#include <vector>

#include "qopt/chem/jordan_wigner.hpp"
#include "qopt/error.hpp"

namespace qopt::chem {

Eigen::MatrixXcd QubitHamiltonian::to_matrix() const {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : terms) m += t.coefficient * chem::to_matrix(t.string, n_qubits);
  return m;
}

double QubitHamiltonian::constant() const noexcept {
  for (const auto& t : terms) {
    if (t.string.is_identity()) return t.coefficient;
  }
  return 0.0;
}

QubitHamiltonian to_qubit_hamiltonian(const PauliSum& sum, std::size_t n_qubits, double drop_tol) {
  QubitHamiltonian out;
  out.n_qubits = n_qubits;
  for (const auto& [p, c] : sum.terms()) {
    if (std::abs(c.imag()) > 1e-10) {
      throw AlgebraError("qubit Hamiltonian term " + to_string(p, n_qubits) +
                         " has imaginary coefficient");
    }
    if (std::abs(c.real()) < drop_tol) continue;
    out.terms.push_back({c.real(), p});
  }
  return out;
}

QubitHamiltonian jordan_wigner(const MolecularIntegrals& ints) {
  const std::size_t n = ints.n_orb;
  const std::size_t nq = 2 * n;
  if (nq > kMaxQubits) throw ShapeError("jordan_wigner: too many spin orbitals");

  std::vector<PauliSum> up(nq), down(nq);
  for (std::size_t j = 0; j < nq; ++j) {
    up[j] = creation(j);
    down[j] = annihilation(j);
  }
  // Cached pair products a†_i a†_j and a_k a_l.
  std::vector<PauliSum> cc(nq * nq), aa(nq * nq);
  for (std::size_t i = 0; i < nq; ++i) {
    for (std::size_t j = 0; j < nq; ++j) {
      if (i == j) continue;
      cc[i * nq + j] = up[i] * up[j];
      aa[i * nq + j] = down[i] * down[j];
    }
  }

  PauliSum h(ints.core_energy);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const double v = ints.h(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q));
      if (v == 0.0) continue;
      for (int s = 0; s < 2; ++s) {
        h += cplx(v) * (up[spin_orbital(p, s)] * down[spin_orbital(q, s)]);
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          const double v = ints.phys(p, q, r, s);
          if (v == 0.0) continue;
          for (int sig = 0; sig < 2; ++sig) {
            for (int tau = 0; tau < 2; ++tau) {
              const std::size_t ps = spin_orbital(p, sig), qt = spin_orbital(q, tau);
              const std::size_t rs = spin_orbital(r, sig), st = spin_orbital(s, tau);
              if (ps == qt || rs == st) continue;
              // a†_p a†_q a_s a_r
              h += cplx(0.5 * v) * (cc[ps * nq + qt] * aa[st * nq + rs]);
            }
          }
        }
  return to_qubit_hamiltonian(h, nq);
}

QubitHamiltonian number_operator(std::size_t n_qubits) {
  PauliSum s(0.5 * static_cast<double>(n_qubits));
  for (std::size_t j = 0; j < n_qubits; ++j) s.add(PauliString::single(j, 'Z'), -0.5);
  return to_qubit_hamiltonian(s, n_qubits);
}

}  // namespace qopt::chem
