#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace qopt::chem {

/// Spatial-orbital integrals of a molecular Hamiltonian.
///
/// `g` is stored in physicist order, g[pqrs] = <pq|rs>, flattened with
/// index ((p·n + q)·n + r)·n + s. Chemist (ab|cd) equals <ac|bd>.
struct MolecularIntegrals {
  std::size_t n_orb = 0;
  std::size_t n_elec = 0;
  int ms2 = 0;
  double core_energy = 0.0;
  Eigen::MatrixXd h;
  std::vector<double> g;

  static MolecularIntegrals zeros(std::size_t n_orb, std::size_t n_elec);

  std::size_t index(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const noexcept {
    return ((p * n_orb + q) * n_orb + r) * n_orb + s;
  }
  double phys(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const noexcept {
    return g[index(p, q, r, s)];
  }
  double chem(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const noexcept {
    return g[index(a, c, b, d)];
  }
  /// Writes chemist (ab|cd) into all eight real-orbital symmetry slots.
  void set_chem(std::size_t a, std::size_t b, std::size_t c, std::size_t d, double value);

  /// Throws ShapeError on inconsistent sizes and Error when h or g break
  /// their symmetries beyond `tol`.
  void validate(double tol = 1e-12) const;
};

/// Closed-shell determinant energy with the lowest `n_occ` orbitals doubly
/// occupied, core energy included.
double closed_shell_energy(const MolecularIntegrals& ints, std::size_t n_occ);

/// Folds the first `n_frozen` doubly occupied orbitals into the core energy
/// and an effective one-electron operator over the remaining orbitals.
MolecularIntegrals freeze_core(const MolecularIntegrals& ints, int n_frozen);

}  // namespace qopt::chem
