#include <cmath>
#include <string>

#include "qopt/chem/integrals.hpp"
#include "qopt/error.hpp"

namespace qopt::chem {

MolecularIntegrals MolecularIntegrals::zeros(std::size_t n_orb, std::size_t n_elec) {
  MolecularIntegrals m;
  m.n_orb = n_orb;
  m.n_elec = n_elec;
  m.h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n_orb), static_cast<Eigen::Index>(n_orb));
  m.g.assign(n_orb * n_orb * n_orb * n_orb, 0.0);
  return m;
}

void MolecularIntegrals::set_chem(std::size_t a, std::size_t b, std::size_t c, std::size_t d,
                                  double value) {
  // (ab|cd) = (ba|cd) = (ab|dc) = (ba|dc) = (cd|ab) = (dc|ab) = (cd|ba) = (dc|ba)
  const std::size_t slots[8][4] = {{a, b, c, d}, {b, a, c, d}, {a, b, d, c}, {b, a, d, c},
                                   {c, d, a, b}, {d, c, a, b}, {c, d, b, a}, {d, c, b, a}};
  for (const auto& s : slots) g[index(s[0], s[2], s[1], s[3])] = value;
}

void MolecularIntegrals::validate(double tol) const {
  const auto n = static_cast<Eigen::Index>(n_orb);
  if (h.rows() != n || h.cols() != n) throw ShapeError("integrals: h must be n_orb x n_orb");
  if (g.size() != n_orb * n_orb * n_orb * n_orb) {
    throw ShapeError("integrals: g must hold n_orb^4 entries");
  }
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index q = 0; q < p; ++q) {
      if (std::abs(h(p, q) - h(q, p)) > tol) throw Error("integrals: h is not symmetric");
    }
  }
  for (std::size_t a = 0; a < n_orb; ++a)
    for (std::size_t b = 0; b < n_orb; ++b)
      for (std::size_t c = 0; c < n_orb; ++c)
        for (std::size_t d = 0; d < n_orb; ++d) {
          const double v = chem(a, b, c, d);
          if (std::abs(v - chem(b, a, c, d)) > tol || std::abs(v - chem(a, b, d, c)) > tol ||
              std::abs(v - chem(c, d, a, b)) > tol) {
            throw Error("integrals: g lacks 8-fold symmetry at (" + std::to_string(a + 1) + " " +
                        std::to_string(b + 1) + "|" + std::to_string(c + 1) + " " +
                        std::to_string(d + 1) + ")");
          }
        }
}

double closed_shell_energy(const MolecularIntegrals& ints, std::size_t n_occ) {
  if (n_occ > ints.n_orb) throw ShapeError("closed_shell_energy: more occupied than orbitals");
  double e = ints.core_energy;
  for (std::size_t i = 0; i < n_occ; ++i) {
    e += 2.0 * ints.h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
    for (std::size_t j = 0; j < n_occ; ++j) {
      e += 2.0 * ints.chem(i, i, j, j) - ints.chem(i, j, j, i);
    }
  }
  return e;
}

}  // namespace qopt::chem
