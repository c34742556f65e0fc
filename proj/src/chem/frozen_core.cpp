#include "qopt/chem/integrals.hpp"
#include "qopt/error.hpp"

namespace qopt::chem {

MolecularIntegrals freeze_core(const MolecularIntegrals& ints, int n_frozen) {
  if (n_frozen < 0) throw ConfigError("freeze_core: n_frozen must be nonnegative");
  const auto nf = static_cast<std::size_t>(n_frozen);
  if (2 * nf > ints.n_elec || nf > ints.n_orb) {
    throw ConfigError("freeze_core: cannot freeze more orbitals than paired electrons allow");
  }
  if (nf == 0) return ints;

  const std::size_t na = ints.n_orb - nf;
  MolecularIntegrals out = MolecularIntegrals::zeros(na, ints.n_elec - 2 * nf);
  out.ms2 = ints.ms2;

  double core = ints.core_energy;
  for (std::size_t i = 0; i < nf; ++i) {
    core += 2.0 * ints.h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
    for (std::size_t j = 0; j < nf; ++j) {
      core += 2.0 * ints.chem(i, i, j, j) - ints.chem(i, j, j, i);
    }
  }
  out.core_energy = core;

  for (std::size_t p = 0; p < na; ++p) {
    for (std::size_t q = 0; q < na; ++q) {
      const std::size_t fp = p + nf;
      const std::size_t fq = q + nf;
      double v = ints.h(static_cast<Eigen::Index>(fp), static_cast<Eigen::Index>(fq));
      for (std::size_t i = 0; i < nf; ++i) {
        v += 2.0 * ints.chem(fp, fq, i, i) - ints.chem(fp, i, i, fq);
      }
      out.h(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) = v;
    }
  }
  for (std::size_t p = 0; p < na; ++p)
    for (std::size_t q = 0; q < na; ++q)
      for (std::size_t r = 0; r < na; ++r)
        for (std::size_t s = 0; s < na; ++s) {
          out.g[out.index(p, q, r, s)] = ints.phys(p + nf, q + nf, r + nf, s + nf);
        }
  return out;
}

}  // namespace qopt::chem
