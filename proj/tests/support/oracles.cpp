#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>

namespace oracle {

namespace {

double occupied_below_sign(std::size_t mode, std::size_t bits) {
  int count = 0;
  for (std::size_t k = 0; k < mode; ++k) count += (bits >> k) & 1U;
  return count % 2 ? -1.0 : 1.0;
}

using Op = std::optional<std::pair<double, std::size_t>>;

// a†_p a†_q a_s a_r |bits>, rightmost operator first.
Op two_body(std::size_t p, std::size_t q, std::size_t r, std::size_t s, std::size_t bits) {
  double sign = 1.0;
  for (auto step : {std::pair{false, r}, std::pair{false, s}, std::pair{true, q}, std::pair{true, p}}) {
    const Op o = step.first ? create(step.second, bits) : annihilate(step.second, bits);
    if (!o) return std::nullopt;
    sign *= o->first;
    bits = o->second;
  }
  return std::pair{sign, bits};
}

Op one_body(std::size_t p, std::size_t q, std::size_t bits) {
  const Op a = annihilate(q, bits);
  if (!a) return std::nullopt;
  const Op c = create(p, a->second);
  if (!c) return std::nullopt;
  return std::pair{a->first * c->first, c->second};
}

Eigen::MatrixXd sector_basis(std::size_t n_orb, std::size_t n_elec) {
  const std::size_t dim = std::size_t{1} << (2 * n_orb);
  std::vector<std::size_t> idx;
  for (std::size_t b = 0; b < dim; ++b) {
    if (static_cast<std::size_t>(std::popcount(b)) == n_elec) idx.push_back(b);
  }
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) p(static_cast<Eigen::Index>(idx[k]), static_cast<Eigen::Index>(k)) = 1.0;
  return p;
}

}  // namespace

Op annihilate(std::size_t mode, std::size_t bits) {
  if (!((bits >> mode) & 1U)) return std::nullopt;
  return std::pair{occupied_below_sign(mode, bits), bits & ~(std::size_t{1} << mode)};
}

Op create(std::size_t mode, std::size_t bits) {
  if ((bits >> mode) & 1U) return std::nullopt;
  return std::pair{occupied_below_sign(mode, bits), bits | (std::size_t{1} << mode)};
}

Eigen::MatrixXd fock_hamiltonian(const qopt::chem::MolecularIntegrals& ints) {
  const std::size_t n = ints.n_orb;
  const std::size_t dim = std::size_t{1} << (2 * n);
  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)) *
                      ints.core_energy;
  for (std::size_t b = 0; b < dim; ++b) {
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t s = 0; s < 2; ++s) {
          const Op o = one_body(2 * p + s, 2 * q + s, b);
          if (o) h(static_cast<Eigen::Index>(o->second), static_cast<Eigen::Index>(b)) += ints.h(p, q) * o->first;
        }
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t s = 0; s < n; ++s) {
            const double g = ints.phys(p, q, r, s);
            if (g == 0.0) continue;
            for (std::size_t sig = 0; sig < 2; ++sig)
              for (std::size_t tau = 0; tau < 2; ++tau) {
                const Op o = two_body(2 * p + sig, 2 * q + tau, 2 * r + sig, 2 * s + tau, b);
                if (o) h(static_cast<Eigen::Index>(o->second), static_cast<Eigen::Index>(b)) += 0.5 * g * o->first;
              }
          }
  }
  return h;
}

double determinant_energy(const qopt::chem::MolecularIntegrals& ints, std::size_t bits) {
  const std::size_t n = ints.n_orb;
  double e = ints.core_energy;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t s = 0; s < 2; ++s) {
      const Op o = one_body(2 * p + s, 2 * p + s, bits);
      if (o) e += ints.h(p, p) * o->first;
    }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          for (std::size_t sig = 0; sig < 2; ++sig)
            for (std::size_t tau = 0; tau < 2; ++tau) {
              const Op o = two_body(2 * p + sig, 2 * q + tau, 2 * r + sig, 2 * s + tau, bits);
              if (o && o->second == bits) e += 0.5 * ints.phys(p, q, r, s) * o->first;
            }
  return e;
}

Eigen::MatrixXd fock_s_squared(std::size_t n_orb) {
  const std::size_t dim = std::size_t{1} << (2 * n_orb);
  const auto d = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXd splus = Eigen::MatrixXd::Zero(d, d);
  Eigen::MatrixXd sz = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t b = 0; b < dim; ++b) {
    double m = 0.0;
    for (std::size_t p = 0; p < n_orb; ++p) {
      m += 0.5 * (static_cast<double>((b >> (2 * p)) & 1U) - static_cast<double>((b >> (2 * p + 1)) & 1U));
      const Op o = one_body(2 * p, 2 * p + 1, b);
      if (o) splus(static_cast<Eigen::Index>(o->second), static_cast<Eigen::Index>(b)) += o->first;
    }
    sz(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) = m;
  }
  const Eigen::MatrixXd sminus = splus.transpose();
  return sminus * splus + sz * sz + sz;
}

std::vector<double> singlet_spectrum(const qopt::chem::MolecularIntegrals& ints) {
  const Eigen::MatrixXd p = sector_basis(ints.n_orb, ints.n_elec);
  const Eigen::MatrixXd h = p.transpose() * fock_hamiltonian(ints) * p;
  const Eigen::MatrixXd s2 = p.transpose() * fock_s_squared(ints.n_orb) * p;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> spin(s2);
  std::vector<Eigen::Index> kernel;
  for (Eigen::Index k = 0; k < spin.eigenvalues().size(); ++k) {
    if (std::abs(spin.eigenvalues()[k]) < 1e-8) kernel.push_back(k);
  }
  Eigen::MatrixXd q(h.rows(), static_cast<Eigen::Index>(kernel.size()));
  for (std::size_t k = 0; k < kernel.size(); ++k) q.col(static_cast<Eigen::Index>(k)) = spin.eigenvectors().col(kernel[k]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q.transpose() * h * q);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.begin(), out.end());
  return out;
}

double singlet_ensemble_minimum(const qopt::chem::MolecularIntegrals& ints) {
  const auto s = singlet_spectrum(ints);
  return 0.5 * (s.at(0) + s.at(1));
}

double fci_ground(const qopt::chem::MolecularIntegrals& ints) {
  const Eigen::MatrixXd p = sector_basis(ints.n_orb, ints.n_elec);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p.transpose() * fock_hamiltonian(ints) * p);
  return es.eigenvalues().minCoeff();
}

Eigen::MatrixXcd expm_antihermitian(const Eigen::MatrixXcd& a) {
  const std::complex<double> i(0.0, 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(i * a);  // iA is Hermitian
  // A = −i·V Λ V†  ⇒  exp(A) = V exp(−iΛ) V†
  Eigen::VectorXcd phases(es.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) phases[k] = std::exp(-i * es.eigenvalues()[k]);
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::MatrixXd expm_antisymmetric(const Eigen::MatrixXd& a) {
  return expm_antihermitian(a.cast<std::complex<double>>()).real();
}

std::string data_path(const std::string& relative) { return std::string(QOPT_DATA_DIR) + "/" + relative; }

}  // namespace oracle
