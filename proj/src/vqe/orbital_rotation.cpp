#include <cmath>

#include "qopt/error.hpp"
#include "qopt/vqe/orbital_rotation.hpp"

namespace qopt::vqe {

KappaMatrix KappaMatrix::zero(std::size_t n_orb) { return {n_orb, std::vector<double>(parameter_count(n_orb), 0.0)}; }

Eigen::MatrixXd KappaMatrix::full() const {
  if (params.size() != parameter_count(n_orb)) throw ShapeError("kappa: wrong parameter count");
  const auto n = static_cast<Eigen::Index>(n_orb);
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
  std::size_t idx = 0;
  for (Eigen::Index p = 1; p < n; ++p) {
    for (Eigen::Index q = 0; q < p; ++q) {
      k(p, q) = params[idx];
      k(q, p) = -params[idx];
      ++idx;
    }
  }
  return k;
}

Eigen::MatrixXd KappaMatrix::rotation() const { return expm(-full()); }

Eigen::MatrixXd expm(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw ShapeError("expm: matrix must be square");
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Eigen::MatrixXd s = a / std::ldexp(1.0, squarings);

  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(a.rows(), a.cols());
  Eigen::MatrixXd term = result;
  for (int k = 1; k <= 30; ++k) {
    term = term * s / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

chem::MolecularIntegrals rotate_integrals(const chem::MolecularIntegrals& ints, const Eigen::MatrixXd& u) {
  const std::size_t n = ints.n_orb;
  if (u.rows() != static_cast<Eigen::Index>(n) || u.cols() != static_cast<Eigen::Index>(n)) {
    throw ShapeError("rotate_integrals: rotation does not match the orbital count");
  }
  chem::MolecularIntegrals out = ints;
  out.h = u.transpose() * ints.h * u;

  // One index at a time: t_new[..i..] = Σ_a U(a, i) t[..a..].
  std::vector<double> cur = ints.g;
  std::vector<double> next(cur.size());
  const std::size_t stride[4] = {n * n * n, n * n, n, 1};
  for (int axis = 0; axis < 4; ++axis) {
    const std::size_t st = stride[axis];
    for (std::size_t flat = 0; flat < cur.size(); ++flat) {
      const std::size_t i = (flat / st) % n;
      const std::size_t base = flat - i * st;
      double v = 0.0;
      for (std::size_t a = 0; a < n; ++a) {
        v += u(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(i)) * cur[base + a * st];
      }
      next[flat] = v;
    }
    std::swap(cur, next);
  }
  out.g = std::move(cur);
  return out;
}

chem::MolecularIntegrals rotate_integrals(const chem::MolecularIntegrals& ints, const KappaMatrix& kappa) {
  if (kappa.n_orb != ints.n_orb) throw ShapeError("rotate_integrals: kappa dimension mismatch");
  return rotate_integrals(ints, kappa.rotation());
}

double sa_oo_energy(const KappaMatrix& kappa, const chem::MolecularIntegrals& base,
                    std::span<const qsim::RDMPair> rdms, const EnsembleSpec& weights) {
  weights.validate();
  if (rdms.size() != weights.n_states()) throw ShapeError("sa_oo_energy: one RDM pair per state required");
  for (const auto& r : rdms) {
    if (r.n_orb != base.n_orb) throw ShapeError("sa_oo_energy: RDM orbital count mismatch");
  }
  const chem::MolecularIntegrals rot = rotate_integrals(base, kappa);
  double e = 0.0;
  for (std::size_t k = 0; k < rdms.size(); ++k) e += weights.weights[k] * qsim::contract_energy(rot, rdms[k]);
  return e;
}

OrbitalOptResult minimize_orbitals(const chem::MolecularIntegrals& base,
                                   std::span<const qsim::RDMPair> rdms, const EnsembleSpec& weights,
                                   const OrbitalOptConfig& config) {
  const std::size_t n_params = KappaMatrix::parameter_count(base.n_orb);
  if (!config.pair_mask.empty() && config.pair_mask.size() != n_params) {
    throw ShapeError("minimize_orbitals: pair mask length must equal the kappa parameter count");
  }
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n_params; ++i) {
    if (config.pair_mask.empty() || config.pair_mask[i]) free.push_back(i);
  }
  auto expand = [&](std::span<const double> x) {
    KappaMatrix k = KappaMatrix::zero(base.n_orb);
    for (std::size_t j = 0; j < free.size(); ++j) k.params[free[j]] = x[j];
    return k;
  };

  OrbitalOptResult r;
  r.kappa = KappaMatrix::zero(base.n_orb);
  r.e_sa_initial = sa_oo_energy(r.kappa, base, rdms, weights);
  r.e_sa = r.e_sa_initial;
  r.rotated = base;
  if (free.empty()) return r;

  const Objective f = [&](std::span<const double> x) { return sa_oo_energy(expand(x), base, rdms, weights); };
  const auto res = local::bfgs_minimize(f, std::vector<double>(free.size(), 0.0), config.bfgs);
  r.evaluations = res.evaluations;
  r.stop_reason = res.stop_reason;
  r.gradient_norm = res.gradient_norm;
  if (res.stop_reason == local::LocalStopReason::line_search_failed) {
    r.warning = true;
    return r;
  }
  if (!(res.value <= r.e_sa_initial)) return r;
  r.kappa = expand(res.x);
  r.rotated = rotate_integrals(base, r.kappa);
  r.e_sa = res.value;
  return r;
}

}  // namespace qopt::vqe
