#include <bit>

#include "qopt/error.hpp"
#include "qopt/qsim/rdm.hpp"

namespace qopt::qsim {

namespace {

using Amps = std::vector<cplx>;

/// a_mode applied to a raw amplitude vector; JW sign counts occupied modes below.
Amps annihilate(std::span<const cplx> in, std::size_t mode) {
  Amps out(in.size(), cplx{});
  const std::size_t bit = std::size_t{1} << mode;
  for (std::size_t b = 0; b < in.size(); ++b) {
    if (!(b & bit) || in[b] == cplx{}) continue;
    const double sign = (std::popcount(b & (bit - 1)) & 1) ? -1.0 : 1.0;
    out[b ^ bit] = sign * in[b];
  }
  return out;
}

cplx dot(const Amps& a, const Amps& b) {
  cplx s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace

RDMPair measure_rdms(const StateVector& state, std::size_t n_orb) {
  const std::size_t nq = 2 * n_orb;
  if (state.n_qubits() != nq) throw ShapeError("measure_rdms: state must have 2*n_orb qubits");
  const auto n = static_cast<Eigen::Index>(n_orb);

  std::vector<Amps> one(nq);
  for (std::size_t m = 0; m < nq; ++m) one[m] = annihilate(state.amplitudes(), m);
  // two[x·nq + y] = a_y a_x |ψ>
  std::vector<Amps> two(nq * nq);
  for (std::size_t x = 0; x < nq; ++x)
    for (std::size_t y = 0; y < nq; ++y)
      if (x != y) two[x * nq + y] = annihilate(one[x], y);

  RDMPair r;
  r.n_orb = n_orb;
  r.one_rdm = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t p = 0; p < n_orb; ++p)
    for (std::size_t q = 0; q < n_orb; ++q) {
      double v = 0.0;
      for (int s = 0; s < 2; ++s) v += dot(one[2 * p + s], one[2 * q + s]).real();
      r.one_rdm(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) = v;
    }

  // <a†_pσ a†_qτ a_sτ a_rσ> = <a_qτ a_pσ ψ | a_sτ a_rσ ψ>
  r.two_rdm.assign(n_orb * n_orb * n_orb * n_orb, 0.0);
  for (std::size_t p = 0; p < n_orb; ++p)
    for (std::size_t q = 0; q < n_orb; ++q)
      for (std::size_t rr = 0; rr < n_orb; ++rr)
        for (std::size_t s = 0; s < n_orb; ++s) {
          double v = 0.0;
          for (int sig = 0; sig < 2; ++sig)
            for (int tau = 0; tau < 2; ++tau) {
              const std::size_t ps = 2 * p + sig, qt = 2 * q + tau;
              const std::size_t rs = 2 * rr + sig, st = 2 * s + tau;
              if (ps == qt || rs == st) continue;
              v += dot(two[ps * nq + qt], two[rs * nq + st]).real();
            }
          r.two_rdm[((p * n_orb + q) * n_orb + rr) * n_orb + s] = v;
        }
  return r;
}

double contract_energy(const chem::MolecularIntegrals& ints, const RDMPair& rdms) {
  if (ints.n_orb != rdms.n_orb) throw ShapeError("contract_energy: orbital counts differ");
  double e = ints.core_energy;
  e += (ints.h.array() * rdms.one_rdm.array()).sum();
  double two = 0.0;
  for (std::size_t i = 0; i < ints.g.size(); ++i) two += ints.g[i] * rdms.two_rdm[i];
  return e + 0.5 * two;
}

}  // namespace qopt::qsim
