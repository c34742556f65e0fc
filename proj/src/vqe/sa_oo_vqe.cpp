#include <cmath>
#include <limits>

#include "qopt/chem/jordan_wigner.hpp"
#include "qopt/error.hpp"
#include "qopt/vqe/sa_oo_vqe.hpp"

namespace qopt::vqe {

void MacroConfig::validate() const {
  if (!(macro_tol > 0.0)) throw ConfigError("macro_tol must be positive");
  if (max_macro_iters == 0) throw ConfigError("max_macro_iters must be at least 1");
}

std::string_view to_string(MacroStatus s) noexcept {
  switch (s) {
    case MacroStatus::converged: return "converged";
    case MacroStatus::max_iterations: return "max_iterations";
    case MacroStatus::aborted: return "aborted";
  }
  return "?";
}

SAOOVQEResult run_sa_oo_vqe(const chem::MolecularIntegrals& integrals, const AnsatzSpec& ansatz,
                            const EnsembleSpec& weights, const InnerOptimizer& inner,
                            const OrbitalOptConfig& oo_config, const MacroConfig& macro) {
  macro.validate();
  weights.validate();
  const auto initial = build_initial_states(integrals.n_orb, integrals.n_elec);

  SAOOVQEResult out;
  out.integrals = integrals;
  out.theta.assign(ansatz.parameter_count(), 0.0);
  std::size_t cum = 0;
  int consecutive_failures = 0;
  bool have_energy = false;

  for (std::size_t it = 1; it <= macro.max_macro_iters; ++it) {
    const int index = static_cast<int>(it);
    MacroRecord rec;
    rec.macro_index = index;

    const chem::QubitHamiltonian h = chem::jordan_wigner(out.integrals);
    std::vector<double> theta0 = macro.warm_start ? out.theta : std::vector<double>(ansatz.parameter_count(), 0.0);
    SAVQEResult vqe;
    try {
      vqe = run_sa_vqe(h, ansatz, initial, weights, inner, std::move(theta0), index);
    } catch (const RunAborted& e) {
      out.trace.extend(e.partial_trace(), cum);
      if (!e.partial_trace().empty()) cum += e.partial_trace().events().back().cumulative_evaluations;
      rec.error = e.what();
      const double last = have_energy ? out.e_sa : std::numeric_limits<double>::quiet_NaN();
      rec.e_sa_vqe = rec.e_sa_oo = last;
      rec.e_states = out.state_energies;
      rec.cumulative_evaluations = cum;
      out.trace.append({cum, TraceScope::sa_oo_vqe_iteration, index, last, out.state_energies});
      out.macro_trace.push_back(std::move(rec));
      if (++consecutive_failures >= 2) {
        out.status = MacroStatus::aborted;
        break;
      }
      continue;
    }
    consecutive_failures = 0;
    out.trace.extend(vqe.trace, cum);
    cum += vqe.evaluations;
    rec.e_sa_vqe = vqe.e_sa;
    out.theta = vqe.theta_star;

    double e_after = vqe.e_sa;
    std::vector<double> states = vqe.state_energies;
    if (macro.optimize_orbitals) {
      const OrbitalOptResult oo = minimize_orbitals(out.integrals, vqe.rdms, weights, oo_config);
      rec.kappa_gradient_norm = oo.gradient_norm;
      rec.oo_warning = oo.warning;
      out.integrals = oo.rotated;
      e_after = oo.e_sa;
      states.clear();
      for (const auto& r : vqe.rdms) states.push_back(qsim::contract_energy(out.integrals, r));
    }
    rec.e_sa_oo = e_after;
    rec.e_states = states;
    rec.cumulative_evaluations = cum;
    out.trace.append({cum, TraceScope::sa_oo_vqe_iteration, index, e_after, states});

    const double previous = out.e_sa;
    out.e_sa = e_after;
    out.state_energies = std::move(states);
    out.macro_trace.push_back(std::move(rec));
    if (have_energy && std::abs(e_after - previous) < macro.macro_tol) {
      out.status = MacroStatus::converged;
      break;
    }
    have_energy = true;
  }
  out.evaluations = cum;
  return out;
}

}  // namespace qopt::vqe
