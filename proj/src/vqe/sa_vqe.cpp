#include <map>
#include <mutex>
#include <string>

#include "qopt/error.hpp"
#include "qopt/vqe/sa_vqe.hpp"

namespace qopt::vqe {

std::string method_label(const InnerOptimizer& optimizer) {
  struct {
    std::string operator()(const DifferentialEvolution& d) const {
      return "de_" + std::string(de::to_string(d.config.strategy)) +
             (d.config.crossover == de::Crossover::binomial ? "_bin" : "_exp");
    }
    std::string operator()(const GradientDescent&) const { return "gd"; }
    std::string operator()(const Bfgs&) const { return "bfgs"; }
  } visitor;
  return std::visit(visitor, optimizer);
}

namespace {

/// Ensemble objective with a θ → state-energy memo so trace points can carry
/// per-state energies without extra evaluations.
class EnsembleObjective {
 public:
  EnsembleObjective(const chem::QubitHamiltonian& h, const AnsatzSpec& ansatz,
                    std::span<const qsim::StateVector> states, const EnsembleSpec& weights)
      : h_(h), ansatz_(ansatz), states_(states), weights_(weights) {}

  double operator()(std::span<const double> theta) const {
    const EnsembleEnergy e = sa_energy(theta, h_, ansatz_, states_, weights_);
    std::lock_guard lock(mu_);
    ++count_;
    memo_.insert_or_assign(std::vector<double>(theta.begin(), theta.end()), e.energies);
    return e.e_sa;
  }

  std::vector<double> state_energies(std::span<const double> theta) const {
    {
      std::lock_guard lock(mu_);
      const auto it = memo_.find(std::vector<double>(theta.begin(), theta.end()));
      if (it != memo_.end()) return it->second;
    }
    return sa_energy(theta, h_, ansatz_, states_, weights_).energies;
  }

  std::size_t count() const {
    std::lock_guard lock(mu_);
    return count_;
  }

 private:
  const chem::QubitHamiltonian& h_;
  const AnsatzSpec& ansatz_;
  std::span<const qsim::StateVector> states_;
  const EnsembleSpec& weights_;
  mutable std::mutex mu_;
  mutable std::size_t count_ = 0;
  mutable std::map<std::vector<double>, std::vector<double>> memo_;
};

}  // namespace

SAVQEResult run_sa_vqe(const chem::QubitHamiltonian& h, const AnsatzSpec& ansatz,
                       std::span<const qsim::StateVector> initial_states, const EnsembleSpec& weights,
                       const InnerOptimizer& optimizer, std::vector<double> theta0, int macro_index) {
  weights.validate();
  if (h.n_qubits % 2 != 0) throw ShapeError("run_sa_vqe: odd qubit count");
  const std::size_t dim = ansatz.parameter_count();
  if (theta0.empty()) theta0.assign(dim, 0.0);
  if (theta0.size() != dim) throw ShapeError("run_sa_vqe: theta0 length does not match the ansatz");

  EnsembleObjective f(h, ansatz, initial_states, weights);
  const Objective objective = [&f](std::span<const double> x) { return f(x); };

  SAVQEResult r;
  auto record = [&](std::size_t evals, double value, std::span<const double> x) {
    r.trace.append({evals, TraceScope::optimizer_step, macro_index, value, f.state_energies(x)});
  };

  std::vector<double> best;
  try {
    if (dim == 0) {
      best = {};
      record(0, objective(best), best);
    } else if (const auto* d = std::get_if<DifferentialEvolution>(&optimizer)) {
      de::DEConfig cfg = d->config;
      cfg.initial_member = theta0;
      const auto bounds = de::Bounds::box(dim, -d->bound, d->bound);
      const auto res = de::de_minimize(
          objective, bounds, cfg,
          [&](const de::GenerationRecord& g, std::span<const double> x) { record(g.evaluations, g.best, x); });
      best = res.best_vector;
    } else if (const auto* g = std::get_if<GradientDescent>(&optimizer)) {
      const auto res = local::gradient_descent(objective, theta0, g->config,
                                               [&](const local::StepInfo& s) { record(s.evaluations, s.value, s.x); });
      best = res.x;
    } else {
      const auto& b = std::get<Bfgs>(optimizer);
      const auto res = local::bfgs_minimize(objective, theta0, b.config,
                                            [&](const local::StepInfo& s) { record(s.evaluations, s.value, s.x); });
      best = res.x;
    }
  } catch (const RunAborted& e) {
    throw RunAborted(e.what(), r.trace);
  } catch (const Error& e) {
    throw RunAborted(std::string("SA-VQE optimizer failed: ") + e.what(), r.trace);
  }

  r.evaluations = f.count();
  EnsembleEnergy fin = sa_energy(best, h, ansatz, initial_states, weights);
  r.theta_star = std::move(best);
  r.e_sa = fin.e_sa;
  r.state_energies = std::move(fin.energies);
  r.final_states = std::move(fin.states);
  for (const auto& s : r.final_states) r.rdms.push_back(qsim::measure_rdms(s, h.n_qubits / 2));
  return r;
}

}  // namespace qopt::vqe
